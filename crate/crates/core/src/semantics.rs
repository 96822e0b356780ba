//! Labels, rule names and the calculus-independent view of a system.

use std::fmt;

use crate::canonical::canonicalize;
use crate::ccsdp::CcsEngine;
use crate::equivalence::MatchMode;
use crate::error::{Error, Result};
use crate::syntax::{validate_calculus, Calculus, DefinitionEnv, Name, Process};
use crate::webpi::WebPiEngine;

/// Transition label.
///
/// `Input`, `Output`, `Tau` and `Reconfig` come from CCS^dp; `Comm`, `Body`
/// and `Trigger` label the silent Webpi reductions.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Label {
    Input(Name),
    Output(Name),
    Tau,
    /// A fraction replaced `target` by `numerator`. The payload is for
    /// diagnostics only and is erased when comparing behaviour.
    Reconfig {
        numerator: Box<Process>,
        target: Box<Process>,
    },
    Comm,
    Body,
    Trigger,
}

impl Label {
    pub fn reconfig(numerator: Process, target: Process) -> Self {
        Label::Reconfig {
            numerator: Box::new(numerator),
            target: Box::new(target),
        }
    }

    /// True for labels that fire without an external partner.
    pub fn is_silent(&self) -> bool {
        !matches!(self, Label::Input(_) | Label::Output(_))
    }

    pub fn is_reconfig(&self) -> bool {
        matches!(self, Label::Reconfig { .. })
    }
}

/// Serialised form: `tau`, `rcf`, `in a`, `out a`, `comm`, `body`, `trigger`.
/// Reconfiguration payloads are not part of it.
impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Input(a) => write!(f, "in {a}"),
            Label::Output(a) => write!(f, "out {a}"),
            Label::Tau => f.write_str("tau"),
            Label::Reconfig { .. } => f.write_str("rcf"),
            Label::Comm => f.write_str("comm"),
            Label::Body => f.write_str("body"),
            Label::Trigger => f.write_str("trigger"),
        }
    }
}

/// The reduction rule behind a silent step.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Rule {
    /// CCS^dp synchronisation of complementary actions.
    Sync,
    /// CCS^dp fraction replacement.
    Fraction,
    /// Webpi communication at one parallel level.
    Comm,
    /// Webpi communication across a workunit boundary.
    TransparentComm,
    /// Webpi reduction inside a workunit body.
    Body,
    /// Webpi handler activation.
    Trigger,
}

impl Rule {
    /// Name used in serialised traces.
    pub fn trace_name(self) -> &'static str {
        match self {
            Rule::Sync => "sync",
            Rule::Fraction => "fraction",
            Rule::Comm | Rule::TransparentComm => "comm",
            Rule::Body => "body",
            Rule::Trigger => "trigger",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rule::Sync => "SYNC",
            Rule::Fraction => "FRACTION",
            Rule::Comm => "COMM",
            Rule::TransparentComm => "TRANSPARENT-COMM",
            Rule::Body => "BODY",
            Rule::Trigger => "TRIGGER",
        })
    }
}

/// One silent reduction with the rule that produced it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Step {
    pub rule: Rule,
    pub label: Label,
    /// Channel or trigger involved, when the rule has one.
    pub name: Option<Name>,
    /// Canonical successor.
    pub target: Process,
}

/// A set of definitions interpreted in one calculus under one matching
/// policy. This is the entry point used by exploration and analysis.
pub struct System {
    calculus: Calculus,
    env: DefinitionEnv,
    mode: MatchMode,
    ccs: Option<CcsEngine>,
    webpi: Option<WebPiEngine>,
}

impl System {
    pub fn new(calculus: Calculus, env: DefinitionEnv, mode: MatchMode) -> Self {
        let (ccs, webpi) = match calculus {
            Calculus::CcsDp => (Some(CcsEngine::new(&env, mode)), None),
            Calculus::WebPi => (None, Some(WebPiEngine::new(&env))),
        };
        System {
            calculus,
            env,
            mode,
            ccs,
            webpi,
        }
    }

    pub fn calculus(&self) -> Calculus {
        self.calculus
    }

    pub fn env(&self) -> &DefinitionEnv {
        &self.env
    }

    pub fn mode(&self) -> MatchMode {
        self.mode
    }

    pub fn check(&self, term: &Process) -> Result<()> {
        let violations = validate_calculus(term, self.calculus);
        if !violations.is_empty() {
            return Err(Error::CalculusViolation(violations));
        }
        self.env.check_closed(term)
    }

    pub fn normalize(&self, term: &Process) -> Process {
        canonicalize(term)
    }

    /// Every labelled transition, open actions included, with canonical
    /// successors. For Webpi these are the silent reductions only.
    pub fn transitions(&self, term: &Process) -> Result<Vec<(Label, Process)>> {
        match (&self.ccs, &self.webpi) {
            (Some(ccs), _) => ccs.transitions(term),
            (_, Some(wp)) => Ok(wp
                .steps(term)?
                .into_iter()
                .map(|s| (s.label, s.target))
                .collect()),
            _ => unreachable!(),
        }
    }

    /// Silent reductions, sorted by successor then rule.
    pub fn silent_steps(&self, term: &Process) -> Result<Vec<Step>> {
        match (&self.ccs, &self.webpi) {
            (Some(ccs), _) => ccs.silent_steps(term),
            (_, Some(wp)) => wp.steps(term),
            _ => unreachable!(),
        }
    }
}
