use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

/// A channel, trigger or constant identifier.
///
/// User-written names match `[a-zA-Z][a-zA-Z0-9_']*`. Names starting with
/// `#` are produced by canonicalisation for bound names and never come out
/// of the parser.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Name(Arc<str>);

impl Name {
    pub fn new(text: impl AsRef<str>) -> Self {
        Name(Arc::from(text.as_ref()))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// Canonical bound name with the given binder height.
    pub(crate) fn canonical(height: usize) -> Self {
        Name::new(format!("#{height}"))
    }

    pub(crate) fn is_canonical(&self) -> bool {
        self.0.starts_with('#')
    }

    /// True if `text` is a legal user-written identifier.
    pub fn is_valid(text: &str) -> bool {
        let mut chars = text.chars();
        match chars.next() {
            Some(c) if c.is_ascii_alphabetic() => {}
            _ => return false,
        }
        chars.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'')
    }
}

impl fmt::Debug for Name {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Name {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for Name {
    fn from(s: &str) -> Self {
        Name::new(s)
    }
}

/// The calculus a term is interpreted in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Calculus {
    /// CCS with fraction processes.
    #[serde(rename = "ccsdp")]
    CcsDp,
    /// Asynchronous pi-calculus with workunits.
    #[serde(rename = "webpi")]
    WebPi,
}

impl Calculus {
    pub fn as_str(self) -> &'static str {
        match self {
            Calculus::CcsDp => "ccsdp",
            Calculus::WebPi => "webpi",
        }
    }
}

impl fmt::Display for Calculus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Calculus {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "ccsdp" | "ccs" => Ok(Calculus::CcsDp),
            "webpi" => Ok(Calculus::WebPi),
            other => Err(format!("unknown calculus `{other}` (expected ccsdp or webpi)")),
        }
    }
}

/// Abstract syntax of a process in either calculus.
///
/// The derived ordering is the total term order used to sort parallel
/// components and sum branches in canonical forms.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Process {
    #[default]
    Nil,
    Input(Name, Box<Process>),
    /// Synchronous output prefix (CCS^dp; `a!.0` is also tolerated in Webpi).
    Output(Name, Box<Process>),
    /// Asynchronous output atom (Webpi).
    OutputAtom(Name),
    Sum(Vec<Process>),
    Par(Vec<Process>),
    Restrict(Name, Box<Process>),
    Constant(Name),
    Fraction {
        numerator: Box<Process>,
        denominator: Box<Process>,
    },
    Workunit {
        body: Box<Process>,
        handler: Box<Process>,
        trigger: Name,
    },
}

impl Process {
    pub fn input(channel: impl Into<Name>, cont: Process) -> Self {
        Process::Input(channel.into(), Box::new(cont))
    }

    pub fn output(channel: impl Into<Name>, cont: Process) -> Self {
        Process::Output(channel.into(), Box::new(cont))
    }

    pub fn atom(channel: impl Into<Name>) -> Self {
        Process::OutputAtom(channel.into())
    }

    pub fn constant(name: impl Into<Name>) -> Self {
        Process::Constant(name.into())
    }

    pub fn restrict(name: impl Into<Name>, body: Process) -> Self {
        Process::Restrict(name.into(), Box::new(body))
    }

    pub fn fraction(numerator: Process, denominator: Process) -> Self {
        Process::Fraction {
            numerator: Box::new(numerator),
            denominator: Box::new(denominator),
        }
    }

    pub fn workunit(body: Process, handler: Process, trigger: impl Into<Name>) -> Self {
        Process::Workunit {
            body: Box::new(body),
            handler: Box::new(handler),
            trigger: trigger.into(),
        }
    }

    /// Parallel composition; collapses to the single component or `0`.
    pub fn par(components: Vec<Process>) -> Self {
        match components.len() {
            0 => Process::Nil,
            1 => components.into_iter().next().unwrap(),
            _ => Process::Par(components),
        }
    }

    /// Choice; collapses a single branch to itself.
    pub fn sum(branches: Vec<Process>) -> Self {
        match branches.len() {
            0 => Process::Nil,
            1 => branches.into_iter().next().unwrap(),
            _ => Process::Sum(branches),
        }
    }

    /// True for prefix-guarded terms, the only legal sum branches.
    pub fn is_guarded(&self) -> bool {
        matches!(
            self,
            Process::Input(..) | Process::Output(..) | Process::OutputAtom(_)
        )
    }

    pub fn is_nil(&self) -> bool {
        matches!(self, Process::Nil)
    }

    /// Number of operators (everything but `0`, constants and names).
    pub fn size(&self) -> usize {
        match self {
            Process::Nil | Process::Constant(_) => 0,
            Process::OutputAtom(_) => 1,
            Process::Input(_, p) | Process::Output(_, p) | Process::Restrict(_, p) => 1 + p.size(),
            Process::Sum(bs) => bs.len() - 1 + bs.iter().map(Process::size).sum::<usize>(),
            Process::Par(cs) => cs.len() - 1 + cs.iter().map(Process::size).sum::<usize>(),
            Process::Fraction {
                numerator,
                denominator,
            } => 1 + numerator.size() + denominator.size(),
            Process::Workunit { body, handler, .. } => 1 + body.size() + handler.size(),
        }
    }

    /// Visits every constant reference in the term.
    pub fn for_each_constant(&self, f: &mut impl FnMut(&Name)) {
        match self {
            Process::Nil | Process::OutputAtom(_) => {}
            Process::Constant(c) => f(c),
            Process::Input(_, p) | Process::Output(_, p) | Process::Restrict(_, p) => {
                p.for_each_constant(f)
            }
            Process::Sum(ps) | Process::Par(ps) => ps.iter().for_each(|p| p.for_each_constant(f)),
            Process::Fraction {
                numerator,
                denominator,
            } => {
                numerator.for_each_constant(f);
                denominator.for_each_constant(f);
            }
            Process::Workunit { body, handler, .. } => {
                body.for_each_constant(f);
                handler.for_each_constant(f);
            }
        }
    }
}

