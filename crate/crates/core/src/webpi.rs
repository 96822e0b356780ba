//! Webpi-infinity: asynchronous pi-calculus with workunits.
//!
//! `wu(P ; Q ; x)` runs `P`; an output on the trigger `x`, from outside the
//! unit or from the top level of `P`, discards the unit and continues as
//! `Q`. Communication crosses workunit boundaries in both directions.

use std::collections::BTreeMap;

use crate::canonical::canonicalize;
use crate::error::{Error, Result};
use crate::semantics::{Label, Rule, Step};
use crate::syntax::{validate_calculus, Calculus, DefinitionEnv, Name, Process};

/// A Webpi term together with its definitions.
#[derive(Clone, Debug)]
pub struct WebPiState<'e> {
    pub term: Process,
    pub env: &'e DefinitionEnv,
}

impl<'e> WebPiState<'e> {
    pub fn new(term: Process, env: &'e DefinitionEnv) -> Self {
        WebPiState { term, env }
    }
}

/// One applicable rule instance.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Interaction {
    pub rule: Rule,
    pub name: Name,
}

impl std::fmt::Display for Interaction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} on {}", self.rule, self.name)
    }
}

/// All one-step successors, in canonical form.
pub fn wp_reduce<'e>(state: &WebPiState<'e>) -> Result<Vec<WebPiState<'e>>> {
    let steps = WebPiEngine::new(state.env).steps(&state.term)?;
    let mut targets: Vec<Process> = steps.into_iter().map(|s| s.target).collect();
    targets.dedup();
    Ok(targets
        .into_iter()
        .map(|term| WebPiState::new(term, state.env))
        .collect())
}

/// One rule instance per distinct successor of [`wp_reduce`], in the same
/// order.
pub fn wp_enabled_interactions(state: &WebPiState<'_>) -> Result<Vec<(Interaction, Process)>> {
    let steps = WebPiEngine::new(state.env).steps(&state.term)?;
    let mut out: Vec<(Interaction, Process)> = Vec::new();
    for s in steps {
        if out.last().is_some_and(|(_, t)| *t == s.target) {
            continue;
        }
        let name = s.name.expect("webpi steps always name their channel");
        out.push((Interaction { rule: s.rule, name }, s.target));
    }
    Ok(out)
}

#[derive(Clone, Debug)]
enum Act {
    Out { name: Name, crossed: bool },
    In { name: Name, crossed: bool },
    /// A workunit ready to be triggered by an output on `name`.
    Accept(Name),
    Silent(Rule, Name),
}

impl Act {
    fn blocked_by(&self, x: &Name) -> bool {
        match self {
            Act::Out { name, .. } | Act::In { name, .. } | Act::Accept(name) => name == x,
            Act::Silent(..) => false,
        }
    }
}

pub(crate) struct WebPiEngine {
    env: DefinitionEnv,
    bodies: BTreeMap<Name, Process>,
}

impl WebPiEngine {
    pub(crate) fn new(env: &DefinitionEnv) -> Self {
        let bodies = env
            .iter()
            .map(|(n, b)| (n.clone(), canonicalize(b)))
            .collect();
        WebPiEngine {
            env: env.clone(),
            bodies,
        }
    }

    /// Distinct silent steps sorted by (successor, rule, name).
    pub(crate) fn steps(&self, term: &Process) -> Result<Vec<Step>> {
        let v = validate_calculus(term, Calculus::WebPi);
        if !v.is_empty() {
            return Err(Error::CalculusViolation(v));
        }
        self.env.check_closed(term)?;
        let start = canonicalize(term);
        let mut raw: Vec<(Process, Rule, Name)> = self
            .acts(&start)?
            .into_iter()
            .filter_map(|(a, p)| match a {
                Act::Silent(rule, name) => Some((canonicalize(&p), rule, name)),
                _ => None,
            })
            .collect();
        raw.sort();
        raw.dedup();
        Ok(raw
            .into_iter()
            .map(|(target, rule, name)| Step {
                label: match rule {
                    Rule::Trigger => Label::Trigger,
                    Rule::Body => Label::Body,
                    _ => Label::Comm,
                },
                rule,
                name: Some(name),
                target,
            })
            .collect())
    }

    fn acts(&self, p: &Process) -> Result<Vec<(Act, Process)>> {
        Ok(match p {
            Process::Nil | Process::Fraction { .. } => Vec::new(),
            Process::OutputAtom(x) => vec![(
                Act::Out {
                    name: x.clone(),
                    crossed: false,
                },
                Process::Nil,
            )],
            Process::Output(x, cont) => vec![(
                Act::Out {
                    name: x.clone(),
                    crossed: false,
                },
                (**cont).clone(),
            )],
            Process::Input(x, cont) => vec![(
                Act::In {
                    name: x.clone(),
                    crossed: false,
                },
                (**cont).clone(),
            )],
            Process::Sum(branches) => {
                let mut out = Vec::new();
                for b in branches {
                    out.extend(self.acts(b)?);
                }
                out
            }
            Process::Constant(c) => {
                let body = self
                    .bodies
                    .get(c)
                    .ok_or_else(|| Error::UnboundConstant(c.to_string()))?;
                self.acts(body)?
            }
            Process::Restrict(x, body) => self
                .acts(body)?
                .into_iter()
                .filter(|(a, _)| !a.blocked_by(x))
                .map(|(a, q)| (a, Process::Restrict(x.clone(), Box::new(q))))
                .collect(),
            Process::Par(cs) => self.par_acts(cs)?,
            Process::Workunit {
                body,
                handler,
                trigger,
            } => {
                let wrap = |q: Process| Process::Workunit {
                    body: Box::new(q),
                    handler: handler.clone(),
                    trigger: trigger.clone(),
                };
                let mut out = vec![(Act::Accept(trigger.clone()), (**handler).clone())];
                for (a, q) in self.acts(body)? {
                    match a {
                        Act::Out { name, .. } => {
                            if name == *trigger {
                                out.push((
                                    Act::Silent(Rule::Trigger, name.clone()),
                                    (**handler).clone(),
                                ));
                            }
                            out.push((Act::Out { name, crossed: true }, wrap(q)));
                        }
                        Act::In { name, .. } => {
                            out.push((Act::In { name, crossed: true }, wrap(q)))
                        }
                        Act::Accept(name) => out.push((Act::Accept(name), wrap(q))),
                        Act::Silent(_, name) => out.push((Act::Silent(Rule::Body, name), wrap(q))),
                    }
                }
                out
            }
        })
    }

    fn par_acts(&self, cs: &[Process]) -> Result<Vec<(Act, Process)>> {
        let per: Vec<Vec<(Act, Process)>> =
            cs.iter().map(|c| self.acts(c)).collect::<Result<_>>()?;
        let mut out = Vec::new();
        for (i, moves) in per.iter().enumerate() {
            for (a, ci) in moves {
                let mut next = cs.to_vec();
                next[i] = ci.clone();
                out.push((a.clone(), Process::Par(next)));
            }
        }
        for (i, left) in per.iter().enumerate() {
            for (j, right) in per.iter().enumerate() {
                if i == j {
                    continue;
                }
                for (a, ci) in left {
                    let Act::Out { name, crossed } = a else {
                        continue;
                    };
                    for (b, cj) in right {
                        let rule = match b {
                            Act::In { name: m, crossed: c2 } if m == name => {
                                if *crossed || *c2 {
                                    Rule::TransparentComm
                                } else {
                                    Rule::Comm
                                }
                            }
                            Act::Accept(m) if m == name => Rule::Trigger,
                            _ => continue,
                        };
                        let mut next = cs.to_vec();
                        next[i] = ci.clone();
                        next[j] = cj.clone();
                        out.push((Act::Silent(rule, name.clone()), Process::Par(next)));
                    }
                }
            }
        }
        Ok(out)
    }
}
