//! CCS^dp: CCS with fraction processes.
//!
//! A fraction `{ N / D }` composed in parallel with components that match
//! `D` replaces them by `N` in one atomic step and disappears. It has no
//! behaviour of its own and waits until a match exists.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use crate::canonical::{canonicalize, unfold, NormalForm};
use crate::equivalence::{bisim_terms, MatchMode, DEFAULT_UNFOLD_DEPTH};
use crate::error::{Error, Result};
use crate::semantics::{Label, Rule, Step, System};
use crate::syntax::{alpha_equivalent, validate_calculus, Calculus, DefinitionEnv, Name, Process};

/// Sibling sets larger than this are only searched for single-component
/// matches; the sub-multiset search is exponential.
const MAX_SUBSET_SIBLINGS: usize = 12;

/// Canonical form of a CCS^dp term.
pub fn normalize(term: &Process, _env: &DefinitionEnv) -> Result<NormalForm> {
    check_ccs(term)?;
    Ok(NormalForm::of(term))
}

/// All labelled transitions of `term`, with canonical successors.
pub fn transitions(
    term: &Process,
    env: &DefinitionEnv,
    mode: MatchMode,
) -> Result<Vec<(Label, Process)>> {
    CcsEngine::new(env, mode).transitions(term)
}

/// Canonical successors of the silent (`tau` and `rcf`) transitions.
pub fn reduce_step(term: &Process, env: &DefinitionEnv, mode: MatchMode) -> Result<Vec<Process>> {
    let mut out: Vec<Process> = transitions(term, env, mode)?
        .into_iter()
        .filter(|(l, _)| l.is_silent())
        .map(|(_, p)| p)
        .collect();
    out.sort();
    out.dedup();
    Ok(out)
}

/// Does `candidate` match a fraction denominator under `mode`?
pub fn matches(
    candidate: &Process,
    denominator: &Process,
    mode: MatchMode,
    env: &DefinitionEnv,
) -> Result<bool> {
    match mode {
        MatchMode::Syntactic => Ok(alpha_equivalent(candidate, denominator)),
        MatchMode::Congruence { unfold_depth } => Ok(canonicalize(&unfold(candidate, env, unfold_depth))
            == canonicalize(&unfold(denominator, env, unfold_depth))),
        MatchMode::Bisim { state_bound } => {
            let inner = System::new(
                Calculus::CcsDp,
                env.clone(),
                MatchMode::Congruence {
                    unfold_depth: DEFAULT_UNFOLD_DEPTH,
                },
            );
            bisim_terms(&inner, candidate, denominator, state_bound)
        }
    }
}

fn check_ccs(term: &Process) -> Result<()> {
    let v = validate_calculus(term, Calculus::CcsDp);
    if v.is_empty() {
        Ok(())
    } else {
        Err(Error::CalculusViolation(v))
    }
}

/// Transition engine with canonicalised constant bodies cached.
pub(crate) struct CcsEngine {
    env: DefinitionEnv,
    mode: MatchMode,
    bodies: BTreeMap<Name, Process>,
    matcher: OnceLock<Box<System>>,
}

impl CcsEngine {
    pub(crate) fn new(env: &DefinitionEnv, mode: MatchMode) -> Self {
        // canonical bodies: a user binder in a body never captures the
        // global names of constants it references
        let bodies = env
            .iter()
            .map(|(n, b)| (n.clone(), canonicalize(b)))
            .collect();
        CcsEngine {
            env: env.clone(),
            mode,
            bodies,
            matcher: OnceLock::new(),
        }
    }

    pub(crate) fn transitions(&self, term: &Process) -> Result<Vec<(Label, Process)>> {
        check_ccs(term)?;
        self.env.check_closed(term)?;
        let start = canonicalize(term);
        let mut out: Vec<(Label, Process)> = self
            .trans(&start)?
            .into_iter()
            .map(|(l, p)| {
                let l = match l {
                    Label::Reconfig { numerator, target } => {
                        Label::reconfig(canonicalize(&numerator), canonicalize(&target))
                    }
                    other => other,
                };
                (l, canonicalize(&p))
            })
            .collect();
        out.sort();
        out.dedup();
        Ok(out)
    }

    pub(crate) fn silent_steps(&self, term: &Process) -> Result<Vec<Step>> {
        let mut steps: Vec<Step> = self
            .transitions(term)?
            .into_iter()
            .filter(|(l, _)| l.is_silent())
            .map(|(label, target)| Step {
                rule: if label.is_reconfig() {
                    Rule::Fraction
                } else {
                    Rule::Sync
                },
                label,
                name: None,
                target,
            })
            .collect();
        steps.sort_by(|a, b| (&a.target, &a.label).cmp(&(&b.target, &b.label)));
        Ok(steps)
    }

    fn trans(&self, p: &Process) -> Result<Vec<(Label, Process)>> {
        Ok(match p {
            Process::Nil | Process::Fraction { .. } | Process::Workunit { .. } => Vec::new(),
            Process::Input(a, cont) => vec![(Label::Input(a.clone()), (**cont).clone())],
            Process::Output(a, cont) => vec![(Label::Output(a.clone()), (**cont).clone())],
            Process::OutputAtom(a) => vec![(Label::Output(a.clone()), Process::Nil)],
            Process::Sum(branches) => {
                let mut out = Vec::new();
                for b in branches {
                    out.extend(self.trans(b)?);
                }
                out
            }
            Process::Constant(c) => {
                let body = self
                    .bodies
                    .get(c)
                    .ok_or_else(|| Error::UnboundConstant(c.to_string()))?;
                self.trans(body)?
            }
            Process::Restrict(x, body) => self
                .trans(body)?
                .into_iter()
                .filter(|(l, _)| !matches!(l, Label::Input(a) | Label::Output(a) if a == x))
                .map(|(l, q)| (l, Process::Restrict(x.clone(), Box::new(q))))
                .collect(),
            Process::Par(components) => self.par_trans(components)?,
        })
    }

    fn par_trans(&self, cs: &[Process]) -> Result<Vec<(Label, Process)>> {
        let per: Vec<Vec<(Label, Process)>> =
            cs.iter().map(|c| self.trans(c)).collect::<Result<_>>()?;
        let mut out = Vec::new();

        // interleaving
        for (i, moves) in per.iter().enumerate() {
            for (l, ci) in moves {
                let mut next = cs.to_vec();
                next[i] = ci.clone();
                out.push((l.clone(), Process::Par(next)));
            }
        }

        // synchronisation
        for (i, left) in per.iter().enumerate() {
            for (j, right) in per.iter().enumerate() {
                if i == j {
                    continue;
                }
                for (l, ci) in left {
                    let Label::Output(a) = l else { continue };
                    for (r, cj) in right {
                        if matches!(r, Label::Input(b) if b == a) {
                            let mut next = cs.to_vec();
                            next[i] = ci.clone();
                            next[j] = cj.clone();
                            out.push((Label::Tau, Process::Par(next)));
                        }
                    }
                }
            }
        }

        // fraction replacement
        for (f, frac) in cs.iter().enumerate() {
            let Process::Fraction {
                numerator,
                denominator,
            } = frac
            else {
                continue;
            };
            let siblings: Vec<usize> = (0..cs.len()).filter(|&k| k != f).collect();
            for chosen in self.sub_multisets(cs, &siblings) {
                let candidate = canonicalize(&Process::par(
                    chosen.iter().map(|&k| cs[k].clone()).collect(),
                ));
                if !self.matches(&candidate, denominator)? {
                    continue;
                }
                let mut rest: Vec<Process> = (0..cs.len())
                    .filter(|k| *k != f && !chosen.contains(k))
                    .map(|k| cs[k].clone())
                    .collect();
                rest.push((**numerator).clone());
                out.push((
                    Label::reconfig((**numerator).clone(), candidate),
                    Process::par(rest),
                ));
            }
        }
        Ok(out)
    }

    /// Non-empty sub-multisets of `siblings`, one index set per distinct
    /// multiset of components.
    fn sub_multisets(&self, cs: &[Process], siblings: &[usize]) -> Vec<Vec<usize>> {
        let mut seen = std::collections::BTreeSet::new();
        let mut out = Vec::new();
        if siblings.len() > MAX_SUBSET_SIBLINGS {
            for &k in siblings {
                if seen.insert(vec![&cs[k]]) {
                    out.push(vec![k]);
                }
            }
            return out;
        }
        for mask in 1u32..(1u32 << siblings.len()) {
            let chosen: Vec<usize> = siblings
                .iter()
                .enumerate()
                .filter(|(bit, _)| mask & (1 << bit) != 0)
                .map(|(_, &k)| k)
                .collect();
            let mut key: Vec<&Process> = chosen.iter().map(|&k| &cs[k]).collect();
            key.sort();
            if seen.insert(key) {
                out.push(chosen);
            }
        }
        out
    }

    fn matches(&self, candidate: &Process, denominator: &Process) -> Result<bool> {
        match self.mode {
            // both sides are canonical here
            MatchMode::Syntactic => Ok(candidate == denominator),
            MatchMode::Congruence { .. } => matches(candidate, denominator, self.mode, &self.env),
            MatchMode::Bisim { state_bound } => {
                let inner = self.matcher.get_or_init(|| {
                    Box::new(System::new(
                        Calculus::CcsDp,
                        self.env.clone(),
                        MatchMode::Congruence {
                            unfold_depth: DEFAULT_UNFOLD_DEPTH,
                        },
                    ))
                });
                bisim_terms(inner, candidate, denominator, state_bound)
            }
        }
    }
}
