use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::semantics::{Rule, Step, System};
use crate::syntax::{pretty_print, Calculus, DefinitionEnv, Process};

/// How [`trace`] picks among the enabled silent steps. Steps are always
/// considered in canonical order of their successors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Strategy {
    FirstEnabled,
    /// Uniform choice driven by a ChaCha8 generator seeded with the trace
    /// seed.
    Random,
    /// Take the `i`-th enabled step at step `i`; indices past the number of
    /// enabled steps are clamped, and missing entries mean 0.
    Scripted(Vec<usize>),
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Strategy::FirstEnabled => f.write_str("first"),
            Strategy::Random => f.write_str("random"),
            Strategy::Scripted(_) => f.write_str("scripted"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceStep {
    /// Canonical state reached by this step.
    pub term: Process,
    pub rule: Rule,
    /// `tau` or `rcf` in CCS^dp; the channel or trigger name in Webpi.
    pub label: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionTrace {
    pub calculus: Calculus,
    pub initial: Process,
    pub steps: Vec<TraceStep>,
    pub seed: u64,
    pub strategy: Strategy,
}

/// Follows one silent path of at most `max_steps` steps, stopping early at
/// a state without silent successors.
pub fn trace(
    system: &System,
    term: &Process,
    strategy: Strategy,
    seed: u64,
    max_steps: usize,
) -> Result<ReductionTrace> {
    system.check(term)?;
    let initial = system.normalize(term);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut current = initial.clone();
    let mut steps = Vec::new();
    for i in 0..max_steps {
        let mut enabled = system.silent_steps(&current)?;
        if enabled.is_empty() {
            break;
        }
        let pick = match &strategy {
            Strategy::FirstEnabled => 0,
            Strategy::Random => rng.gen_range(0..enabled.len()),
            Strategy::Scripted(script) => {
                script.get(i).copied().unwrap_or(0).min(enabled.len() - 1)
            }
        };
        let step = enabled.swap_remove(pick);
        let label = step_label(system.calculus(), &step);
        current = step.target.clone();
        steps.push(TraceStep {
            term: step.target,
            rule: step.rule,
            label,
        });
    }
    Ok(ReductionTrace {
        calculus: system.calculus(),
        initial,
        steps,
        seed,
        strategy,
    })
}

fn step_label(calculus: Calculus, step: &Step) -> String {
    match (calculus, &step.name) {
        (Calculus::WebPi, Some(n)) => n.to_string(),
        _ => step.label.to_string(),
    }
}

/// Serialised trace. `strategy` and `initial` extend the minimal
/// `{calculus, seed, steps}` shape.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceJson {
    pub calculus: Calculus,
    pub seed: u64,
    pub strategy: String,
    pub initial: String,
    pub steps: Vec<TraceStepJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStepJson {
    pub term: String,
    pub rule: String,
    pub label: String,
}

impl ReductionTrace {
    pub fn to_json(&self, env: &DefinitionEnv) -> TraceJson {
        TraceJson {
            calculus: self.calculus,
            seed: self.seed,
            strategy: self.strategy.to_string(),
            initial: pretty_print(&self.initial, env),
            steps: self
                .steps
                .iter()
                .map(|s| TraceStepJson {
                    term: pretty_print(&s.term, env),
                    rule: s.rule.trace_name().to_string(),
                    label: s.label.clone(),
                })
                .collect(),
        }
    }

    /// Every state of the trace, initial state first.
    pub fn states(&self) -> impl Iterator<Item = &Process> {
        std::iter::once(&self.initial).chain(self.steps.iter().map(|s| &s.term))
    }
}
