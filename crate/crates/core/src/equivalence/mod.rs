//! Labelled transition systems and strong bisimilarity.

mod lts;
mod refine;

use crate::error::Result;
use crate::semantics::System;
use crate::syntax::Process;

pub use lts::{build_lts, Lts};
pub(crate) use lts::{expand, Parallelism};
pub use refine::{bisim_partition, strong_bisim};

/// Default number of guards under which Congruence matching unfolds
/// constants.
pub const DEFAULT_UNFOLD_DEPTH: usize = 8;

/// Default cap on the number of states of any constructed LTS.
pub const DEFAULT_STATE_BOUND: usize = 10_000;

/// How a fraction denominator is compared with a candidate component.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum MatchMode {
    /// Alpha-equivalence of canonical forms; constants are compared by name.
    #[default]
    Syntactic,
    /// Equal normal forms after unfolding constants to the given depth.
    Congruence { unfold_depth: usize },
    /// Strong bisimilarity of the two LTSs, each limited to `state_bound`
    /// states.
    Bisim { state_bound: usize },
}

/// Are `t1` and `t2` strongly bisimilar? Both LTSs must fit in `bound`
/// states.
pub fn bisim_terms(system: &System, t1: &Process, t2: &Process, bound: usize) -> Result<bool> {
    let a = build_lts(system, t1, bound)?;
    let b = build_lts(system, t2, bound)?;
    let offset = a.states.len();
    let union = Lts {
        states: a.states.into_iter().chain(b.states).collect(),
        edges: a
            .edges
            .into_iter()
            .chain(
                b.edges
                    .into_iter()
                    .map(|(s, l, t)| (s + offset, l, t + offset)),
            )
            .collect(),
        initial: a.initial,
    };
    Ok(strong_bisim(&union, a.initial, b.initial + offset))
}
