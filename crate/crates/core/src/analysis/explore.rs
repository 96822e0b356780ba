use crate::equivalence::{expand, Lts, Parallelism};
use crate::error::Result;
use crate::semantics::System;
use crate::syntax::Process;

/// The silent-step state space reachable from a term, possibly cut short by
/// the state bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StateSpace {
    pub lts: Lts,
    /// The bound was hit; `lts` is a prefix of the reachable space.
    pub truncated: bool,
    /// Built from silent steps only (`tau`, `rcf`, and all Webpi reductions).
    pub silent_only: bool,
    /// States whose successors were not (all) recorded because of the bound.
    pub unexpanded: Vec<usize>,
}

/// Breadth-first exploration of silent steps, expanding large frontiers in
/// parallel. Hitting `bound` sets [`StateSpace::truncated`] instead of
/// failing.
pub fn explore(system: &System, term: &Process, bound: usize) -> Result<StateSpace> {
    explore_with(system, term, bound, true)
}

/// As [`explore`], with parallel frontier expansion switched on or off. Both
/// settings produce identical spaces.
pub fn explore_with(
    system: &System,
    term: &Process,
    bound: usize,
    parallel: bool,
) -> Result<StateSpace> {
    let parallelism = if parallel {
        Parallelism::Auto
    } else {
        Parallelism::Sequential
    };
    let x = expand(
        term,
        bound,
        parallelism,
        |p| {
            Ok(system
                .silent_steps(p)?
                .into_iter()
                .map(|s| (s.label, s.target))
                .collect())
        },
        system,
    )?;
    Ok(StateSpace {
        lts: x.lts,
        truncated: x.truncated,
        silent_only: true,
        unexpanded: x.unexpanded.into_iter().collect(),
    })
}

/// Successful termination: `0`, or nothing but pending fractions.
pub fn is_inert(p: &Process) -> bool {
    match p {
        Process::Nil | Process::Fraction { .. } => true,
        Process::Par(cs) => cs.iter().all(is_inert),
        Process::Restrict(_, body) => is_inert(body),
        _ => false,
    }
}

/// Reachable states with no silent successor that are not inert, sorted.
/// This over-approximates deadlock: any stuck process is reported, not only
/// circular waits. On a truncated space, states cut off by the bound are
/// never reported.
pub fn find_deadlocks(space: &StateSpace) -> Vec<usize> {
    let mut has_out = vec![false; space.lts.states.len()];
    for (s, _, _) in &space.lts.edges {
        has_out[*s] = true;
    }
    (0..space.lts.states.len())
        .filter(|&s| !has_out[s])
        .filter(|s| space.unexpanded.binary_search(s).is_err())
        .filter(|&s| !is_inert(&space.lts.states[s]))
        .collect()
}
