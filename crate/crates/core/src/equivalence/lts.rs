use std::collections::{BTreeSet, HashMap};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::semantics::{Label, System};
use crate::syntax::Process;

/// A finite labelled transition system over canonical terms.
///
/// States are numbered in breadth-first order, expanding successors in
/// canonical order, so the numbering depends only on the initial term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lts {
    pub states: Vec<Process>,
    pub edges: Vec<(usize, Label, usize)>,
    pub initial: usize,
}

impl Lts {
    pub fn successors(&self, state: usize) -> impl Iterator<Item = &(usize, Label, usize)> {
        self.edges.iter().filter(move |(s, _, _)| *s == state)
    }

    /// Edge targets grouped by source.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.states.len()];
        for (s, _, t) in &self.edges {
            adj[*s].push(*t);
        }
        adj
    }
}

/// Every state reachable from `term` through [`System::transitions`].
/// Fails once more than `bound` states have been discovered.
pub fn build_lts(system: &System, term: &Process, bound: usize) -> Result<Lts> {
    let x = expand(term, bound, Parallelism::Auto, |p| system.transitions(p), system)?;
    if x.truncated {
        return Err(Error::StateBoundExceeded(bound));
    }
    Ok(x.lts)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Parallelism {
    Sequential,
    /// Parallel expansion for frontiers large enough to pay for it.
    Auto,
}

const PARALLEL_FRONTIER: usize = 64;

pub(crate) struct Expansion {
    pub lts: Lts,
    pub truncated: bool,
    /// States whose outgoing edges are incomplete because of the bound.
    pub unexpanded: BTreeSet<usize>,
}

/// Level-synchronous breadth-first expansion. Successors of a whole
/// frontier are computed (possibly in parallel) and then merged in frontier
/// order, which reproduces the sequential numbering exactly.
pub(crate) fn expand<F>(
    term: &Process,
    bound: usize,
    parallelism: Parallelism,
    succ: F,
    system: &System,
) -> Result<Expansion>
where
    F: Fn(&Process) -> Result<Vec<(Label, Process)>> + Sync,
{
    system.check(term)?;
    let init = system.normalize(term);
    let mut index: HashMap<Process, usize> = HashMap::new();
    let mut states = vec![init.clone()];
    index.insert(init, 0);
    let mut edges = Vec::new();
    let mut unexpanded = BTreeSet::new();
    let mut truncated = bound == 0;
    let mut frontier = vec![0usize];

    while !frontier.is_empty() && !truncated {
        let expanded: Vec<Vec<(Label, Process)>> =
            if parallelism == Parallelism::Auto && frontier.len() >= PARALLEL_FRONTIER {
                frontier
                    .par_iter()
                    .map(|&s| succ(&states[s]))
                    .collect::<Result<_>>()?
            } else {
                frontier
                    .iter()
                    .map(|&s| succ(&states[s]))
                    .collect::<Result<_>>()?
            };
        let mut next = Vec::new();
        for (&src, moves) in frontier.iter().zip(expanded) {
            for (label, target) in moves {
                let dst = match index.get(&target) {
                    Some(&d) => d,
                    None if states.len() >= bound => {
                        truncated = true;
                        unexpanded.insert(src);
                        continue;
                    }
                    None => {
                        let d = states.len();
                        index.insert(target.clone(), d);
                        states.push(target);
                        next.push(d);
                        d
                    }
                };
                edges.push((src, label, dst));
            }
        }
        frontier = next;
    }
    unexpanded.extend(frontier);
    if bound == 0 {
        unexpanded.insert(0);
    }
    Ok(Expansion {
        lts: Lts {
            states,
            edges,
            initial: 0,
        },
        truncated,
        unexpanded,
    })
}
