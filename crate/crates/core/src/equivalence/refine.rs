use std::collections::HashMap;

use super::Lts;

/// Block number of every state in the coarsest stable partition.
///
/// Labels are compared by their printed class (`tau`, `rcf`, `in a`, ...),
/// so reconfiguration payloads do not distinguish states. Refinement starts
/// from a single block and splits blocks by the set of (label, target block)
/// pairs of their states until nothing changes.
pub fn bisim_partition(lts: &Lts) -> Vec<usize> {
    let n = lts.states.len();
    let mut classes: HashMap<String, usize> = HashMap::new();
    let mut out: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for (s, l, t) in &lts.edges {
        let next = classes.len();
        let c = *classes.entry(l.to_string()).or_insert(next);
        out[*s].push((c, *t));
    }

    let mut block = vec![0usize; n];
    let mut count = usize::from(n > 0);
    loop {
        let mut ids: HashMap<(usize, Vec<(usize, usize)>), usize> = HashMap::new();
        let mut next_block = vec![0usize; n];
        for s in 0..n {
            let mut sig: Vec<(usize, usize)> = out[s].iter().map(|&(c, t)| (c, block[t])).collect();
            sig.sort_unstable();
            sig.dedup();
            let fresh = ids.len();
            next_block[s] = *ids.entry((block[s], sig)).or_insert(fresh);
        }
        let new_count = ids.len();
        block = next_block;
        // blocks only ever split, so an unchanged count means a fixpoint
        if new_count == count {
            return block;
        }
        count = new_count;
    }
}

/// Are states `s1` and `s2` of `lts` strongly bisimilar?
pub fn strong_bisim(lts: &Lts, s1: usize, s2: usize) -> bool {
    assert!(s1 < lts.states.len() && s2 < lts.states.len(), "state index out of range");
    if s1 == s2 {
        return true;
    }
    let block = bisim_partition(lts);
    block[s1] == block[s2]
}
