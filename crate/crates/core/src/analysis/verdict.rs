use std::fmt;

use super::StateSpace;

/// Bounded answer to "does every run stop?".
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// Acyclic and fully explored.
    Terminates,
    /// A reachable cycle; the witness starts and ends at the same state.
    Diverges(Vec<usize>),
    /// No cycle in the explored prefix, but the bound was hit.
    Unknown,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Terminates => f.write_str("terminates"),
            Verdict::Diverges(_) => f.write_str("diverges"),
            Verdict::Unknown => f.write_str("unknown"),
        }
    }
}

pub fn check_termination(space: &StateSpace) -> Verdict {
    match find_cycle(&space.lts.adjacency(), space.lts.initial) {
        Some(cycle) => Verdict::Diverges(cycle),
        None if space.truncated => Verdict::Unknown,
        None => Verdict::Terminates,
    }
}

/// Iterative depth-first search from `root`; returns the first cycle closed
/// by a back edge, as `[s, ..., s]`.
fn find_cycle(adj: &[Vec<usize>], root: usize) -> Option<Vec<usize>> {
    #[derive(Clone, Copy, PartialEq)]
    enum Colour {
        White,
        Grey,
        Black,
    }
    if adj.is_empty() {
        return None;
    }
    let mut colour = vec![Colour::White; adj.len()];
    let mut path: Vec<usize> = vec![root];
    let mut cursor: Vec<usize> = vec![0];
    colour[root] = Colour::Grey;
    while let Some(&top) = path.last() {
        let i = cursor.last_mut().expect("cursor tracks path");
        if let Some(&next) = adj[top].get(*i) {
            *i += 1;
            match colour[next] {
                Colour::Grey => {
                    let start = path.iter().position(|&s| s == next).expect("grey is on path");
                    let mut cycle = path[start..].to_vec();
                    cycle.push(next);
                    return Some(cycle);
                }
                Colour::White => {
                    colour[next] = Colour::Grey;
                    path.push(next);
                    cursor.push(0);
                }
                Colour::Black => {}
            }
        } else {
            colour[top] = Colour::Black;
            path.pop();
            cursor.pop();
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycles() {
        assert_eq!(find_cycle(&[vec![0]], 0), Some(vec![0, 0]));
        assert_eq!(find_cycle(&[vec![1], vec![2], vec![1]], 0), Some(vec![1, 2, 1]));
        assert_eq!(find_cycle(&[vec![1, 2], vec![2], vec![]], 0), None);
        assert_eq!(find_cycle(&[], 0), None);
    }
}
