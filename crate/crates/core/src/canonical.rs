//! Canonical representatives of structural-congruence classes.
//!
//! The normal form flattens and sorts parallel compositions, drops `0`
//! components, sorts sum branches (keeping duplicates), drops restrictions
//! of unused names and renames every bound name to `#h`, where `h` is the
//! binder's height (one more than the tallest binder in its body). Constants
//! are never unfolded here.

use std::fmt;

use crate::syntax::{syntactic_free_names, DefinitionEnv, Name, Process};

/// A term in canonical form; two terms are congruent iff their normal forms
/// are equal.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NormalForm(Process);

impl NormalForm {
    pub fn of(term: &Process) -> Self {
        NormalForm(canonicalize(term))
    }

    pub fn as_process(&self) -> &Process {
        &self.0
    }

    pub fn into_process(self) -> Process {
        self.0
    }
}

impl fmt::Debug for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl AsRef<Process> for NormalForm {
    fn as_ref(&self) -> &Process {
        &self.0
    }
}

/// Canonical form of `term` (idempotent).
pub fn canonicalize(term: &Process) -> Process {
    let mut counter = 0usize;
    let unique = freshen_binders(term, &mut counter);
    normalize_unique(unique)
}

/// Renames every binder to a distinct temporary `%k` name so that no
/// canonical name can be free under a binder being renamed.
fn freshen_binders(p: &Process, counter: &mut usize) -> Process {
    match p {
        Process::Restrict(x, body) => {
            let temp = Name::new(format!("%{counter}"));
            *counter += 1;
            let body = rename_free(body, x, &temp);
            Process::Restrict(temp, Box::new(freshen_binders(&body, counter)))
        }
        Process::Nil | Process::Constant(_) | Process::OutputAtom(_) => p.clone(),
        Process::Input(a, q) => Process::Input(a.clone(), Box::new(freshen_binders(q, counter))),
        Process::Output(a, q) => Process::Output(a.clone(), Box::new(freshen_binders(q, counter))),
        Process::Sum(ps) => Process::Sum(ps.iter().map(|q| freshen_binders(q, counter)).collect()),
        Process::Par(ps) => Process::Par(ps.iter().map(|q| freshen_binders(q, counter)).collect()),
        Process::Fraction {
            numerator,
            denominator,
        } => Process::fraction(
            freshen_binders(numerator, counter),
            freshen_binders(denominator, counter),
        ),
        Process::Workunit {
            body,
            handler,
            trigger,
        } => Process::workunit(
            freshen_binders(body, counter),
            freshen_binders(handler, counter),
            trigger.clone(),
        ),
    }
}

/// Plain renaming of free occurrences; callers guarantee `to` is not bound
/// anywhere inside `p`.
fn rename_free(p: &Process, from: &Name, to: &Name) -> Process {
    let r = |n: &Name| if n == from { to.clone() } else { n.clone() };
    match p {
        Process::Nil | Process::Constant(_) => p.clone(),
        Process::OutputAtom(a) => Process::OutputAtom(r(a)),
        Process::Input(a, q) => Process::Input(r(a), Box::new(rename_free(q, from, to))),
        Process::Output(a, q) => Process::Output(r(a), Box::new(rename_free(q, from, to))),
        Process::Sum(ps) => Process::Sum(ps.iter().map(|q| rename_free(q, from, to)).collect()),
        Process::Par(ps) => Process::Par(ps.iter().map(|q| rename_free(q, from, to)).collect()),
        Process::Restrict(x, _) if x == from => p.clone(),
        Process::Restrict(x, body) => {
            Process::Restrict(x.clone(), Box::new(rename_free(body, from, to)))
        }
        Process::Fraction {
            numerator,
            denominator,
        } => Process::fraction(rename_free(numerator, from, to), rename_free(denominator, from, to)),
        Process::Workunit {
            body,
            handler,
            trigger,
        } => Process::workunit(
            rename_free(body, from, to),
            rename_free(handler, from, to),
            r(trigger),
        ),
    }
}

fn normalize_unique(p: Process) -> Process {
    match p {
        Process::Nil | Process::Constant(_) | Process::OutputAtom(_) => p,
        Process::Input(a, q) => Process::Input(a, Box::new(normalize_unique(*q))),
        Process::Output(a, q) => Process::Output(a, Box::new(normalize_unique(*q))),
        Process::Sum(bs) => {
            let mut out = Vec::with_capacity(bs.len());
            for b in bs {
                match normalize_unique(b) {
                    Process::Sum(inner) => out.extend(inner),
                    other => out.push(other),
                }
            }
            out.sort();
            Process::sum(out)
        }
        Process::Par(cs) => {
            let mut out = Vec::with_capacity(cs.len());
            for c in cs {
                match normalize_unique(c) {
                    Process::Par(inner) => out.extend(inner),
                    Process::Nil => {}
                    other => out.push(other),
                }
            }
            out.sort();
            Process::par(out)
        }
        Process::Restrict(x, body) => {
            let body = normalize_unique(*body);
            if !syntactic_free_names(&body).contains(&x) {
                return body;
            }
            let height = max_binder_height(&body).map_or(0, |h| h + 1);
            let name = Name::canonical(height);
            let renamed = resort(rename_free(&body, &x, &name));
            Process::Restrict(name, Box::new(renamed))
        }
        Process::Fraction {
            numerator,
            denominator,
        } => Process::fraction(normalize_unique(*numerator), normalize_unique(*denominator)),
        Process::Workunit {
            body,
            handler,
            trigger,
        } => Process::workunit(normalize_unique(*body), normalize_unique(*handler), trigger),
    }
}

fn max_binder_height(p: &Process) -> Option<usize> {
    match p {
        Process::Restrict(x, body) => {
            let own = x.as_str().strip_prefix('#').and_then(|s| s.parse().ok());
            own.max(max_binder_height(body))
        }
        Process::Nil | Process::Constant(_) | Process::OutputAtom(_) => None,
        Process::Input(_, q) | Process::Output(_, q) => max_binder_height(q),
        Process::Sum(ps) | Process::Par(ps) => ps.iter().filter_map(max_binder_height).max(),
        Process::Fraction {
            numerator,
            denominator,
        } => max_binder_height(numerator).max(max_binder_height(denominator)),
        Process::Workunit { body, handler, .. } => {
            max_binder_height(body).max(max_binder_height(handler))
        }
    }
}

/// Re-sorts parallel components and sum branches after a renaming.
fn resort(p: Process) -> Process {
    match p {
        Process::Nil | Process::Constant(_) | Process::OutputAtom(_) => p,
        Process::Input(a, q) => Process::Input(a, Box::new(resort(*q))),
        Process::Output(a, q) => Process::Output(a, Box::new(resort(*q))),
        Process::Sum(bs) => {
            let mut bs: Vec<_> = bs.into_iter().map(resort).collect();
            bs.sort();
            Process::Sum(bs)
        }
        Process::Par(cs) => {
            let mut cs: Vec<_> = cs.into_iter().map(resort).collect();
            cs.sort();
            Process::Par(cs)
        }
        Process::Restrict(x, body) => Process::Restrict(x, Box::new(resort(*body))),
        Process::Fraction {
            numerator,
            denominator,
        } => Process::fraction(resort(*numerator), resort(*denominator)),
        Process::Workunit {
            body,
            handler,
            trigger,
        } => Process::workunit(resort(*body), resort(*handler), trigger),
    }
}

/// Replaces constants by their bodies wherever they occur under fewer than
/// `depth` guards. Prefixes, fraction contents and workunit handlers each
/// count as one guard; guarded recursion makes this terminate.
pub fn unfold(term: &Process, env: &DefinitionEnv, depth: usize) -> Process {
    unfold_at(term, env, depth, 0)
}

fn unfold_at(p: &Process, env: &DefinitionEnv, depth: usize, level: usize) -> Process {
    if level >= depth {
        return p.clone();
    }
    let deeper = |q: &Process| unfold_at(q, env, depth, level + 1);
    let same = |q: &Process| unfold_at(q, env, depth, level);
    match p {
        Process::Constant(c) => same(env.body(c)),
        Process::Nil | Process::OutputAtom(_) => p.clone(),
        Process::Input(a, q) => Process::Input(a.clone(), Box::new(deeper(q))),
        Process::Output(a, q) => Process::Output(a.clone(), Box::new(deeper(q))),
        Process::Sum(ps) => Process::Sum(ps.iter().map(same).collect()),
        Process::Par(ps) => Process::Par(ps.iter().map(same).collect()),
        Process::Restrict(x, body) => {
            // the body of a constant never sees this binder
            let avoid_capture = constants_mention(body, env, x);
            if avoid_capture {
                let mut counter = 0;
                let fresh = freshen_binders(p, &mut counter);
                return same(&fresh);
            }
            Process::Restrict(x.clone(), Box::new(same(body)))
        }
        Process::Fraction {
            numerator,
            denominator,
        } => Process::fraction(deeper(numerator), deeper(denominator)),
        Process::Workunit {
            body,
            handler,
            trigger,
        } => Process::workunit(same(body), deeper(handler), trigger.clone()),
    }
}

fn constants_mention(p: &Process, env: &DefinitionEnv, x: &Name) -> bool {
    let mut hit = false;
    p.for_each_constant(&mut |c| {
        if !hit {
            hit = crate::syntax::free_names(&Process::Constant(c.clone()), env).contains(x);
        }
    });
    hit
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{alpha_equivalent, parse, parse_process, Calculus};

    fn nf(s: &str) -> Process {
        canonicalize(&parse_process(s, Calculus::CcsDp).unwrap())
    }

    #[test]
    fn identity_and_commutativity() {
        assert_eq!(nf("0 | P"), nf("P"));
        assert_eq!(nf("P | Q"), nf("Q | P"));
        assert_eq!(nf("(P | Q) | R"), nf("P | (Q | R)"));
        assert_eq!(nf("a?.0 + b!.0"), nf("b!.0 + a?.0"));
        assert_ne!(nf("a?.0 + a?.0"), nf("a?.0"));
    }

    #[test]
    fn restriction_laws() {
        assert_eq!(nf("new a in b?.0"), nf("b?.0"));
        assert_eq!(nf("new a in 0"), Process::Nil);
        assert_eq!(nf("new a in (a?.0 | b!.0)"), nf("new c in (b!.0 | c?.0)"));
        assert_ne!(nf("new a in a?.0"), nf("new a in a!.0"));
    }

    #[test]
    fn sensor_mid_trace_term() {
        let p = nf("S | { S | R / S }");
        match &p {
            Process::Par(cs) => assert_eq!(cs.len(), 2),
            other => panic!("{other:?}"),
        }
        assert_eq!(p, nf("{ R | S / S } | S"));
    }

    #[test]
    fn idempotent_and_alpha_stable() {
        for s in [
            "new a in new b in (b?.a!.0 | a?.0 | new c in c!.b?.0)",
            "new x in (x?.0 | new x in x!.0)",
            "a?.(new b in b!.0 | 0) + c!.0",
        ] {
            let once = nf(s);
            assert_eq!(canonicalize(&once), once, "{s}");
            let p = parse_process(s, Calculus::CcsDp).unwrap();
            assert!(alpha_equivalent(&canonicalize(&p), &once));
        }
    }

    #[test]
    fn unfolding_is_bounded_and_fold_insensitive() {
        let (_, env) = parse("S = v!.S + e!.S; main = S", Calculus::CcsDp).unwrap();
        let folded = Process::constant("S");
        let unfolded = env.get(&Name::new("S")).unwrap().clone();
        assert_eq!(
            canonicalize(&unfold(&folded, &env, 8)),
            canonicalize(&unfold(&unfolded, &env, 8))
        );
        assert_eq!(unfold(&folded, &env, 0), folded);
    }
}
