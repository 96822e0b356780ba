//! Free names, capture-avoiding substitution and alpha-equivalence.
//!
//! Constants are statically scoped: the free names of a definition body are
//! global and an enclosing `new` never captures them.

use std::collections::BTreeSet;

use super::ast::{Name, Process};
use super::env::DefinitionEnv;

/// Free names of `term`, with each constant contributing the free names of
/// its unfolding.
pub fn free_names(term: &Process, env: &DefinitionEnv) -> BTreeSet<Name> {
    let mut out = syntactic_free_names(term);
    let per_constant = env.constant_free_names();
    term.for_each_constant(&mut |c| {
        if let Some(s) = per_constant.get(c) {
            out.extend(s.iter().cloned());
        }
    });
    out
}

/// Free names ignoring constant references.
pub fn syntactic_free_names(term: &Process) -> BTreeSet<Name> {
    let mut out = BTreeSet::new();
    collect_free(term, &mut Vec::new(), &mut out);
    out
}

fn collect_free<'a>(p: &'a Process, bound: &mut Vec<&'a Name>, out: &mut BTreeSet<Name>) {
    let mut note = |n: &Name, bound: &Vec<&Name>| {
        if !bound.contains(&n) {
            out.insert(n.clone());
        }
    };
    match p {
        Process::Nil | Process::Constant(_) => {}
        Process::OutputAtom(a) => note(a, bound),
        Process::Input(a, cont) | Process::Output(a, cont) => {
            note(a, bound);
            collect_free(cont, bound, out);
        }
        Process::Sum(ps) | Process::Par(ps) => {
            for q in ps {
                collect_free(q, bound, out);
            }
        }
        Process::Restrict(x, body) => {
            bound.push(x);
            collect_free(body, bound, out);
            bound.pop();
        }
        Process::Fraction {
            numerator,
            denominator,
        } => {
            collect_free(numerator, bound, out);
            collect_free(denominator, bound, out);
        }
        Process::Workunit {
            body,
            handler,
            trigger,
        } => {
            note(trigger, bound);
            collect_free(body, bound, out);
            collect_free(handler, bound, out);
        }
    }
}

/// Every name occurring in the term, bound or free (constants excluded).
pub(crate) fn all_names(term: &Process, out: &mut BTreeSet<Name>) {
    match term {
        Process::Nil | Process::Constant(_) => {}
        Process::OutputAtom(a) => {
            out.insert(a.clone());
        }
        Process::Input(a, p) | Process::Output(a, p) | Process::Restrict(a, p) => {
            out.insert(a.clone());
            all_names(p, out);
        }
        Process::Sum(ps) | Process::Par(ps) => ps.iter().for_each(|p| all_names(p, out)),
        Process::Fraction {
            numerator,
            denominator,
        } => {
            all_names(numerator, out);
            all_names(denominator, out);
        }
        Process::Workunit {
            body,
            handler,
            trigger,
        } => {
            out.insert(trigger.clone());
            all_names(body, out);
            all_names(handler, out);
        }
    }
}

/// First of `base1`, `base2`, ... not in `avoid`.
pub(crate) fn fresh_name(base: &Name, avoid: &BTreeSet<Name>) -> Name {
    let stem = base.as_str().trim_start_matches('#');
    let stem = if stem.chars().next().is_none_or(|c| !c.is_ascii_alphabetic()) {
        format!("n{stem}")
    } else {
        stem.to_string()
    };
    (1..)
        .map(|i| Name::new(format!("{stem}{i}")))
        .find(|n| !avoid.contains(n))
        .unwrap()
}

/// Replaces free occurrences of `from` by `to`, renaming binders that
/// would capture `to`. Constant references are left alone.
pub fn substitute(term: &Process, from: &Name, to: &Name) -> Process {
    if from == to {
        return term.clone();
    }
    let rename = |n: &Name| if n == from { to.clone() } else { n.clone() };
    match term {
        Process::Nil => Process::Nil,
        Process::Constant(c) => Process::Constant(c.clone()),
        Process::OutputAtom(a) => Process::OutputAtom(rename(a)),
        Process::Input(a, p) => Process::Input(rename(a), Box::new(substitute(p, from, to))),
        Process::Output(a, p) => Process::Output(rename(a), Box::new(substitute(p, from, to))),
        Process::Sum(ps) => Process::Sum(ps.iter().map(|p| substitute(p, from, to)).collect()),
        Process::Par(ps) => Process::Par(ps.iter().map(|p| substitute(p, from, to)).collect()),
        Process::Restrict(x, body) => {
            if x == from {
                return term.clone();
            }
            let fv = syntactic_free_names(body);
            if !fv.contains(from) {
                return term.clone();
            }
            if x == to {
                let mut avoid = fv;
                avoid.insert(to.clone());
                avoid.insert(from.clone());
                let fresh = fresh_name(x, &avoid);
                let renamed = substitute(body, x, &fresh);
                Process::Restrict(fresh, Box::new(substitute(&renamed, from, to)))
            } else {
                Process::Restrict(x.clone(), Box::new(substitute(body, from, to)))
            }
        }
        Process::Fraction {
            numerator,
            denominator,
        } => Process::fraction(substitute(numerator, from, to), substitute(denominator, from, to)),
        Process::Workunit {
            body,
            handler,
            trigger,
        } => Process::workunit(
            substitute(body, from, to),
            substitute(handler, from, to),
            rename(trigger),
        ),
    }
}

/// True iff the terms differ only in the choice of bound names.
pub fn alpha_equivalent(t1: &Process, t2: &Process) -> bool {
    alpha(t1, t2, &mut Vec::new())
}

fn same_name(a: &Name, b: &Name, binders: &[(&Name, &Name)]) -> bool {
    for (x, y) in binders.iter().rev() {
        match (*x == a, *y == b) {
            (true, true) => return true,
            (false, false) => continue,
            _ => return false,
        }
    }
    a == b
}

fn alpha<'a>(t1: &'a Process, t2: &'a Process, binders: &mut Vec<(&'a Name, &'a Name)>) -> bool {
    use Process::*;
    match (t1, t2) {
        (Nil, Nil) => true,
        (Constant(a), Constant(b)) => a == b,
        (OutputAtom(a), OutputAtom(b)) => same_name(a, b, binders),
        (Input(a, p), Input(b, q)) | (Output(a, p), Output(b, q)) => {
            same_name(a, b, binders) && alpha(p, q, binders)
        }
        (Sum(ps), Sum(qs)) | (Par(ps), Par(qs)) => {
            ps.len() == qs.len() && ps.iter().zip(qs).all(|(p, q)| alpha(p, q, binders))
        }
        (Restrict(x, p), Restrict(y, q)) => {
            binders.push((x, y));
            let r = alpha(p, q, binders);
            binders.pop();
            r
        }
        (
            Fraction {
                numerator: n1,
                denominator: d1,
            },
            Fraction {
                numerator: n2,
                denominator: d2,
            },
        ) => alpha(n1, n2, binders) && alpha(d1, d2, binders),
        (
            Workunit {
                body: b1,
                handler: h1,
                trigger: x1,
            },
            Workunit {
                body: b2,
                handler: h2,
                trigger: x2,
            },
        ) => same_name(x1, x2, binders) && alpha(b1, b2, binders) && alpha(h1, h2, binders),
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{parse, parse_process, Calculus};

    fn ccs(s: &str) -> Process {
        parse_process(s, Calculus::CcsDp).unwrap()
    }

    fn names(ns: &[&str]) -> BTreeSet<Name> {
        ns.iter().copied().map(Name::new).collect()
    }

    #[test]
    fn free_names_examples() {
        let env = DefinitionEnv::new();
        assert_eq!(free_names(&ccs("a?.0"), &env), names(&["a"]));
        assert_eq!(free_names(&ccs("new a in (a?.0 | b!.0)"), &env), names(&["b"]));
    }

    #[test]
    fn free_names_of_recursive_sensor() {
        let (main, env) = parse(
            "S = v?.e?.S + e?.v?.e'!; main = S",
            Calculus::WebPi,
        )
        .unwrap();
        assert_eq!(free_names(&main, &env), names(&["e", "e'", "v"]));
    }

    #[test]
    fn constants_are_not_captured() {
        let (main, env) = parse("S = a!.S; main = new a in S", Calculus::CcsDp).unwrap();
        assert_eq!(free_names(&main, &env), names(&["a"]));
    }

    #[test]
    fn substitute_examples() {
        let a = Name::new("a");
        let b = Name::new("b");
        assert_eq!(substitute(&ccs("a?.0"), &a, &b), ccs("b?.0"));
        assert_eq!(
            substitute(&ccs("new b in a!.b?.0"), &a, &b),
            ccs("new b1 in b!.b1?.0")
        );
        assert_eq!(substitute(&Process::Nil, &a, &b), Process::Nil);
        // bound occurrence untouched
        assert_eq!(
            substitute(&ccs("new a in a?.0"), &a, &b),
            ccs("new a in a?.0")
        );
    }

    #[test]
    fn alpha_examples() {
        assert!(alpha_equivalent(&ccs("new a in a?.0"), &ccs("new b in b?.0")));
        assert!(!alpha_equivalent(&ccs("a?.0"), &ccs("b?.0")));
        // a free `b` must not be confused with a bound one
        assert!(!alpha_equivalent(
            &ccs("new a in (a?.0 | b!.0)"),
            &ccs("new b in (b?.0 | b!.0)")
        ));
        assert!(alpha_equivalent(
            &ccs("new a in new b in a?.b!.0"),
            &ccs("new b in new a in b?.a!.0")
        ));
        assert!(!alpha_equivalent(
            &ccs("new a in new b in a?.b!.0"),
            &ccs("new a in new b in b?.a!.0")
        ));
    }

    #[test]
    fn fresh_names_skip_taken() {
        let avoid = names(&["b", "b1", "b2"]);
        assert_eq!(fresh_name(&Name::new("b"), &avoid), Name::new("b3"));
        assert_eq!(fresh_name(&Name::new("#4"), &BTreeSet::new()), Name::new("n41"));
    }
}
