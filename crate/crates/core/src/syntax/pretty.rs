use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write;

use super::ast::{Name, Process};
use super::env::DefinitionEnv;
use super::names::{all_names, free_names, fresh_name};

/// Renders a term in the concrete syntax accepted by the parser.
///
/// Canonical bound names (`#k`) are replaced by readable names that clash
/// with nothing else in the term or in the constants it references.
pub fn pretty_print(term: &Process, env: &DefinitionEnv) -> String {
    let mut renames = BTreeMap::new();
    if has_canonical_binders(term) {
        let mut avoid = free_names(term, env);
        all_names(term, &mut avoid);
        let mut canon = BTreeSet::new();
        collect_canonical_binders(term, &mut canon);
        for c in canon {
            let n = fresh_name(&c, &avoid);
            avoid.insert(n.clone());
            renames.insert(c, n);
        }
    }
    let mut out = String::new();
    Printer { renames: &renames }.proc(term, Prec::Par, &mut out);
    out
}

/// Renders every definition followed by `main`.
pub fn pretty_print_program(main: &Process, env: &DefinitionEnv) -> String {
    let mut out = String::new();
    for (name, body) in env.iter() {
        let _ = writeln!(out, "{name} = {};", pretty_print(body, env));
    }
    let _ = writeln!(out, "main = {}", pretty_print(main, env));
    out
}

fn has_canonical_binders(p: &Process) -> bool {
    let mut s = BTreeSet::new();
    collect_canonical_binders(p, &mut s);
    !s.is_empty()
}

fn collect_canonical_binders(p: &Process, out: &mut BTreeSet<Name>) {
    match p {
        Process::Restrict(x, body) => {
            if x.is_canonical() {
                out.insert(x.clone());
            }
            collect_canonical_binders(body, out);
        }
        Process::Input(_, q) | Process::Output(_, q) => collect_canonical_binders(q, out),
        Process::Sum(ps) | Process::Par(ps) => {
            ps.iter().for_each(|q| collect_canonical_binders(q, out))
        }
        Process::Fraction {
            numerator,
            denominator,
        } => {
            collect_canonical_binders(numerator, out);
            collect_canonical_binders(denominator, out);
        }
        Process::Workunit { body, handler, .. } => {
            collect_canonical_binders(body, out);
            collect_canonical_binders(handler, out);
        }
        Process::Nil | Process::Constant(_) | Process::OutputAtom(_) => {}
    }
}

#[derive(Clone, Copy, PartialEq, PartialOrd)]
enum Prec {
    Par,
    Sum,
    Unary,
}

struct Printer<'a> {
    renames: &'a BTreeMap<Name, Name>,
}

impl Printer<'_> {
    fn name<'n>(&'n self, n: &'n Name) -> &'n str {
        self.renames.get(n).unwrap_or(n).as_str()
    }

    fn proc(&self, p: &Process, ctx: Prec, out: &mut String) {
        let own = match p {
            Process::Par(_) => Prec::Par,
            Process::Sum(_) => Prec::Sum,
            _ => Prec::Unary,
        };
        let paren = own < ctx;
        if paren {
            out.push('(');
        }
        match p {
            Process::Nil => out.push('0'),
            Process::Constant(c) => out.push_str(c.as_str()),
            Process::OutputAtom(a) => {
                out.push_str(self.name(a));
                out.push('!');
            }
            Process::Input(a, cont) | Process::Output(a, cont) => {
                out.push_str(self.name(a));
                out.push(if matches!(p, Process::Input(..)) { '?' } else { '!' });
                out.push('.');
                self.proc(cont, Prec::Unary, out);
            }
            Process::Sum(bs) => self.list(bs, " + ", Prec::Unary, out),
            // nested parallels are parenthesised to keep their grouping
            Process::Par(cs) => self.list(cs, " | ", Prec::Sum, out),
            Process::Restrict(x, body) => {
                out.push_str("new ");
                out.push_str(self.name(x));
                out.push_str(" in ");
                self.proc(body, Prec::Unary, out);
            }
            Process::Fraction {
                numerator,
                denominator,
            } => {
                out.push_str("{ ");
                self.proc(numerator, Prec::Par, out);
                out.push_str(" / ");
                self.proc(denominator, Prec::Par, out);
                out.push_str(" }");
            }
            Process::Workunit {
                body,
                handler,
                trigger,
            } => {
                out.push_str("wu(");
                self.proc(body, Prec::Par, out);
                out.push_str(" ; ");
                self.proc(handler, Prec::Par, out);
                out.push_str(" ; ");
                out.push_str(self.name(trigger));
                out.push(')');
            }
        }
        if paren {
            out.push(')');
        }
    }

    fn list(&self, items: &[Process], sep: &str, ctx: Prec, out: &mut String) {
        for (i, item) in items.iter().enumerate() {
            if i > 0 {
                out.push_str(sep);
            }
            self.proc(item, ctx, out);
        }
    }
}
