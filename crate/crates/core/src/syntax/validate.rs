use super::ast::{Calculus, Process};
use super::env::DefinitionEnv;
use crate::error::{Error, Result, Violation};

/// Lists every constructor occurrence that is illegal in `calculus`.
pub fn validate_calculus(term: &Process, calculus: Calculus) -> Vec<Violation> {
    let mut out = Vec::new();
    walk(term, calculus, &mut out);
    out
}

fn walk(p: &Process, calculus: Calculus, out: &mut Vec<Violation>) {
    let mut flag = |construct: &'static str| {
        out.push(Violation {
            calculus,
            construct,
            location: None,
        })
    };
    match p {
        Process::Nil | Process::Constant(_) => {}
        Process::OutputAtom(_) => {
            if calculus == Calculus::CcsDp {
                flag("asynchronous output atom");
            }
        }
        Process::Input(_, cont) => walk(cont, calculus, out),
        Process::Output(_, cont) => {
            if calculus == Calculus::WebPi && !cont.is_nil() {
                flag("output prefix with a continuation");
            }
            walk(cont, calculus, out)
        }
        Process::Sum(ps) | Process::Par(ps) => ps.iter().for_each(|q| walk(q, calculus, out)),
        Process::Restrict(_, body) => walk(body, calculus, out),
        Process::Fraction {
            numerator,
            denominator,
        } => {
            if calculus == Calculus::WebPi {
                flag("fraction");
            }
            walk(numerator, calculus, out);
            walk(denominator, calculus, out);
        }
        Process::Workunit { body, handler, .. } => {
            if calculus == Calculus::CcsDp {
                flag("workunit");
            }
            walk(body, calculus, out);
            walk(handler, calculus, out);
        }
    }
}

/// Validates `main` and every definition body.
pub fn validate_program(main: &Process, env: &DefinitionEnv, calculus: Calculus) -> Result<()> {
    let mut all = validate_calculus(main, calculus);
    for (name, body) in env.iter() {
        all.extend(validate_calculus(body, calculus).into_iter().map(|mut v| {
            v.location = Some(name.to_string());
            v
        }));
    }
    if all.is_empty() {
        Ok(())
    } else {
        Err(Error::CalculusViolation(all))
    }
}
