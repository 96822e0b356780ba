use proptest::prelude::*;
use reconfig_calc_core::ccsdp::{matches, reduce_step, transitions};
use reconfig_calc_core::testing::{sample_env, terms, GenConfig};
use reconfig_calc_core::{canonicalize, Calculus, Error, Label, MatchMode, Name, Process};

const CONGRUENCE: MatchMode = MatchMode::Congruence { unfold_depth: 8 };
const BISIM: MatchMode = MatchMode::Bisim { state_bound: 200 };

/// A structurally congruent variant: parallel components and sum branches
/// reversed, `0` added to parallels, unused restrictions added and binders
/// renamed.
fn shuffle(p: &Process) -> Process {
    match p {
        Process::Nil | Process::Constant(_) | Process::OutputAtom(_) => p.clone(),
        Process::Input(a, q) => Process::input(a.clone(), shuffle(q)),
        Process::Output(a, q) => Process::output(a.clone(), shuffle(q)),
        Process::Sum(bs) => Process::Sum(bs.iter().rev().map(shuffle).collect()),
        Process::Par(cs) => {
            let mut v: Vec<Process> = cs.iter().rev().map(shuffle).collect();
            v.push(Process::Nil);
            Process::restrict("unused", Process::Par(v))
        }
        Process::Restrict(x, body) => {
            let fresh = Name::new(format!("{x}_r"));
            let body = reconfig_calc_core::substitute(body, x, &fresh);
            Process::Restrict(fresh, Box::new(shuffle(&body)))
        }
        Process::Fraction {
            numerator,
            denominator,
        } => Process::fraction(shuffle(numerator), shuffle(denominator)),
        Process::Workunit { .. } => unreachable!("CCS terms only"),
    }
}

fn rcf_set(term: &Process, mode: MatchMode) -> Result<Vec<(Process, Process)>, Error> {
    let env = sample_env(Calculus::CcsDp);
    Ok(transitions(term, &env, mode)?
        .into_iter()
        .filter_map(|(l, succ)| match l {
            Label::Reconfig { target, .. } => Some((*target, succ)),
            _ => None,
        })
        .collect())
}

fn has_rcf_to(term: &Process, successor: &Process) -> bool {
    rcf_set(term, MatchMode::Syntactic)
        .unwrap()
        .iter()
        .any(|(_, s)| s == successor)
}

fn ccs() -> BoxedStrategy<Process> {
    terms(GenConfig::ccs())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn congruence_reduction_coherence(t in ccs()) {
        let env = sample_env(Calculus::CcsDp);
        let u = shuffle(&t);
        prop_assert_eq!(canonicalize(&t), canonicalize(&u));
        prop_assert_eq!(
            reduce_step(&t, &env, MatchMode::Syntactic).unwrap(),
            reduce_step(&u, &env, MatchMode::Syntactic).unwrap()
        );
    }

    #[test]
    fn fractions_are_inert(n in ccs(), d in ccs()) {
        let env = sample_env(Calculus::CcsDp);
        let f = Process::fraction(n, d);
        for mode in [MatchMode::Syntactic, CONGRUENCE, BISIM] {
            prop_assert!(transitions(&f, &env, mode).unwrap().is_empty());
        }
    }

    #[test]
    fn replacement_and_deletion(p in ccs(), q in ccs()) {
        prop_assume!(!canonicalize(&p).is_nil());
        let replace = Process::Par(vec![p.clone(), Process::fraction(q.clone(), p.clone())]);
        prop_assert!(has_rcf_to(&replace, &canonicalize(&q)));
        let delete = Process::Par(vec![p.clone(), Process::fraction(Process::Nil, p)]);
        prop_assert!(has_rcf_to(&delete, &Process::Nil));
    }

    #[test]
    fn no_stale_matching(p in ccs(), n in ccs(), d in ccs()) {
        let env = sample_env(Calculus::CcsDp);
        for (_, r) in transitions(&p, &env, MatchMode::Syntactic).unwrap() {
            if r.is_nil() || matches(&r, &canonicalize(&d), MatchMode::Syntactic, &env).unwrap() {
                continue;
            }
            let t = Process::Par(vec![r.clone(), Process::fraction(n.clone(), d.clone())]);
            let targets = rcf_set(&t, MatchMode::Syntactic).unwrap();
            prop_assert!(targets.iter().all(|(target, _)| *target != r));
        }
    }

    #[test]
    fn mode_monotonicity(c1 in ccs(), c2 in ccs(), n in ccs(), d in ccs(), variant in any::<bool>()) {
        let d = if variant { shuffle(&c1) } else { d };
        let t = Process::Par(vec![c1, c2, Process::fraction(n, d)]);
        let syn = rcf_set(&t, MatchMode::Syntactic).unwrap();
        let cong = rcf_set(&t, CONGRUENCE).unwrap();
        prop_assert!(syn.iter().all(|x| cong.contains(x)));
        match rcf_set(&t, BISIM) {
            Ok(bis) => prop_assert!(cong.iter().all(|x| bis.contains(x))),
            Err(Error::StateBoundExceeded(_)) => {}
            Err(e) => return Err(TestCaseError::fail(e.to_string())),
        }
    }
}

#[test]
fn atomic_replacement_leaves_no_trace_of_the_old_component() {
    let env = sample_env(Calculus::CcsDp);
    let t = Process::Par(vec![
        Process::constant("A"),
        Process::fraction(Process::constant("B"), Process::constant("A")),
    ]);
    let succ = reduce_step(&t, &env, MatchMode::Syntactic).unwrap();
    assert_eq!(succ, vec![Process::constant("B")]);
}
