use std::collections::BTreeSet;

use proptest::prelude::*;
use reconfig_calc_core::syntax::syntactic_free_names;
use reconfig_calc_core::testing::{sample_env, terms, GenConfig};
use reconfig_calc_core::{
    alpha_equivalent, free_names, parse, parse_process, pretty_print, substitute, Calculus,
    Name, Process,
};

const POOL: [&str; 5] = ["a", "b", "c", "d", "e"];

/// Renames every binder to a pool name chosen by `picks`, skipping choices
/// that would capture a free name of the body.
fn rename_binders(p: &Process, picks: &mut impl Iterator<Item = usize>) -> Process {
    let r = |q: &Process, picks: &mut _| Box::new(rename_binders(q, picks));
    match p {
        Process::Restrict(x, body) => {
            let free = syntactic_free_names(body);
            let choice = Name::new(POOL[picks.next().unwrap_or(0) % POOL.len()]);
            let y = if choice == *x || !free.contains(&choice) {
                choice
            } else {
                x.clone()
            };
            let body = substitute(body, x, &y);
            Process::Restrict(y, r(&body, picks))
        }
        Process::Nil | Process::Constant(_) | Process::OutputAtom(_) => p.clone(),
        Process::Input(a, q) => Process::Input(a.clone(), r(q, picks)),
        Process::Output(a, q) => Process::Output(a.clone(), r(q, picks)),
        Process::Sum(ps) => Process::Sum(ps.iter().map(|q| rename_binders(q, picks)).collect()),
        Process::Par(ps) => Process::Par(ps.iter().map(|q| rename_binders(q, picks)).collect()),
        Process::Fraction {
            numerator,
            denominator,
        } => Process::fraction(
            rename_binders(numerator, picks),
            rename_binders(denominator, picks),
        ),
        Process::Workunit {
            body,
            handler,
            trigger,
        } => Process::workunit(
            rename_binders(body, picks),
            rename_binders(handler, picks),
            trigger.clone(),
        ),
    }
}

fn both_calculi() -> impl Strategy<Value = (Calculus, Process)> {
    prop_oneof![
        terms(GenConfig::ccs()).prop_map(|p| (Calculus::CcsDp, p)),
        terms(GenConfig::webpi()).prop_map(|p| (Calculus::WebPi, p)),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn print_parse_round_trip((calc, t) in both_calculi()) {
        let env = sample_env(calc);
        let text = pretty_print(&t, &env);
        let back = parse_process(&text, calc).map_err(|e| TestCaseError::fail(format!("{text}: {e}")))?;
        prop_assert!(alpha_equivalent(&t, &back), "{text}");
    }

    #[test]
    fn alpha_is_an_equivalence(
        (_, t) in both_calculi(),
        (_, u) in both_calculi(),
        p1 in proptest::collection::vec(0usize..5, 8),
        p2 in proptest::collection::vec(0usize..5, 8),
    ) {
        let t1 = rename_binders(&t, &mut p1.into_iter());
        let t2 = rename_binders(&t1, &mut p2.into_iter());
        prop_assert!(alpha_equivalent(&t, &t));
        prop_assert!(alpha_equivalent(&t, &t1));
        prop_assert!(alpha_equivalent(&t1, &t));
        prop_assert!(alpha_equivalent(&t1, &t2));
        prop_assert!(alpha_equivalent(&t, &t2));
        prop_assert_eq!(alpha_equivalent(&t, &u), alpha_equivalent(&u, &t));
    }

    #[test]
    fn substitution_laws(t in terms(GenConfig::plain_ccs()), from in 0usize..3, to in 0usize..5) {
        let a = Name::new(POOL[from]);
        let b = Name::new(POOL[to]);
        prop_assert!(alpha_equivalent(&substitute(&t, &a, &a), &t));
        let before = syntactic_free_names(&t);
        if before.contains(&a) {
            let mut expected: BTreeSet<Name> = before.clone();
            expected.remove(&a);
            expected.insert(b.clone());
            prop_assert_eq!(syntactic_free_names(&substitute(&t, &a, &b)), expected);
        } else {
            prop_assert!(alpha_equivalent(&substitute(&t, &a, &b), &t));
        }
    }
}

#[test]
fn free_names_examples() {
    let env = sample_env(Calculus::CcsDp);
    let names = |p: &Process| -> Vec<String> {
        free_names(p, &env).iter().map(|n| n.to_string()).collect()
    };
    assert_eq!(names(&parse_process("a?.0", Calculus::CcsDp).unwrap()), ["a"]);
    assert_eq!(
        names(&parse_process("new a in (a?.0 | b!.0)", Calculus::CcsDp).unwrap()),
        ["b"]
    );

    let (_, env) = parse(
        "S = v?.e?.S + e?.v?.e'!; main = wu(S ; S ; e') | v! | e!",
        Calculus::WebPi,
    )
    .unwrap();
    let fns: Vec<String> = free_names(&Process::constant("S"), &env)
        .iter()
        .map(|n| n.to_string())
        .collect();
    assert_eq!(fns, ["e", "e'", "v"]);
}

#[test]
fn renamed_sensor_is_alpha_equivalent() {
    let r = parse_process("new x in (wu(S ; S ; x) | v! | e!)", Calculus::WebPi).unwrap();
    let renamed = parse_process("new y in (wu(S ; S ; y) | v! | e!)", Calculus::WebPi).unwrap();
    assert!(alpha_equivalent(&r, &renamed));
    let free = parse_process("wu(S ; S ; e') | v! | e!", Calculus::WebPi).unwrap();
    let other = parse_process("wu(S ; S ; f) | v! | e!", Calculus::WebPi).unwrap();
    assert!(!alpha_equivalent(&free, &other));
}

#[test]
fn capture_avoiding_substitution() {
    let t = parse_process("new b in a!.b?.0", Calculus::CcsDp).unwrap();
    let s = substitute(&t, &Name::new("a"), &Name::new("b"));
    assert_eq!(
        s,
        parse_process("new b1 in b!.b1?.0", Calculus::CcsDp).unwrap()
    );
    assert_eq!(
        substitute(&Process::Nil, &Name::new("a"), &Name::new("b")),
        Process::Nil
    );
}
