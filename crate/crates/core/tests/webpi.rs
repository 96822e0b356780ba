use proptest::prelude::*;
use reconfig_calc_core::testing::{sample_env, terms, GenConfig};
use reconfig_calc_core::{
    canonicalize, parse, trace, wp_enabled_interactions, wp_reduce, Calculus, MatchMode, Name,
    Process, Rule, Strategy as Pick, System, WebPiState,
};

fn count_atoms(p: &Process, x: &Name) -> usize {
    match p {
        Process::OutputAtom(a) => usize::from(a == x),
        Process::Nil | Process::Constant(_) => 0,
        Process::Input(_, q) | Process::Output(_, q) => count_atoms(q, x),
        Process::Restrict(y, q) if y != x => count_atoms(q, x),
        Process::Restrict(..) => 0,
        Process::Sum(ps) | Process::Par(ps) => ps.iter().map(|q| count_atoms(q, x)).sum(),
        Process::Fraction { .. } => 0,
        Process::Workunit { body, handler, .. } => count_atoms(body, x) + count_atoms(handler, x),
    }
}

fn has_unit_on(p: &Process, x: &Name) -> bool {
    match p {
        Process::Workunit {
            body,
            handler,
            trigger,
        } => trigger == x || has_unit_on(body, x) || has_unit_on(handler, x),
        Process::Input(_, q) | Process::Output(_, q) | Process::Restrict(_, q) => has_unit_on(q, x),
        Process::Sum(ps) | Process::Par(ps) => ps.iter().any(|q| has_unit_on(q, x)),
        _ => false,
    }
}

fn webpi() -> BoxedStrategy<Process> {
    terms(GenConfig {
        depth: 3,
        ..GenConfig::webpi()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn trigger_consumes_one_output_and_erases_the_unit(
        body in webpi(),
        handler in webpi(),
        rest in webpi(),
    ) {
        let env = sample_env(Calculus::WebPi);
        let t = Name::new("t");
        let start = Process::Par(vec![
            Process::atom("t"),
            Process::workunit(body, handler, "t"),
            rest,
        ]);
        let before = count_atoms(&canonicalize(&start), &t);
        let interactions = wp_enabled_interactions(&WebPiState::new(start, &env)).unwrap();
        let triggers: Vec<_> = interactions
            .iter()
            .filter(|(i, _)| i.rule == Rule::Trigger && i.name == t)
            .collect();
        prop_assert_eq!(triggers.len(), 1);
        for (_, succ) in triggers {
            prop_assert_eq!(count_atoms(succ, &t), before - 1);
            prop_assert!(!has_unit_on(succ, &t));
        }
    }

    #[test]
    fn comm_is_symmetric(p in webpi(), x in 0usize..3) {
        let env = sample_env(Calculus::WebPi);
        let atom = Process::atom(["a", "b", "c"][x]);
        let succ = |t: Process| -> Vec<Process> {
            wp_reduce(&WebPiState::new(t, &env)).unwrap().into_iter().map(|s| s.term).collect()
        };
        prop_assert_eq!(
            succ(Process::Par(vec![atom.clone(), p.clone()])),
            succ(Process::Par(vec![p, atom]))
        );
    }

    #[test]
    fn interactions_agree_with_reduce(p in webpi()) {
        let env = sample_env(Calculus::WebPi);
        let st = WebPiState::new(p, &env);
        let succ: Vec<Process> = wp_reduce(&st).unwrap().into_iter().map(|s| s.term).collect();
        let named: Vec<Process> = wp_enabled_interactions(&st).unwrap().into_iter().map(|(_, p)| p).collect();
        prop_assert_eq!(succ, named);
    }
}

const SENSOR: &str = "S = v?.e?.S + e?.v?.e'!; main = wu(S ; S ; e') | v! | e!";

fn sensor_trace(script: Vec<usize>) -> Vec<(Process, &'static str, String)> {
    let (main, env) = parse(SENSOR, Calculus::WebPi).unwrap();
    let sys = System::new(Calculus::WebPi, env, MatchMode::Syntactic);
    let t = trace(&sys, &main, Pick::Scripted(script), 0, 10).unwrap();
    t.steps
        .into_iter()
        .map(|s| (s.term, s.rule.trace_name(), s.label))
        .collect()
}

fn wp(src: &str) -> Process {
    let (main, _) = parse(&format!("S = v?.e?.S + e?.v?.e'!; main = {src}"), Calculus::WebPi).unwrap();
    canonicalize(&main)
}

#[test]
fn sensor_normal_case() {
    let steps = sensor_trace(vec![0, 0]);
    assert_eq!(
        steps,
        vec![
            (wp("wu(e?.S ; S ; e') | e!"), "comm", "v".to_string()),
            (wp("wu(S ; S ; e')"), "comm", "e".to_string()),
        ]
    );
}

#[test]
fn sensor_erroneous_case() {
    let steps = sensor_trace(vec![1, 0, 0]);
    assert_eq!(
        steps,
        vec![
            (wp("wu(v?.e'! ; S ; e') | v!"), "comm", "e".to_string()),
            (wp("wu(e'! ; S ; e')"), "comm", "v".to_string()),
            (wp("S"), "trigger", "e'".to_string()),
        ]
    );
}
