use std::fmt::Write;

use anyhow::{bail, Result};
use reconfig_calc_core::analysis::{LtsJson, TraceJson};
use reconfig_calc_core::{
    bisim_terms, build_lts, canonicalize, check_termination, explore, export_dot, find_deadlocks,
    pretty_print, trace as run_trace, Error, Lts, Strategy, System, Verdict,
};
use serde_json::json;

use crate::input::{load, merge_envs, Model};
use crate::{Config, Format, Outcome};

/// Exit status for a failed command: 3 when a state bound was exceeded,
/// 2 for everything else.
pub fn error_code(e: &anyhow::Error) -> u8 {
    match e.downcast_ref::<Error>() {
        Some(Error::StateBoundExceeded(_)) => 3,
        _ => 2,
    }
}

fn ok(stdout: String) -> Result<Outcome> {
    Ok(Outcome { stdout, code: 0 })
}

fn to_json(value: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serialisable");
    s.push('\n');
    s
}

fn system(model: &Model, config: &Config) -> System {
    System::new(model.calculus, model.env.clone(), config.match_mode())
}

pub fn parse(file: &str, config: &Config) -> Result<Outcome> {
    let model = load(file, config.calculus())?;
    let main = canonicalize(&model.main);
    match config.format {
        Format::Text => {
            let mut out = String::new();
            for (name, body) in model.env.iter() {
                writeln!(out, "{name} = {};", pretty_print(body, &model.env))?;
            }
            writeln!(out, "main = {}", pretty_print(&main, &model.env))?;
            ok(out)
        }
        Format::Json => {
            let defs: serde_json::Map<String, serde_json::Value> = model
                .env
                .iter()
                .map(|(n, b)| (n.to_string(), pretty_print(b, &model.env).into()))
                .collect();
            ok(to_json(&json!({
                "calculus": model.calculus,
                "definitions": defs,
                "main": pretty_print(&main, &model.env),
            })))
        }
        Format::Dot => bail!("parse has no dot output"),
    }
}

pub fn trace(file: &str, config: &Config, strategy: Strategy, steps: usize) -> Result<Outcome> {
    let model = load(file, config.calculus())?;
    let sys = system(&model, config);
    let t = run_trace(&sys, &model.main, strategy, config.seed, steps)?;
    let json: TraceJson = t.to_json(&model.env);
    match config.format {
        Format::Text => {
            let mut out = format!("   {}\n", json.initial);
            for s in &json.steps {
                writeln!(out, "-> {}    [{} {}]", s.term, s.rule, s.label)?;
            }
            ok(out)
        }
        Format::Json => ok(to_json(&json)),
        Format::Dot => bail!("trace has no dot output"),
    }
}

pub fn check(file: &str, config: &Config) -> Result<Outcome> {
    let model = load(file, config.calculus())?;
    let sys = system(&model, config);
    let space = explore(&sys, &model.main, config.bound)?;
    let stuck = find_deadlocks(&space);
    let verdict = check_termination(&space);
    let code = if !stuck.is_empty() {
        1
    } else if space.truncated {
        3
    } else {
        0
    };
    let show = |i: usize| pretty_print(&space.lts.states[i], &model.env);
    let stdout = match config.format {
        Format::Text => {
            let mut out = String::new();
            writeln!(out, "states: {}", space.lts.states.len())?;
            writeln!(out, "edges: {}", space.lts.edges.len())?;
            writeln!(
                out,
                "truncated: {}",
                if space.truncated { "yes" } else { "no" }
            )?;
            writeln!(out, "stuck states (incl. deadlocks): {}", stuck.len())?;
            for &i in &stuck {
                writeln!(out, "  s{i}: {}", show(i))?;
            }
            match &verdict {
                Verdict::Diverges(cycle) => {
                    let path: Vec<String> = cycle.iter().map(|i| format!("s{i}")).collect();
                    writeln!(out, "termination: diverges (cycle {})", path.join(" -> "))?;
                }
                v => writeln!(out, "termination: {v}")?,
            }
            if space.truncated {
                writeln!(
                    out,
                    "note: bound of {} states reached; results cover the explored part only",
                    config.bound
                )?;
            }
            out
        }
        Format::Json => {
            let witness = match &verdict {
                Verdict::Diverges(c) => Some(c.clone()),
                _ => None,
            };
            to_json(&json!({
                "calculus": model.calculus,
                "states": space.lts.states.len(),
                "edges": space.lts.edges.len(),
                "truncated": space.truncated,
                "stuck_states": stuck
                    .iter()
                    .map(|&i| json!({ "index": i, "term": show(i) }))
                    .collect::<Vec<_>>(),
                "termination": verdict.to_string(),
                "witness": witness,
            }))
        }
        Format::Dot => export_dot(&space.lts, &model.env),
    };
    Ok(Outcome { stdout, code })
}

pub fn bisim(file1: &str, file2: &str, config: &Config) -> Result<Outcome> {
    let a = load(file1, config.calculus())?;
    let b = load(file2, Some(config.calculus().unwrap_or(a.calculus)))?;
    let env = merge_envs(&a.env, &b.env)?;
    let sys = System::new(a.calculus, env, config.match_mode());
    let same = bisim_terms(&sys, &a.main, &b.main, config.bound)?;
    let stdout = match config.format {
        Format::Text => format!("{}\n", if same { "equivalent" } else { "not equivalent" }),
        Format::Json => to_json(&json!({ "equivalent": same })),
        Format::Dot => bail!("bisim has no dot output"),
    };
    Ok(Outcome {
        stdout,
        code: if same { 0 } else { 1 },
    })
}

pub fn lts(file: &str, config: &Config, silent: bool) -> Result<Outcome> {
    let model = load(file, config.calculus())?;
    let sys = system(&model, config);
    let lts: Lts = if silent {
        let space = explore(&sys, &model.main, config.bound)?;
        if space.truncated {
            return Err(Error::StateBoundExceeded(config.bound).into());
        }
        space.lts
    } else {
        build_lts(&sys, &model.main, config.bound)?
    };
    match config.format {
        Format::Text => {
            let mut out = String::new();
            for (i, s) in lts.states.iter().enumerate() {
                let mark = if i == lts.initial { "*" } else { " " };
                writeln!(out, "{mark}s{i} = {}", pretty_print(s, &model.env))?;
            }
            for (s, l, t) in &lts.edges {
                writeln!(out, " s{s} --{l}--> s{t}")?;
            }
            ok(out)
        }
        Format::Json => ok(to_json(&LtsJson::new(&lts, &model.env))),
        Format::Dot => ok(export_dot(&lts, &model.env)),
    }
}
