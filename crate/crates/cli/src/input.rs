use std::path::Path;

use anyhow::{bail, Context, Result};
use reconfig_calc_core::corpus::{corpus_entry, declared_calculus};
use reconfig_calc_core::{parse, Calculus, DefinitionEnv, Process};

/// A model file after parsing.
pub struct Model {
    pub calculus: Calculus,
    pub main: Process,
    pub env: DefinitionEnv,
}

/// Reads `arg` as a path, falling back to the bundled corpus entry of that
/// name.
fn read_source(arg: &str) -> Result<(String, Option<Calculus>)> {
    let path = Path::new(arg);
    if path.exists() {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {arg}"))?;
        return Ok((text, None));
    }
    let name = arg.strip_suffix(".proc").unwrap_or(arg);
    match corpus_entry(name) {
        Some(entry) => Ok((entry.source.to_string(), Some(entry.calculus))),
        None => bail!("{arg}: no such file or bundled model"),
    }
}

/// The calculus comes from the flag, else a `# calculus:` line, else the
/// corpus entry, else CCS^dp.
pub fn load(arg: &str, flag: Option<Calculus>) -> Result<Model> {
    let (text, bundled) = read_source(arg)?;
    let calculus = flag
        .or_else(|| declared_calculus(&text))
        .or(bundled)
        .unwrap_or(Calculus::CcsDp);
    let (main, env) = parse(&text, calculus).with_context(|| arg.to_string())?;
    Ok(Model {
        calculus,
        main,
        env,
    })
}

/// Definitions of both models; a name may appear in both only with the same
/// body.
pub fn merge_envs(a: &DefinitionEnv, b: &DefinitionEnv) -> Result<DefinitionEnv> {
    let mut defs: Vec<_> = a.iter().map(|(n, p)| (n.clone(), p.clone())).collect();
    for (name, body) in b.iter() {
        match a.get(name) {
            Some(existing) if existing == body => {}
            Some(_) => bail!("conflicting definitions of `{name}`"),
            None => defs.push((name.clone(), body.clone())),
        }
    }
    Ok(DefinitionEnv::from_definitions(defs)?)
}
