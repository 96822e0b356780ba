//! Bundled example models.

use crate::error::Result;
use crate::syntax::{parse, Calculus, DefinitionEnv, Process};

#[derive(Clone, Copy, Debug)]
pub struct CorpusEntry {
    pub name: &'static str,
    pub calculus: Calculus,
    pub source: &'static str,
}

impl CorpusEntry {
    pub fn load(&self) -> Result<(Process, DefinitionEnv)> {
        parse(self.source, self.calculus)
    }
}

pub const CORPUS: &[CorpusEntry] = &[
    CorpusEntry {
        name: "sensor_ccsdp",
        calculus: Calculus::CcsDp,
        source: include_str!("../corpus/sensor_ccsdp.proc"),
    },
    CorpusEntry {
        name: "sensor_webpi",
        calculus: Calculus::WebPi,
        source: include_str!("../corpus/sensor_webpi.proc"),
    },
    CorpusEntry {
        name: "deadlock_pair",
        calculus: Calculus::CcsDp,
        source: include_str!("../corpus/deadlock_pair.proc"),
    },
    CorpusEntry {
        name: "fraction_basics",
        calculus: Calculus::CcsDp,
        source: include_str!("../corpus/fraction_basics.proc"),
    },
];

pub fn corpus_entry(name: &str) -> Option<&'static CorpusEntry> {
    CORPUS.iter().find(|e| e.name == name)
}

/// The calculus named by a `# calculus: <name>` comment, if any.
pub fn declared_calculus(text: &str) -> Option<Calculus> {
    text.lines().find_map(|line| {
        let rest = line.trim().strip_prefix('#')?.trim();
        let value = rest.strip_prefix("calculus:")?;
        value.trim().parse().ok()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_entries_parse() {
        for e in CORPUS {
            e.load().unwrap_or_else(|err| panic!("{}: {err}", e.name));
            assert_eq!(declared_calculus(e.source), Some(e.calculus));
        }
    }

    #[test]
    fn pragma() {
        assert_eq!(declared_calculus("#calculus: webpi\nmain = 0"), Some(Calculus::WebPi));
        assert_eq!(declared_calculus("main = 0"), None);
    }
}
