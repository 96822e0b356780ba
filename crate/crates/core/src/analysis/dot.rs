use std::fmt::Write;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::equivalence::Lts;
use crate::syntax::{pretty_print, DefinitionEnv};

const MAX_LABEL: usize = 120;

/// Graphviz rendering. Nodes carry pretty-printed terms, edges their label
/// class; the initial state is drawn as a double circle.
pub fn export_dot(lts: &Lts, env: &DefinitionEnv) -> String {
    let mut out = String::from("digraph lts {\n  node [shape=ellipse];\n");
    for (i, state) in lts.states.iter().enumerate() {
        let label = node_label(&pretty_print(state, env));
        let shape = if i == lts.initial {
            ", shape=doublecircle"
        } else {
            ""
        };
        let _ = writeln!(out, "  s{i} [label=\"{}\"{shape}];", escape(&label));
    }
    for (s, l, t) in &lts.edges {
        let _ = writeln!(out, "  s{s} -> s{t} [label=\"{}\"];", escape(&l.to_string()));
    }
    out.push_str("}\n");
    out
}

/// Labels longer than the limit are cut and suffixed with a short digest of
/// the full text, so distinct long terms stay distinguishable.
fn node_label(text: &str) -> String {
    if text.chars().count() <= MAX_LABEL {
        return text.to_string();
    }
    let digest = Sha256::digest(text.as_bytes());
    let hex: String = digest[..4].iter().map(|b| format!("{b:02x}")).collect();
    let cut: String = text.chars().take(MAX_LABEL).collect();
    format!("{cut}... #{hex}")
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Serialised LTS: states as pretty-printed terms, edges by index.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LtsJson {
    pub states: Vec<String>,
    pub edges: Vec<EdgeJson>,
    pub initial: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeJson {
    pub source: usize,
    pub label: String,
    pub target: usize,
}

impl LtsJson {
    pub fn new(lts: &Lts, env: &DefinitionEnv) -> Self {
        LtsJson {
            states: lts.states.iter().map(|p| pretty_print(p, env)).collect(),
            edges: lts
                .edges
                .iter()
                .map(|(s, l, t)| EdgeJson {
                    source: *s,
                    label: l.to_string(),
                    target: *t,
                })
                .collect(),
            initial: lts.initial,
        }
    }
}
