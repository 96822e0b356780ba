use std::collections::{BTreeMap, BTreeSet};

use super::ast::{Name, Process};
use crate::error::{Error, Result};

/// Named, parameterless process definitions such as `S = v!.S + e!.S`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DefinitionEnv {
    bindings: BTreeMap<Name, Process>,
}

impl DefinitionEnv {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds an environment and checks that it is closed and guarded.
    pub fn from_definitions(defs: impl IntoIterator<Item = (Name, Process)>) -> Result<Self> {
        let mut env = DefinitionEnv::new();
        for (name, body) in defs {
            if env.bindings.insert(name.clone(), body).is_some() {
                return Err(Error::DuplicateDefinition(name.to_string()));
            }
        }
        for body in env.bindings.values() {
            env.check_closed(body)?;
        }
        env.check_guarded()?;
        Ok(env)
    }

    pub fn get(&self, name: &Name) -> Option<&Process> {
        self.bindings.get(name)
    }

    /// Body of a constant; panics on an unbound name, which closed
    /// environments rule out.
    pub(crate) fn body(&self, name: &Name) -> &Process {
        self.bindings
            .get(name)
            .unwrap_or_else(|| panic!("unbound constant `{name}` in a checked environment"))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Name, &Process)> {
        self.bindings.iter()
    }

    pub fn len(&self) -> usize {
        self.bindings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bindings.is_empty()
    }

    /// Every constant referenced by `term` is bound.
    pub fn check_closed(&self, term: &Process) -> Result<()> {
        let mut missing = None;
        term.for_each_constant(&mut |c| {
            if missing.is_none() && !self.bindings.contains_key(c) {
                missing = Some(c.to_string());
            }
        });
        match missing {
            Some(c) => Err(Error::UnboundConstant(c)),
            None => Ok(()),
        }
    }

    /// Rejects cycles of constant references that never pass a prefix.
    ///
    /// Fraction contents and workunit handlers count as guarded: neither
    /// contributes transitions until a reduction step activates it.
    pub fn check_guarded(&self) -> Result<()> {
        let graph: BTreeMap<&Name, BTreeSet<Name>> = self
            .bindings
            .iter()
            .map(|(n, body)| {
                let mut refs = BTreeSet::new();
                unguarded_constants(body, &mut refs);
                (n, refs)
            })
            .collect();

        #[derive(Clone, Copy, PartialEq)]
        enum Mark {
            Fresh,
            Active,
            Done,
        }
        let mut marks: BTreeMap<&Name, Mark> = graph.keys().map(|n| (*n, Mark::Fresh)).collect();

        fn visit<'a>(
            n: &'a Name,
            graph: &'a BTreeMap<&'a Name, BTreeSet<Name>>,
            marks: &mut BTreeMap<&'a Name, Mark>,
        ) -> Result<()> {
            match marks.get(n).copied() {
                Some(Mark::Done) | None => return Ok(()),
                Some(Mark::Active) => return Err(Error::UnguardedRecursion(n.to_string())),
                Some(Mark::Fresh) => {}
            }
            marks.insert(n, Mark::Active);
            if let Some((_, succs)) = graph.get_key_value(n) {
                for m in succs {
                    let key = graph.get_key_value(m).map(|(k, _)| *k);
                    if let Some(k) = key {
                        visit(k, graph, marks)?;
                    }
                }
            }
            marks.insert(n, Mark::Done);
            Ok(())
        }

        for n in graph.keys() {
            visit(n, &graph, &mut marks)?;
        }
        Ok(())
    }

    /// Free names of a constant's unfolding, computed to a fixpoint over the
    /// mutually recursive definitions.
    pub(crate) fn constant_free_names(&self) -> BTreeMap<Name, BTreeSet<Name>> {
        let mut sets: BTreeMap<Name, BTreeSet<Name>> = self
            .bindings
            .iter()
            .map(|(n, body)| (n.clone(), super::names::syntactic_free_names(body)))
            .collect();
        let deps: BTreeMap<Name, BTreeSet<Name>> = self
            .bindings
            .iter()
            .map(|(n, body)| {
                let mut cs = BTreeSet::new();
                body.for_each_constant(&mut |c| {
                    cs.insert(c.clone());
                });
                (n.clone(), cs)
            })
            .collect();
        loop {
            let mut changed = false;
            for (n, cs) in &deps {
                let mut add = BTreeSet::new();
                for c in cs {
                    if let Some(s) = sets.get(c) {
                        add.extend(s.iter().cloned());
                    }
                }
                let set = sets.get_mut(n).unwrap();
                let before = set.len();
                set.extend(add);
                changed |= set.len() != before;
            }
            if !changed {
                return sets;
            }
        }
    }
}

fn unguarded_constants(p: &Process, out: &mut BTreeSet<Name>) {
    match p {
        Process::Constant(c) => {
            out.insert(c.clone());
        }
        Process::Par(cs) => cs.iter().for_each(|c| unguarded_constants(c, out)),
        Process::Restrict(_, body) => unguarded_constants(body, out),
        Process::Workunit { body, .. } => unguarded_constants(body, out),
        Process::Nil
        | Process::Input(..)
        | Process::Output(..)
        | Process::OutputAtom(_)
        | Process::Sum(_)
        | Process::Fraction { .. } => {}
    }
}
