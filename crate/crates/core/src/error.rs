use std::fmt;

use thiserror::Error;

use crate::syntax::Calculus;

/// A constructor that is not legal in the calculus a term is checked against.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub calculus: Calculus,
    pub construct: &'static str,
    /// Definition the offending construct occurs in, `None` for `main`.
    pub location: Option<String>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} is not allowed in {}", self.construct, self.calculus)?;
        if let Some(def) = &self.location {
            write!(f, " (in definition of `{def}`)")?;
        }
        Ok(())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{line}:{column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("{line}:{column}: sum branch is not prefix-guarded")]
    UnguardedSum { line: usize, column: usize },

    #[error("unguarded recursion through constant `{0}`")]
    UnguardedRecursion(String),

    #[error("unbound constant `{0}`")]
    UnboundConstant(String),

    #[error("duplicate definition of `{0}`")]
    DuplicateDefinition(String),

    #[error("missing `main` definition")]
    MissingMain,

    #[error("calculus violation: {}", join(.0))]
    CalculusViolation(Vec<Violation>),

    #[error("state bound of {0} exceeded")]
    StateBoundExceeded(usize),
}

fn join(vs: &[Violation]) -> String {
    vs.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
