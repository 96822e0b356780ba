//! Concrete syntax, parsing, printing and name handling for both calculi.

mod ast;
mod env;
mod lexer;
mod names;
mod parser;
mod pretty;
mod validate;

pub use ast::{Calculus, Name, Process};
pub use env::DefinitionEnv;
pub use names::{alpha_equivalent, free_names, substitute, syntactic_free_names};
pub use parser::{parse, parse_process};
pub use pretty::{pretty_print, pretty_print_program};
pub use validate::{validate_calculus, validate_program};
