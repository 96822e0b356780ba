//! Bounded analyses over silent-step state spaces: stuck states,
//! termination, traces and graph export.

mod dot;
mod explore;
mod trace;
mod verdict;

pub use dot::{export_dot, EdgeJson, LtsJson};
pub use explore::{explore, explore_with, find_deadlocks, is_inert, StateSpace};
pub use trace::{trace, ReductionTrace, Strategy, TraceJson, TraceStep, TraceStepJson};
pub use verdict::{check_termination, Verdict};
