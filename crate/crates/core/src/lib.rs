//! Modelling and analysis of dynamic reconfiguration in two process calculi:
//! CCS^dp, which adds fraction processes `{ N / D }` to CCS, and
//! Webpi-infinity, an asynchronous pi-calculus with workunits
//! `wu(P ; Q ; x)`.
//!
//! ```
//! use reconfig_calc_core::{explore, parse, Calculus, MatchMode, System};
//!
//! let (main, env) = parse("main = a?.0 | a!.0", Calculus::CcsDp).unwrap();
//! let system = System::new(Calculus::CcsDp, env, MatchMode::Syntactic);
//! let space = explore(&system, &main, 100).unwrap();
//! assert_eq!(space.lts.states.len(), 2);
//! ```

pub mod analysis;
pub mod canonical;
pub mod ccsdp;
pub mod corpus;
pub mod equivalence;
pub mod error;
pub mod semantics;
pub mod syntax;
#[cfg(feature = "testing")]
pub mod testing;
pub mod webpi;

pub use analysis::{
    check_termination, explore, export_dot, find_deadlocks, trace, ReductionTrace, StateSpace,
    Strategy, Verdict,
};
pub use canonical::{canonicalize, NormalForm};
pub use equivalence::{
    bisim_terms, build_lts, strong_bisim, Lts, MatchMode, DEFAULT_STATE_BOUND,
    DEFAULT_UNFOLD_DEPTH,
};
pub use error::{Error, Result, Violation};
pub use semantics::{Label, Rule, Step, System};
pub use syntax::{
    alpha_equivalent, free_names, parse, parse_process, pretty_print, pretty_print_program,
    substitute, validate_calculus, Calculus, DefinitionEnv, Name, Process,
};
pub use webpi::{wp_enabled_interactions, wp_reduce, Interaction, WebPiState};
