//! Cumulative subtraction games under deterministic tie-breaking.
//!
//! Two players alternately remove an amount from a shared heap, each keeping
//! what they take. Both maximize their own pocket; when several moves are
//! equally good for the mover, a committed convention breaks the tie either
//! in the opponent's favor (friendly) or against them (antagonistic). The
//! four convention pairs `FvF`, `FvA`, `AvF` and `AvA` each induce their own
//! equilibrium, computed here by exact backward induction.
//!
//! On top of the solver sit the zero-sum scoring variant, discrepancy tables
//! between conventions, parameter-space scans, checkers for the structural
//! laws of two-action play, periodicity detection and seeded sampling for
//! randomized sweeps.

pub mod analysis;
mod convention;
mod error;
mod oracle;
mod outcome;
mod set;
mod solver;
mod zero_sum;

pub use convention::Convention;
pub use error::Error;
pub use oracle::{naive_pspe, naive_pspe_with_budget, NAIVE_DEFAULT_BUDGET, NAIVE_HEAP_GUARD};
pub use outcome::OutcomePair;
pub use set::{Regime, RegimeKind, SubtractionSet};
pub use solver::{play_line, solve, PositionSolution, SolveTable};
pub use zero_sum::{zero_sum_solve, zs_play_line};
