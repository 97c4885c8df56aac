//! Discrepancy measurement, parameter-space scans, law checkers, periodicity
//! detection and reproducible sampling.

pub mod checks;
pub mod discrepancy;
pub mod periodicity;
pub mod sampling;
pub mod scan;

pub use checks::{
    check_dominant_equality, check_first_player_advantage, check_main_theorem,
    check_tiebreak_monotonicity, has_consecutive_ratio, predicted_first_discrepancy_2action,
    predicted_first_discrepancy_additive, Relation,
};
pub use discrepancy::{discrepancy_table, first_discrepancy, Criterion, DiscrepancyRecord};
pub use periodicity::{detect_periodicity, PeriodicityMode, PeriodicityReport};
pub use sampling::{sample_random_sets, SAMPLE_ALGORITHM};
pub use scan::{scan_ava_vs_zero_sum, scan_three_action, scan_two_action, Arity, ScanPoint};
