use thiserror::Error;

/// Errors surfaced by constructors, preconditioned checkers and the naive
/// recursion oracle.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("subtraction set needs at least one action")]
    EmptySet,
    #[error("subtraction set actions must be positive")]
    ZeroAction,
    #[error("duplicate action {0} in subtraction set")]
    DuplicateAction(u64),
    #[error("expected a set of exactly {expected} actions, got {got}")]
    WrongArity { expected: usize, got: usize },
    #[error("requires the dominant regime (2*s2 <= s1)")]
    NotDominant,
    #[error("requires the non-dominant regime (2*s2 > s1)")]
    NotNonDominant,
    #[error("sets with s1/s2 = (k+1)/k are excluded")]
    ConsecutiveRatio,
    #[error("requires an additive set (s1 = s2 + s3)")]
    NotAdditive,
    #[error("sets with integer s2/s3 are excluded")]
    IntegerRatio,
    #[error("heap {heap} exceeds the naive recursion guard of {guard}")]
    HeapGuard { heap: u64, guard: u64 },
    #[error("naive recursion budget of {budget} nodes exhausted")]
    BudgetExhausted { budget: u64 },
    #[error("naive recursion supports at most {max} actions")]
    TooManyActions { max: usize },
    #[error(
        "requested {requested} sets of size {size} from 1..={max_val}, only {available} exist"
    )]
    InfeasibleCount {
        requested: u64,
        size: u64,
        max_val: u64,
        available: u64,
    },
}
