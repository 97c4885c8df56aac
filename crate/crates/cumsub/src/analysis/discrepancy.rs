//! Outcome discrepancies between two conventions over a range of heaps.

use crate::convention::Convention;
use crate::outcome::OutcomePair;
use crate::set::SubtractionSet;
use crate::solver::solve;
use crate::zero_sum::zero_sum_solve;

/// What counts as a discrepancy at a heap.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Criterion {
    /// The spreads `o1 - o2` of the two conventions differ.
    DiffOfDiff,
    /// Some component of the outcome pairs differs.
    Componentwise,
    /// The zero-sum score differs from the `AvA` spread `o1 - o2`.
    ZsVsAva,
}

impl Criterion {
    pub fn as_str(self) -> &'static str {
        match self {
            Criterion::DiffOfDiff => "diff_of_diff",
            Criterion::Componentwise => "componentwise",
            Criterion::ZsVsAva => "zs_vs_ava",
        }
    }
}

impl std::fmt::Display for Criterion {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Componentwise and spread deltas of one heap between two conventions
/// (`other` minus `base`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DiscrepancyRecord {
    pub heap: u64,
    /// First mover's delta.
    pub d1: i64,
    /// Second player's delta.
    pub d2: i64,
    /// Spread delta; always equals `d1 - d2`.
    pub diff_of_diff: i64,
}

impl DiscrepancyRecord {
    pub fn from_outcomes(heap: u64, base: OutcomePair, other: OutcomePair) -> Self {
        DiscrepancyRecord {
            heap,
            d1: other.o1 as i64 - base.o1 as i64,
            d2: other.o2 as i64 - base.o2 as i64,
            diff_of_diff: other.spread() - base.spread(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.d1 == 0 && self.d2 == 0
    }
}

/// One record per heap `0..=hmax` comparing `other` against `base`.
pub fn discrepancy_table(
    set: &SubtractionSet,
    base: Convention,
    other: Convention,
    hmax: u64,
) -> Vec<DiscrepancyRecord> {
    let table = solve(set, hmax);
    (0..=hmax)
        .map(|h| {
            DiscrepancyRecord::from_outcomes(h, table.outcome(base, h), table.outcome(other, h))
        })
        .collect()
}

/// Smallest heap `<= hmax` exhibiting the criterion, if any.
///
/// For [`Criterion::ZsVsAva`] the comparison is the zero-sum score against the
/// `AvA` spread and `base`/`other` play no role.
pub fn first_discrepancy(
    set: &SubtractionSet,
    base: Convention,
    other: Convention,
    hmax: u64,
    criterion: Criterion,
) -> Option<u64> {
    match criterion {
        Criterion::ZsVsAva => {
            let table = solve(set, hmax);
            let zs = zero_sum_solve(set, hmax);
            (0..=hmax).find(|&h| zs[h as usize] != table.outcome(Convention::AvA, h).spread())
        }
        Criterion::DiffOfDiff => {
            let table = solve(set, hmax);
            (0..=hmax)
                .find(|&h| table.outcome(base, h).spread() != table.outcome(other, h).spread())
        }
        Criterion::Componentwise => {
            let table = solve(set, hmax);
            (0..=hmax).find(|&h| table.outcome(base, h) != table.outcome(other, h))
        }
    }
}
