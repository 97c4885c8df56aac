//! Un-memoized reference recursion used to cross-check the table solver.
//!
//! Recomputes every subposition from scratch, so the cost grows exponentially
//! with the heap. A node budget keeps runaway inputs from hanging the caller.

use crate::convention::Convention;
use crate::error::Error;
use crate::outcome::OutcomePair;
use crate::set::SubtractionSet;

/// Largest heap [`naive_pspe`] accepts without an explicit budget.
pub const NAIVE_HEAP_GUARD: u64 = 64;

/// Default node budget, also applied under the heap guard: heaps up to 64
/// are still intractable when the set is dense in small actions.
pub const NAIVE_DEFAULT_BUDGET: u64 = 1 << 31;

const MAX_ORACLE_ACTIONS: usize = 32;

/// Outcome at `(x, h)` by direct recursion, no tables. Refuses heaps above
/// [`NAIVE_HEAP_GUARD`]; use [`naive_pspe_with_budget`] to lift that.
pub fn naive_pspe(set: &SubtractionSet, x: Convention, h: u64) -> Result<OutcomePair, Error> {
    if h > NAIVE_HEAP_GUARD {
        return Err(Error::HeapGuard {
            heap: h,
            guard: NAIVE_HEAP_GUARD,
        });
    }
    naive_pspe_with_budget(set, x, h, NAIVE_DEFAULT_BUDGET)
}

/// Outcome at `(x, h)` by direct recursion, aborting with
/// [`Error::BudgetExhausted`] once more than `budget` positions have been
/// expanded.
pub fn naive_pspe_with_budget(
    set: &SubtractionSet,
    x: Convention,
    h: u64,
    budget: u64,
) -> Result<OutcomePair, Error> {
    if set.len() > MAX_ORACLE_ACTIONS {
        return Err(Error::TooManyActions {
            max: MAX_ORACLE_ACTIONS,
        });
    }
    let mut nodes = 0u64;
    recurse(set, x, h, &mut nodes, budget)
}

fn recurse(
    set: &SubtractionSet,
    x: Convention,
    h: u64,
    nodes: &mut u64,
    budget: u64,
) -> Result<OutcomePair, Error> {
    *nodes += 1;
    if *nodes > budget {
        return Err(Error::BudgetExhausted { budget });
    }
    let feasible = set.feasible(h);
    if feasible.is_empty() {
        return Ok(OutcomePair::ZERO);
    }

    let dual = x.dual();
    let mut children = [(0u64, OutcomePair::ZERO); MAX_ORACLE_ACTIONS];
    let mut len = 0;
    let mut own = 0u64;
    for &s in feasible {
        let after = recurse(set, dual, h - s, nodes, budget)?;
        children[len] = (s, after);
        len += 1;
        own = own.max(s + after.o2);
    }

    let ties = children[..len]
        .iter()
        .filter(|&&(s, after)| s + after.o2 == own)
        .map(|&(_, after)| after.o1);
    let selected = if x.mover_friendly() {
        ties.max().unwrap()
    } else {
        ties.min().unwrap()
    };
    Ok(OutcomePair::new(own, selected))
}
