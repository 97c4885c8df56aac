//! Backward-induction solver for all four tie-breaking conventions.
//!
//! From a heap `h` with feasible actions `S(h)` the mover's pocket is
//! `o1(h) = max { s + o2_d(h - s) : s in S(h) }` where `d` is the dual
//! convention governing the position after the move. Every maximizer forms
//! the indifference set; the mover's own rule then selects among them by the
//! opponent's resulting pocket `o1_d(h - s)` (largest if friendly, smallest
//! if antagonistic), and `o2(h)` is that selected value. Heaps below the
//! smallest action are terminal with outcome `(0,0)`.

use crate::convention::Convention;
use crate::outcome::OutcomePair;
use crate::set::SubtractionSet;

/// Solved data for one heap under one convention.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PositionSolution {
    pub heap: u64,
    pub outcome: OutcomePair,
    /// Indifference set: feasible actions maximizing the mover's own pocket.
    /// Ascending; empty only below the smallest action.
    pub best_own: Vec<u64>,
    /// The subset of `best_own` surviving the mover's tie-break. All members
    /// lead to the same outcome pair.
    pub pspe_moves: Vec<u64>,
}

impl PositionSolution {
    fn terminal(heap: u64) -> Self {
        PositionSolution {
            heap,
            outcome: OutcomePair::ZERO,
            best_own: Vec::new(),
            pspe_moves: Vec::new(),
        }
    }
}

/// Dense equilibrium tables for heaps `0..=hmax`, one row set per convention.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveTable {
    set: SubtractionSet,
    hmax: u64,
    rows: [Vec<PositionSolution>; 4],
}

impl SolveTable {
    pub fn set(&self) -> &SubtractionSet {
        &self.set
    }

    pub fn hmax(&self) -> u64 {
        self.hmax
    }

    /// Solution at `(x, h)`. Panics if `h > hmax`.
    pub fn solution(&self, x: Convention, h: u64) -> &PositionSolution {
        &self.rows[x.index()][h as usize]
    }

    pub fn outcome(&self, x: Convention, h: u64) -> OutcomePair {
        self.solution(x, h).outcome
    }

    /// All solutions for one convention, indexed by heap.
    pub fn solutions(&self, x: Convention) -> &[PositionSolution] {
        &self.rows[x.index()]
    }
}

/// Solves heaps `0..=hmax` for all four conventions.
///
/// `FvF` and `AvA` are self-dual and each solved in their own bottom-up pass.
/// `FvA` and `AvF` recurse into each other, so they are filled jointly, both
/// arrays advancing one heap at a time.
pub fn solve(set: &SubtractionSet, hmax: u64) -> SolveTable {
    let fvf = solve_self_dual(set, hmax, true);
    let ava = solve_self_dual(set, hmax, false);
    let (fva, avf) = solve_coupled(set, hmax);
    SolveTable {
        set: set.clone(),
        hmax,
        rows: [fvf, fva, avf, ava],
    }
}

fn solve_self_dual(set: &SubtractionSet, hmax: u64, mover_friendly: bool) -> Vec<PositionSolution> {
    let mut rows = Vec::with_capacity(hmax as usize + 1);
    for h in 0..=hmax {
        let sol = evaluate(set, h, mover_friendly, &rows);
        rows.push(sol);
    }
    rows
}

fn solve_coupled(set: &SubtractionSet, hmax: u64) -> (Vec<PositionSolution>, Vec<PositionSolution>) {
    let mut fva = Vec::with_capacity(hmax as usize + 1);
    let mut avf = Vec::with_capacity(hmax as usize + 1);
    for h in 0..=hmax {
        // dual(FvA) = AvF and vice versa; both only look below h.
        let f = evaluate(set, h, true, &avf);
        let a = evaluate(set, h, false, &fva);
        fva.push(f);
        avf.push(a);
    }
    (fva, avf)
}

/// One backward-induction step. `dual_rows` holds the dual convention's
/// solutions for every heap below `h`.
fn evaluate(
    set: &SubtractionSet,
    h: u64,
    mover_friendly: bool,
    dual_rows: &[PositionSolution],
) -> PositionSolution {
    let feasible = set.feasible(h);
    if feasible.is_empty() {
        return PositionSolution::terminal(h);
    }
    let after = |s: u64| dual_rows[(h - s) as usize].outcome;

    let own = feasible.iter().map(|&s| s + after(s).o2).max().unwrap();
    let best_own: Vec<u64> = feasible
        .iter()
        .copied()
        .filter(|&s| s + after(s).o2 == own)
        .collect();

    let opponent = |s: u64| after(s).o1;
    let tied = best_own.iter().map(|&s| opponent(s));
    let selected = if mover_friendly {
        tied.max().unwrap()
    } else {
        tied.min().unwrap()
    };
    let pspe_moves: Vec<u64> = best_own
        .iter()
        .copied()
        .filter(|&s| opponent(s) == selected)
        .collect();

    let outcome = OutcomePair::new(own, selected);
    debug_assert!(outcome.total() <= h && h - outcome.total() < set.min_action());
    PositionSolution {
        heap: h,
        outcome,
        best_own,
        pspe_moves,
    }
}

/// The principal line of play from `h`: repeatedly applies the canonical
/// equilibrium move (the smallest, all being outcome-equivalent) until the
/// heap is terminal. Entries are `(mover, action)` with movers alternating
/// 1, 2, 1, ... Action sums per mover reproduce the outcome pair at `h`.
pub fn play_line(table: &SolveTable, convention: Convention, h: u64) -> Vec<(u8, u64)> {
    assert!(
        h <= table.hmax(),
        "heap {h} outside solved range 0..={}",
        table.hmax()
    );
    let mut line = Vec::new();
    let mut conv = convention;
    let mut heap = h;
    let mut mover = 1u8;
    loop {
        let sol = table.solution(conv, heap);
        let Some(&action) = sol.pspe_moves.first() else {
            break;
        };
        line.push((mover, action));
        heap -= action;
        conv = conv.dual();
        mover = 3 - mover;
    }
    line
}
