//! Property tests for the structural invariants of the solver and the
//! analysis helpers.

use proptest::prelude::*;

use cumsub::analysis::{
    detect_periodicity, discrepancy_table, first_discrepancy, scan_two_action, Criterion,
    PeriodicityMode,
};
use cumsub::Convention::{AvA, AvF, FvA, FvF};
use cumsub::{
    naive_pspe_with_budget, play_line, solve, zero_sum_solve, Convention, SubtractionSet,
};

fn arb_set(max_len: usize, max_val: u64) -> impl Strategy<Value = SubtractionSet> {
    proptest::collection::btree_set(1..=max_val, 1..=max_len)
        .prop_map(|actions| SubtractionSet::new(actions.into_iter().collect::<Vec<_>>()).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn conservation_and_move_set_structure(set in arb_set(6, 30)) {
        let hmax = 120;
        let table = solve(&set, hmax);
        for x in Convention::ALL {
            for h in 0..=hmax {
                let sol = table.solution(x, h);
                let o = sol.outcome;
                prop_assert!(o.total() <= h);
                prop_assert!(h - o.total() < set.min_action());
                // refined set is a nonempty subset of the indifference set,
                // which holds feasible maximizers only
                prop_assert!(sol.pspe_moves.iter().all(|m| sol.best_own.contains(m)));
                prop_assert_eq!(sol.best_own.is_empty(), h < set.min_action());
                prop_assert_eq!(sol.pspe_moves.is_empty(), h < set.min_action());
                for &s in &sol.best_own {
                    prop_assert!(s <= h);
                }
                // every refined move reproduces the same outcome pair
                for &s in &sol.pspe_moves {
                    let after = table.outcome(x.dual(), h - s);
                    prop_assert_eq!(s + after.o2, o.o1);
                    prop_assert_eq!(after.o1, o.o2);
                }
            }
        }
    }

    #[test]
    fn coupled_conventions_are_mutually_consistent(set in arb_set(5, 20)) {
        let hmax = 100;
        let table = solve(&set, hmax);
        for (x, d) in [(FvA, AvF), (AvF, FvA)] {
            for h in set.min_action()..=hmax {
                let own_best = set
                    .feasible(h)
                    .iter()
                    .map(|&s| s + table.outcome(d, h - s).o2)
                    .max()
                    .unwrap();
                prop_assert_eq!(table.outcome(x, h).o1, own_best, "{} h={}", x, h);
            }
        }
    }

    #[test]
    fn solve_is_deterministic(set in arb_set(5, 25)) {
        let a = solve(&set, 80);
        let b = solve(&set, 80);
        prop_assert_eq!(a, b);
    }

    #[test]
    fn zero_sum_score_is_bounded_by_the_largest_action(set in arb_set(6, 25)) {
        let values = zero_sum_solve(&set, 300);
        let bound = set.max_action() as i64;
        prop_assert!(values.iter().all(|v| v.abs() <= bound));
    }

    #[test]
    fn line_utilities_match_table_outcomes(set in arb_set(5, 15), h in 0u64..=90) {
        let table = solve(&set, 90);
        for x in Convention::ALL {
            let line = play_line(&table, x, h);
            let take = |m: u8| -> u64 {
                line.iter().filter(|&&(p, _)| p == m).map(|&(_, a)| a).sum()
            };
            let o = table.outcome(x, h);
            prop_assert_eq!(take(1), o.o1);
            prop_assert_eq!(take(2), o.o2);
            // movers alternate starting with 1
            for (i, &(mover, _)) in line.iter().enumerate() {
                prop_assert_eq!(mover, if i % 2 == 0 { 1 } else { 2 });
            }
        }
    }

    #[test]
    fn absent_first_discrepancy_means_all_records_zero(
        set in arb_set(3, 12),
        criterion in prop_oneof![Just(Criterion::DiffOfDiff), Just(Criterion::Componentwise)],
    ) {
        let hmax = 150;
        let records = discrepancy_table(&set, FvF, AvA, hmax);
        for r in &records {
            prop_assert_eq!(r.diff_of_diff, r.d1 - r.d2);
        }
        let first = first_discrepancy(&set, FvF, AvA, hmax, criterion);
        let trip = |r: &cumsub::analysis::DiscrepancyRecord| match criterion {
            Criterion::DiffOfDiff => r.diff_of_diff != 0,
            Criterion::Componentwise => !r.is_zero(),
            Criterion::ZsVsAva => unreachable!(),
        };
        match first {
            None => prop_assert!(records.iter().all(|r| !trip(r))),
            Some(h) => {
                prop_assert!(trip(&records[h as usize]));
                prop_assert!(records[..h as usize].iter().all(|r| !trip(r)));
            }
        }
    }

    #[test]
    fn detected_periods_revalidate(
        prefix in proptest::collection::vec(-20i64..=20, 0..12),
        block in proptest::collection::vec(-20i64..=20, 1..8),
        shift in -5i64..=5,
        cycles in 6usize..12,
    ) {
        let mut f = prefix.clone();
        for cycle in 0..cycles as i64 {
            for &b in &block {
                f.push(b + shift * cycle);
            }
        }
        let pmax = block.len();
        prop_assume!(f.len() > 2 * pmax);
        let report = detect_periodicity(&f, pmax, PeriodicityMode::Additive);
        // the construction guarantees a period no larger than the block
        let report = report.expect("constructed sequence must be detected");
        prop_assert!(report.period <= block.len());
        prop_assert!(report.verified_up_to == f.len() - 1);
        for h in report.preperiod..=report.verified_up_to - report.period {
            prop_assert_eq!(f[h + report.period], f[h] + report.additive_constant);
        }
    }
}

// Naive recursion and table solver agree; kept lighter than the full
// acceptance sweep so the property suite stays quick.
proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn table_solver_agrees_with_naive_recursion(
        set in arb_set(5, 12).prop_filter("need two actions", |s| s.len() >= 2),
        h in 0u64..=24,
    ) {
        let table = solve(&set, h);
        for x in Convention::ALL {
            let naive = naive_pspe_with_budget(&set, x, h, 1 << 28).unwrap();
            prop_assert_eq!(naive, table.outcome(x, h), "{} h={}", x, h);
        }
    }
}

#[test]
fn scans_are_identical_at_any_worker_count() {
    let single = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap()
        .install(|| scan_two_action(12, 200, Criterion::DiffOfDiff));
    let many = rayon::ThreadPoolBuilder::new()
        .num_threads(8)
        .build()
        .unwrap()
        .install(|| scan_two_action(12, 200, Criterion::DiffOfDiff));
    assert_eq!(single, many);
}
