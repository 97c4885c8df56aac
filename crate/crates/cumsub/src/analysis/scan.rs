//! Parameter-space sweeps: which subtraction sets exhibit a discrepancy at
//! all, and where it first appears.
//!
//! Sets are independent work items, distributed over the current rayon pool
//! (wrap calls in `ThreadPool::install` to control the worker count). Results
//! are sorted by action tuple, so output is identical at any parallelism.

use rayon::prelude::*;

use crate::analysis::discrepancy::{first_discrepancy, Criterion};
use crate::convention::Convention;
use crate::set::SubtractionSet;

/// A set that exhibited the criterion, with the smallest witnessing heap.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanPoint {
    pub set: SubtractionSet,
    pub first_heap: Option<u64>,
    pub criterion: Criterion,
}

/// Number of actions swept by [`scan_ava_vs_zero_sum`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Arity {
    Two,
    Three,
}

/// Sweeps all pairs `s2 < s1 <= smax` for an `FvF`-vs-`AvA` discrepancy
/// within `hmax`, returning one point per hit.
pub fn scan_two_action(smax: u64, hmax: u64, criterion: Criterion) -> Vec<ScanPoint> {
    let pairs: Vec<[u64; 2]> = (1..=smax)
        .flat_map(|s2| (s2 + 1..=smax).map(move |s1| [s2, s1]))
        .collect();
    scan_sets(&pairs, hmax, criterion)
}

/// Sweeps all triples `s3 < s2 < s1 <= smax`.
pub fn scan_three_action(smax: u64, hmax: u64, criterion: Criterion) -> Vec<ScanPoint> {
    let triples: Vec<[u64; 3]> = (1..=smax)
        .flat_map(|s3| {
            (s3 + 1..=smax).flat_map(move |s2| (s2 + 1..=smax).map(move |s1| [s3, s2, s1]))
        })
        .collect();
    scan_sets(&triples, hmax, criterion)
}

/// Sweeps pairs or triples for heaps where the zero-sum score and the `AvA`
/// spread disagree.
pub fn scan_ava_vs_zero_sum(arity: Arity, smax: u64, hmax: u64) -> Vec<ScanPoint> {
    match arity {
        Arity::Two => scan_two_action(smax, hmax, Criterion::ZsVsAva),
        Arity::Three => scan_three_action(smax, hmax, Criterion::ZsVsAva),
    }
}

fn scan_sets<const N: usize>(tuples: &[[u64; N]], hmax: u64, criterion: Criterion) -> Vec<ScanPoint> {
    let mut points: Vec<ScanPoint> = tuples
        .par_iter()
        .filter_map(|actions| {
            let set = SubtractionSet::new(actions.to_vec()).expect("generated tuples are valid");
            first_discrepancy(&set, Convention::FvF, Convention::AvA, hmax, criterion).map(
                |h| ScanPoint {
                    set,
                    first_heap: Some(h),
                    criterion,
                },
            )
        })
        .collect();
    points.sort_by(|a, b| a.set.actions().cmp(b.set.actions()));
    points
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hit(points: &[ScanPoint], actions: &[u64]) -> Option<u64> {
        points
            .iter()
            .find(|p| p.set.actions() == actions)
            .and_then(|p| p.first_heap)
    }

    #[test]
    fn two_action_sweep_small() {
        let points = scan_two_action(8, 300, Criterion::DiffOfDiff);
        assert_eq!(hit(&points, &[3, 5]), Some(14));
        // dominant pairs and (k+1):k ratios never show one
        for p in &points {
            let r = p.set.regime().unwrap();
            assert!(!r.is_dominant(), "{} should be absent", p.set);
            assert!(
                !crate::analysis::has_consecutive_ratio(&p.set).unwrap(),
                "{} should be absent",
                p.set
            );
        }
    }

    #[test]
    fn zero_sum_sweep_of_pairs_is_empty() {
        assert!(scan_ava_vs_zero_sum(Arity::Two, 10, 300).is_empty());
    }

    #[test]
    fn three_action_sweep_contains_4_5_9() {
        let points = scan_three_action(9, 99, Criterion::DiffOfDiff);
        let h = hit(&points, &[4, 5, 9]).expect("{4,5,9} diverges");
        assert!(h <= 99);
    }

    #[test]
    fn three_action_sweep_exclusions() {
        let points = scan_three_action(9, 300, Criterion::DiffOfDiff);
        // additive triples with integer s2/s3 stay quiet
        assert_eq!(hit(&points, &[1, 2, 3]), None);
        assert_eq!(hit(&points, &[2, 4, 6]), None);
        assert_eq!(hit(&points, &[3, 6, 9]), None);
        // additive with fractional s2/s3 diverges where the formula says
        assert_eq!(
            hit(&points, &[2, 3, 5]),
            Some(crate::analysis::predicted_first_discrepancy_additive(&set(&[2, 3, 5])).unwrap())
        );
        // s1 >= 2*s2 with a quiet two-action core stays quiet
        assert_eq!(hit(&points, &[2, 4, 8]), None);
        assert_eq!(hit(&points, &[2, 4, 9]), None);
    }

    fn set(actions: &[u64]) -> SubtractionSet {
        SubtractionSet::new(actions.to_vec()).unwrap()
    }

    #[test]
    fn zero_sum_triples_respect_conjectured_boundaries() {
        for p in scan_ava_vs_zero_sum(Arity::Three, 9, 300) {
            let (s1, s2, s3) = (p.set.s1(), p.set.s2(), p.set.s3());
            assert!(s2 > 2 * s3 && s1 < s2 + s3, "{} inside quiet region", p.set);
        }
    }

    #[test]
    fn order_is_canonical() {
        let points = scan_two_action(7, 300, Criterion::DiffOfDiff);
        let mut sorted = points.clone();
        sorted.sort_by(|a, b| a.set.actions().cmp(b.set.actions()));
        assert_eq!(points, sorted);
    }
}
