//! Reproducible random generation of subtraction sets.

use std::collections::HashSet;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::Error;
use crate::set::SubtractionSet;

/// Identifier of the sampling scheme, recorded alongside published results so
/// they can be regenerated byte for byte.
pub const SAMPLE_ALGORITHM: &str = "chacha8/index-sample/reject-duplicates/v1";

/// Draws `count` distinct subtraction sets of the given size with actions in
/// `1..=max_val`, uniformly without replacement. The same seed always yields
/// the same sets in the same order.
pub fn sample_random_sets(
    size: usize,
    max_val: u64,
    count: usize,
    seed: u64,
) -> Result<Vec<SubtractionSet>, Error> {
    if size == 0 || size as u64 > max_val {
        return Err(Error::InfeasibleCount {
            requested: count as u64,
            size: size as u64,
            max_val,
            available: 0,
        });
    }
    let available = binomial(max_val, size as u64);
    if count as u64 > available {
        return Err(Error::InfeasibleCount {
            requested: count as u64,
            size: size as u64,
            max_val,
            available,
        });
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen: HashSet<Vec<u64>> = HashSet::with_capacity(count);
    let mut sets = Vec::with_capacity(count);
    while sets.len() < count {
        let picked = rand::seq::index::sample(&mut rng, max_val as usize, size);
        let mut actions: Vec<u64> = picked.iter().map(|i| i as u64 + 1).collect();
        actions.sort_unstable();
        if seen.insert(actions.clone()) {
            sets.push(SubtractionSet::new(actions).expect("sampled actions are valid"));
        }
    }
    Ok(sets)
}

/// `n choose k`, saturating at `u64::MAX`.
fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut result: u128 = 1;
    for j in 0..k {
        result = result * (n - j) as u128 / (j + 1) as u128;
        if result > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    result as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(25, 3), 2300);
        assert_eq!(binomial(25, 10), 3_268_760);
        assert_eq!(binomial(3, 3), 1);
        assert_eq!(binomial(2, 3), 0);
    }

    #[test]
    fn draws_distinct_valid_sets() {
        let sets = sample_random_sets(3, 25, 200, 7).unwrap();
        assert_eq!(sets.len(), 200);
        let mut seen = HashSet::new();
        for s in &sets {
            assert_eq!(s.len(), 3);
            assert!(s.max_action() <= 25);
            assert!(seen.insert(s.actions().to_vec()), "duplicate {s}");
        }
    }

    #[test]
    fn deterministic_per_seed() {
        let a = sample_random_sets(4, 12, 50, 42).unwrap();
        let b = sample_random_sets(4, 12, 50, 42).unwrap();
        assert_eq!(a, b);
        let c = sample_random_sets(4, 12, 50, 43).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn exhausting_the_space() {
        let sets = sample_random_sets(3, 3, 1, 0).unwrap();
        assert_eq!(sets[0].actions(), &[1, 2, 3]);
        assert_eq!(
            sample_random_sets(3, 3, 2, 0).unwrap_err(),
            Error::InfeasibleCount {
                requested: 2,
                size: 3,
                max_val: 3,
                available: 1
            }
        );
    }
}
