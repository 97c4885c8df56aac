//! Zero-sum scoring play: one player's removals add to a shared score, the
//! other's subtract. `v(h) = max { s - v(h - s) : s in S(h) }`, zero below
//! the smallest action.

use crate::set::SubtractionSet;

/// Optimal zero-sum scores for heaps `0..=hmax`, from the mover's viewpoint.
pub fn zero_sum_solve(set: &SubtractionSet, hmax: u64) -> Vec<i64> {
    let mut values = vec![0i64; hmax as usize + 1];
    for h in 0..=hmax {
        let feasible = set.feasible(h);
        if let Some(best) = feasible
            .iter()
            .map(|&s| s as i64 - values[(h - s) as usize])
            .max()
        {
            values[h as usize] = best;
        }
    }
    values
}

/// Optimal zero-sum line from `h`, smallest action on ties. Entries are
/// `(mover, action)`; the signed action sum (mover 1 positive) equals the
/// zero-sum score at `h`.
pub fn zs_play_line(set: &SubtractionSet, h: u64) -> Vec<(u8, u64)> {
    let values = zero_sum_solve(set, h);
    let mut line = Vec::new();
    let mut heap = h;
    let mut mover = 1u8;
    loop {
        let feasible = set.feasible(heap);
        if feasible.is_empty() {
            break;
        }
        // ascending actions + strict improvement = smallest maximizer
        let mut action = feasible[0];
        let mut best = i64::MIN;
        for &s in feasible {
            let value = s as i64 - values[(heap - s) as usize];
            if value > best {
                best = value;
                action = s;
            }
        }
        line.push((mover, action));
        heap -= action;
        mover = 3 - mover;
    }
    line
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::set::SubtractionSet;

    fn set(actions: &[u64]) -> SubtractionSet {
        SubtractionSet::new(actions.to_vec()).unwrap()
    }

    /// Direct recursion over the definition, for cross-checking the table.
    fn naive_zs(set: &SubtractionSet, h: u64) -> i64 {
        set.feasible(h)
            .iter()
            .map(|&s| s as i64 - naive_zs(set, h - s))
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn matches_naive_recursion() {
        for actions in [vec![3, 5], vec![1], vec![2, 3, 7], vec![4, 5, 9]] {
            let s = set(&actions);
            let values = zero_sum_solve(&s, 45);
            for h in 0..=45 {
                assert_eq!(values[h as usize], naive_zs(&s, h), "{s} h={h}");
            }
        }
    }

    #[test]
    fn known_values() {
        let s = set(&[3, 5]);
        let values = zero_sum_solve(&s, 14);
        assert_eq!(values[2], 0);
        assert_eq!(values[14], 3);

        let single = set(&[1]);
        let values = zero_sum_solve(&single, 20);
        for h in 0..=20 {
            assert_eq!(values[h as usize], (h % 2) as i64);
        }
    }

    #[test]
    fn line_3_5() {
        let s = set(&[3, 5]);
        assert_eq!(zs_play_line(&s, 14), vec![(1, 5), (2, 5), (1, 3)]);
        assert_eq!(zs_play_line(&s, 2), vec![]);
        assert_eq!(zs_play_line(&s, 5), vec![(1, 5)]);
    }

    #[test]
    fn line_score_reconciles() {
        for actions in [vec![3, 5], vec![2, 3], vec![4, 5, 9]] {
            let s = set(&actions);
            let values = zero_sum_solve(&s, 80);
            for h in 0..=80 {
                let line = zs_play_line(&s, h);
                let score: i64 = line
                    .iter()
                    .map(|&(m, a)| if m == 1 { a as i64 } else { -(a as i64) })
                    .sum();
                assert_eq!(score, values[h as usize], "{s} h={h}");
            }
        }
    }
}
