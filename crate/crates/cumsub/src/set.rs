use std::fmt;

use crate::error::Error;

/// A validated subtraction set: the distinct, positive amounts a player may
/// remove from the heap on their turn.
///
/// Actions are stored ascending. The literature indexes them the other way
/// (s1 is the largest), so [`SubtractionSet::s1`] and friends count from the
/// top to keep formulas readable.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubtractionSet {
    actions: Vec<u64>,
}

impl SubtractionSet {
    /// Builds a set from any ordering of actions, sorting them and rejecting
    /// empty input, zeros and duplicates.
    pub fn new(actions: impl Into<Vec<u64>>) -> Result<Self, Error> {
        let mut actions = actions.into();
        if actions.is_empty() {
            return Err(Error::EmptySet);
        }
        if actions.contains(&0) {
            return Err(Error::ZeroAction);
        }
        actions.sort_unstable();
        for w in actions.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateAction(w[0]));
            }
        }
        Ok(SubtractionSet { actions })
    }

    /// Actions in ascending order.
    pub fn actions(&self) -> &[u64] {
        &self.actions
    }

    pub fn len(&self) -> usize {
        self.actions.len()
    }

    /// Always false; construction rejects empty sets.
    pub fn is_empty(&self) -> bool {
        self.actions.is_empty()
    }

    pub fn min_action(&self) -> u64 {
        self.actions[0]
    }

    pub fn max_action(&self) -> u64 {
        *self.actions.last().unwrap()
    }

    /// Largest action (descending index, so `s1() == max_action()`).
    ///
    /// # Panics
    /// The descending accessors panic when the set is smaller than the index;
    /// callers are expected to have checked arity.
    pub fn s1(&self) -> u64 {
        self.nth_largest(1)
    }

    /// Second largest action.
    pub fn s2(&self) -> u64 {
        self.nth_largest(2)
    }

    /// Third largest action.
    pub fn s3(&self) -> u64 {
        self.nth_largest(3)
    }

    fn nth_largest(&self, n: usize) -> u64 {
        assert!(
            n >= 1 && n <= self.actions.len(),
            "set {self} has no {n}-th largest action"
        );
        self.actions[self.actions.len() - n]
    }

    /// The feasible actions from heap `h`: every action that fits, ascending.
    /// Empty exactly when `h < min_action()`; terminal heaps are ordinary data.
    pub fn feasible(&self, h: u64) -> &[u64] {
        let cut = self.actions.partition_point(|&a| a <= h);
        &self.actions[..cut]
    }

    /// Two-action parameter regime; rejects other arities.
    pub fn regime(&self) -> Result<Regime, Error> {
        if self.len() != 2 {
            return Err(Error::WrongArity {
                expected: 2,
                got: self.len(),
            });
        }
        let (s1, s2) = (self.s1(), self.s2());
        let kind = match (2 * s2).cmp(&s1) {
            std::cmp::Ordering::Less => RegimeKind::Dominant,
            std::cmp::Ordering::Equal => RegimeKind::Balanced,
            std::cmp::Ordering::Greater => RegimeKind::NonDominant,
        };
        Ok(Regime {
            kind,
            delta: s1 - s2,
        })
    }
}

impl fmt::Display for SubtractionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, a) in self.actions.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "}}")
    }
}

/// Parameter regime of a two-action set `{s2, s1}`, `s2 < s1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Regime {
    pub kind: RegimeKind,
    /// `s1 - s2`, the cost of declining the larger action once.
    pub delta: u64,
}

impl Regime {
    /// Balanced sets sit on the dominance boundary and share its behavior.
    pub fn is_dominant(&self) -> bool {
        matches!(self.kind, RegimeKind::Dominant | RegimeKind::Balanced)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RegimeKind {
    /// `2*s2 < s1`: twice the small action still loses to the large one.
    Dominant,
    /// `2*s2 = s1`: the boundary case.
    Balanced,
    /// `2*s2 > s1`.
    NonDominant,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(actions: &[u64]) -> SubtractionSet {
        SubtractionSet::new(actions.to_vec()).unwrap()
    }

    #[test]
    fn construction_sorts_and_validates() {
        assert_eq!(set(&[5, 3]).actions(), &[3, 5]);
        assert_eq!(SubtractionSet::new(vec![]).unwrap_err(), Error::EmptySet);
        assert_eq!(
            SubtractionSet::new(vec![3, 0]).unwrap_err(),
            Error::ZeroAction
        );
        assert_eq!(
            SubtractionSet::new(vec![3, 5, 3]).unwrap_err(),
            Error::DuplicateAction(3)
        );
    }

    #[test]
    fn descending_accessors() {
        let s = set(&[3, 8, 11, 13]);
        assert_eq!(s.s1(), 13);
        assert_eq!(s.s2(), 11);
        assert_eq!(s.s3(), 8);
        assert_eq!(s.min_action(), 3);
        assert_eq!(s.max_action(), 13);
    }

    #[test]
    fn feasible_prefix() {
        let s = set(&[3, 5]);
        assert_eq!(s.feasible(4), &[3]);
        assert_eq!(s.feasible(2), &[] as &[u64]);
        let t = set(&[4, 5, 9]);
        assert_eq!(t.feasible(9), &[4, 5, 9]);
    }

    #[test]
    fn feasible_is_monotone_in_heap() {
        let s = set(&[2, 7, 9]);
        for h in 0..20 {
            let lo = s.feasible(h);
            let hi = s.feasible(h + 1);
            assert!(lo.iter().all(|a| hi.contains(a)));
        }
    }

    #[test]
    fn regime_classification() {
        assert_eq!(
            set(&[3, 5]).regime().unwrap(),
            Regime {
                kind: RegimeKind::NonDominant,
                delta: 2
            }
        );
        assert_eq!(
            set(&[2, 4]).regime().unwrap(),
            Regime {
                kind: RegimeKind::Balanced,
                delta: 2
            }
        );
        assert_eq!(
            set(&[2, 5]).regime().unwrap(),
            Regime {
                kind: RegimeKind::Dominant,
                delta: 3
            }
        );
        assert!(set(&[2, 4]).regime().unwrap().is_dominant());
        assert_eq!(
            set(&[4, 5, 9]).regime().unwrap_err(),
            Error::WrongArity {
                expected: 2,
                got: 3
            }
        );
    }
}
