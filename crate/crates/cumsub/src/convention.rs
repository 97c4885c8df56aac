use std::fmt;
use std::str::FromStr;

/// A pair of committed tie-breaking rules, written `<mover>v<opponent>`.
///
/// The first letter is the rule of the player about to move, the second the
/// rule of the player who moves next. `F` (friendly) resolves indifference in
/// the opponent's favor, `A` (antagonistic) against them. After a move the
/// roles swap, which is what [`Convention::dual`] expresses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Convention {
    FvF,
    FvA,
    AvF,
    AvA,
}

impl Convention {
    /// All four conventions, in display order.
    pub const ALL: [Convention; 4] = [
        Convention::FvF,
        Convention::FvA,
        Convention::AvF,
        Convention::AvA,
    ];

    /// The convention that governs the position after one move: the letters
    /// swap. An involution; `FvF` and `AvA` are its fixed points.
    pub fn dual(self) -> Convention {
        match self {
            Convention::FvF => Convention::FvF,
            Convention::AvF => Convention::FvA,
            Convention::FvA => Convention::AvF,
            Convention::AvA => Convention::AvA,
        }
    }

    /// Whether the player about to move breaks ties in the opponent's favor.
    pub fn mover_friendly(self) -> bool {
        matches!(self, Convention::FvF | Convention::FvA)
    }

    pub(crate) fn index(self) -> usize {
        match self {
            Convention::FvF => 0,
            Convention::FvA => 1,
            Convention::AvF => 2,
            Convention::AvA => 3,
        }
    }
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Convention::FvF => "FvF",
            Convention::FvA => "FvA",
            Convention::AvF => "AvF",
            Convention::AvA => "AvA",
        })
    }
}

impl FromStr for Convention {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "fvf" => Ok(Convention::FvF),
            "fva" => Ok(Convention::FvA),
            "avf" => Ok(Convention::AvF),
            "ava" => Ok(Convention::AvA),
            other => Err(format!(
                "unknown convention `{other}` (expected FvF, FvA, AvF or AvA)"
            )),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dual_table() {
        assert_eq!(Convention::FvF.dual(), Convention::FvF);
        assert_eq!(Convention::AvF.dual(), Convention::FvA);
        assert_eq!(Convention::FvA.dual(), Convention::AvF);
        assert_eq!(Convention::AvA.dual(), Convention::AvA);
    }

    #[test]
    fn dual_is_an_involution_with_two_fixed_points() {
        let mut fixed = 0;
        for x in Convention::ALL {
            assert_eq!(x.dual().dual(), x);
            if x.dual() == x {
                fixed += 1;
                assert!(matches!(x, Convention::FvF | Convention::AvA));
            }
        }
        assert_eq!(fixed, 2);
    }

    #[test]
    fn parse_round_trip() {
        for x in Convention::ALL {
            assert_eq!(x.to_string().parse::<Convention>().unwrap(), x);
        }
        assert!("FvX".parse::<Convention>().is_err());
    }
}
