use std::fmt;

/// Final pocket sizes of both players from a position, first mover first.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct OutcomePair {
    /// Pebbles collected by the player moving first from the position.
    pub o1: u64,
    /// Pebbles collected by the other player.
    pub o2: u64,
}

impl OutcomePair {
    pub const ZERO: OutcomePair = OutcomePair { o1: 0, o2: 0 };

    pub fn new(o1: u64, o2: u64) -> Self {
        OutcomePair { o1, o2 }
    }

    /// First mover's lead, `o1 - o2`. May be negative for sets of three or
    /// more actions.
    pub fn spread(&self) -> i64 {
        self.o1 as i64 - self.o2 as i64
    }

    pub fn total(&self) -> u64 {
        self.o1 + self.o2
    }
}

impl fmt::Display for OutcomePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.o1, self.o2)
    }
}
