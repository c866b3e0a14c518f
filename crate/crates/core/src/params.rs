use std::fmt;

use crate::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(n: u64) -> Self {
        if n % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// Word length `2k` or `2k + 1` for this parity.
    pub fn length(self, k: u64) -> u64 {
        match self {
            Parity::Even => 2 * k,
            Parity::Odd => 2 * k + 1,
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

/// Identifies the multiset space of all size-`n` multisets over a `b`-letter
/// alphabet. Both parameters are at least 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SpaceParams {
    n: u64,
    b: u64,
    parity: Parity,
}

impl SpaceParams {
    pub fn new(n: u64, b: u64) -> Result<Self, Error> {
        if n < 2 {
            return Err(Error::WordLengthTooSmall(n));
        }
        if b < 2 {
            return Err(Error::AlphabetTooSmall(b));
        }
        Ok(SpaceParams {
            n,
            b,
            parity: Parity::of(n),
        })
    }

    /// Word length.
    pub fn n(self) -> u64 {
        self.n
    }

    /// Alphabet size.
    pub fn b(self) -> u64 {
        self.b
    }

    pub fn parity(self) -> Parity {
        self.parity
    }

    /// `floor(n / 2)`.
    pub fn k(self) -> u64 {
        self.n / 2
    }
}

impl fmt::Display for SpaceParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(n={}, b={})", self.n, self.b)
    }
}
