use std::fmt;

use serde::{Deserialize, Serialize};

/// Belnap-Dunn truth values.
///
/// A value is determined by a pair of independent supports: positive
/// (`T`, `B`) and negative (`F`, `B`). Conjunction and disjunction are the
/// meet and join of the De Morgan lattice `F < N < T`, `F < B < T`; negation
/// swaps `T` and `F` and fixes `N` and `B`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FourValue {
    T,
    F,
    N,
    B,
}

impl FourValue {
    pub const ALL: [FourValue; 4] = [FourValue::T, FourValue::F, FourValue::N, FourValue::B];

    pub fn from_support(positive: bool, negative: bool) -> Self {
        match (positive, negative) {
            (true, false) => FourValue::T,
            (false, true) => FourValue::F,
            (false, false) => FourValue::N,
            (true, true) => FourValue::B,
        }
    }

    pub fn positive(self) -> bool {
        matches!(self, FourValue::T | FourValue::B)
    }

    pub fn negative(self) -> bool {
        matches!(self, FourValue::F | FourValue::B)
    }

    pub fn negate(self) -> Self {
        FourValue::from_support(self.negative(), self.positive())
    }

    pub fn meet(self, other: Self) -> Self {
        FourValue::from_support(
            self.positive() && other.positive(),
            self.negative() || other.negative(),
        )
    }

    pub fn join(self, other: Self) -> Self {
        FourValue::from_support(
            self.positive() || other.positive(),
            self.negative() && other.negative(),
        )
    }

    /// Truth order of the De Morgan lattice.
    pub fn le(self, other: Self) -> bool {
        self.meet(other) == self
    }

    pub fn symbol(self) -> &'static str {
        match self {
            FourValue::T => "T",
            FourValue::F => "F",
            FourValue::N => "N",
            FourValue::B => "B",
        }
    }
}

impl fmt::Display for FourValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}
