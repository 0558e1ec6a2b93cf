use std::fmt;
use std::ops::Add;

use num_bigint::BigInt;

/// Exponent of 2 in an integer. `Infinite` is the valuation of zero.
///
/// Ordered so that every finite value is below `Infinite`; `min` over a set
/// therefore ignores `Infinite` unless every member is infinite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Valuation {
    Finite(u64),
    Infinite,
}

impl Valuation {
    pub fn finite(self) -> Option<u64> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, Valuation::Infinite)
    }

    /// Minimum over an iterator; `Infinite` for an empty one.
    pub fn min_of<I: IntoIterator<Item = Valuation>>(iter: I) -> Valuation {
        iter.into_iter().min().unwrap_or(Valuation::Infinite)
    }

    /// `min(self, cap)`, the shape of nearly every exponent formula here.
    pub fn capped(self, cap: u64) -> u64 {
        match self {
            Valuation::Finite(v) => v.min(cap),
            Valuation::Infinite => cap,
        }
    }
}

impl Add for Valuation {
    type Output = Valuation;

    fn add(self, rhs: Valuation) -> Valuation {
        match (self, rhs) {
            (Valuation::Finite(a), Valuation::Finite(b)) => Valuation::Finite(a + b),
            _ => Valuation::Infinite,
        }
    }
}

impl Add<u64> for Valuation {
    type Output = Valuation;

    fn add(self, rhs: u64) -> Valuation {
        self + Valuation::Finite(rhs)
    }
}

impl From<u64> for Valuation {
    fn from(v: u64) -> Self {
        Valuation::Finite(v)
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => f.write_str("inf"),
        }
    }
}

/// 2-adic valuation.
pub fn nu(x: &BigInt) -> Valuation {
    match x.trailing_zeros() {
        Some(v) => Valuation::Finite(v),
        None => Valuation::Infinite,
    }
}

pub fn nu_i64(x: i64) -> Valuation {
    if x == 0 {
        Valuation::Infinite
    } else {
        Valuation::Finite(u64::from(x.trailing_zeros()))
    }
}
