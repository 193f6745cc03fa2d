//! Orders and indices that may be infinite.

use std::fmt;
use std::iter::Product;
use std::ops::Mul;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

/// A non-negative integer or infinity. Infinity absorbs multiplication.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Cardinal {
    Finite(BigUint),
    Infinite,
}

impl Cardinal {
    pub fn one() -> Self {
        Cardinal::Finite(BigUint::one())
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Cardinal::Finite(_))
    }

    pub fn finite(&self) -> Option<&BigUint> {
        match self {
            Cardinal::Finite(v) => Some(v),
            Cardinal::Infinite => None,
        }
    }

    /// Reads a relative order: `0` encodes an infinite cyclic factor.
    pub fn from_relative_order(r: &BigInt) -> Self {
        debug_assert!(!r.is_negative());
        if r.is_zero() {
            Cardinal::Infinite
        } else {
            Cardinal::Finite(r.magnitude().clone())
        }
    }
}

impl From<BigUint> for Cardinal {
    fn from(v: BigUint) -> Self {
        Cardinal::Finite(v)
    }
}

impl From<u32> for Cardinal {
    fn from(v: u32) -> Self {
        Cardinal::Finite(BigUint::from(v))
    }
}

impl From<u64> for Cardinal {
    fn from(v: u64) -> Self {
        Cardinal::Finite(BigUint::from(v))
    }
}

impl Mul for Cardinal {
    type Output = Cardinal;

    fn mul(self, rhs: Cardinal) -> Cardinal {
        match (self, rhs) {
            (Cardinal::Finite(a), Cardinal::Finite(b)) => Cardinal::Finite(a * b),
            _ => Cardinal::Infinite,
        }
    }
}

impl Product for Cardinal {
    fn product<I: Iterator<Item = Cardinal>>(iter: I) -> Self {
        iter.fold(Cardinal::one(), |acc, c| acc * c)
    }
}

impl fmt::Display for Cardinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cardinal::Finite(v) => write!(f, "{v}"),
            Cardinal::Infinite => f.write_str("infinity"),
        }
    }
}
