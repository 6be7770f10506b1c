//! Exact scalar arithmetic.
//!
//! Ranks, kernels and bijectivity certificates must be exact, so the whole
//! crate computes over arbitrary-precision rationals. Floating point would
//! make "this map is bijective" undecidable.

use num_bigint::BigInt;
pub use num_rational::BigRational as Rat;
use num_traits::{One, Zero};

/// Rational from an integer.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Rational `p/q`. Panics on `q = 0`.
pub fn frac(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

pub fn zero() -> Rat {
    Rat::zero()
}

pub fn one() -> Rat {
    Rat::one()
}

/// `10^n` as a rational, for decimal fixtures.
pub fn pow10(n: u32) -> Rat {
    Rat::from_integer(BigInt::from(10u8).pow(n))
}
