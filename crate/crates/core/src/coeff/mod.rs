//! Exact scalar arithmetic.
//!
//! Everything in this crate is computed over the ring `Q(i)[alpha]`:
//! arbitrary-precision rationals, Gaussian rationals, and sparse
//! polynomials in a formal Hermitian parameter `alpha`. The parameter is
//! kept formal so that operator identities can be certified as polynomial
//! identities instead of being sampled at floating-point values.
//!
//! - [`Rational`]: arbitrary-precision rational in canonical reduced form
//! - [`Gaussian`]: element of `Q(i)`, a pair of rationals
//! - [`Scalar`]: sparse polynomial in `alpha` with Gaussian coefficients,
//!   carrying the conjugation that fixes `alpha` (`alpha` is real)
//! - [`parse_scalar`] / [`parse_rational`]: parsers for the textual
//!   rendering used by the command line tools

mod gaussian;
mod parse;
mod scalar;

pub use gaussian::Gaussian;
pub use parse::{parse_rational, parse_scalar, ParseError};
pub use scalar::Scalar;

use num_bigint::BigInt;

/// Exact rational number; canonical form has `gcd(|num|, den) = 1`, `den > 0`.
pub type Rational = num_rational::BigRational;

/// The rational `n/1`.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// The rational `p/q` in reduced form. Panics if `q == 0`.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}
