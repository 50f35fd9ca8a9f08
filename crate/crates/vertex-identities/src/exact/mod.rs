//! Exact scalar and ring arithmetic.
//!
//! Everything in this crate computes over exact rings: arbitrary-precision
//! rationals ([`Rational`]), truncated multivariate power series
//! ([`TruncSeries`]), and division-free determinants/Pfaffians over either
//! ([`det`], [`pfaffian`]). No floating point appears anywhere.

mod linalg;
mod series;

pub use linalg::{det, pfaffian, LinalgError};
pub use series::TruncSeries;

use num::bigint::BigInt;
use num::rational::Ratio;
use num::{One, Zero};

/// The exact scalar used throughout: an arbitrary-precision rational,
/// always stored in lowest terms with positive denominator.
pub type Rational = Ratio<BigInt>;

/// Shorthand for a small rational `p/q`.
pub fn rat(p: i64, q: i64) -> Rational {
    Ratio::new(BigInt::from(p), BigInt::from(q))
}

/// Shorthand for a small integer as a `Rational`.
pub fn int(n: i64) -> Rational {
    Ratio::from_integer(BigInt::from(n))
}

/// Parses a rational literal: either an integer (`-3`) or `p/q` (`2/7`).
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    let parse_int = |t: &str| -> Result<BigInt, String> {
        t.trim()
            .parse::<BigInt>()
            .map_err(|_| format!("invalid integer literal {t:?}"))
    };
    match s.split_once('/') {
        None => Ok(Ratio::from_integer(parse_int(s)?)),
        Some((p, q)) => {
            let den = parse_int(q)?;
            if den.is_zero() {
                return Err(format!("zero denominator in {s:?}"));
            }
            Ok(Ratio::new(parse_int(p)?, den))
        }
    }
}

/// Renders a rational as `p/q`, or plain `p` for integers.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Nonnegative integer power of a rational.
pub fn pow(base: &Rational, exp: u32) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..exp {
        acc *= base;
    }
    acc
}

/// Integer (possibly negative) power of a nonzero rational.
pub fn pow_i(base: &Rational, exp: i64) -> Rational {
    if exp >= 0 {
        pow(base, exp as u32)
    } else {
        pow(&base.recip(), (-exp) as u32)
    }
}

/// A commutative ring with the operations the linear-algebra kernels need.
///
/// `zero`/`one` take `&self` so that shaped rings (series with a fixed
/// variable count and cutoff) can produce compatible identities.
pub trait Ring: Clone + PartialEq {
    fn ring_zero(&self) -> Self;
    fn ring_one(&self) -> Self;
    fn ring_add(&self, rhs: &Self) -> Self;
    fn ring_sub(&self, rhs: &Self) -> Self;
    fn ring_mul(&self, rhs: &Self) -> Self;
    fn ring_neg(&self) -> Self;
}

impl Ring for Rational {
    fn ring_zero(&self) -> Self {
        Rational::zero()
    }
    fn ring_one(&self) -> Self {
        Rational::one()
    }
    fn ring_add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn ring_sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn ring_mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn ring_neg(&self) -> Self {
        -self
    }
}
