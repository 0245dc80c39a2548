//! Exact rational scalars.
//!
//! Every quantity in this crate that is not an integer count is a
//! [`Rational`]: arbitrary-precision, always in lowest terms, never a float.
//! Curvatures, fractional dimensions, and form coefficients all live here so
//! that theorem checks can demand exact equality instead of tolerances.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number (`num_rational::BigRational`).
pub type Rational = num_rational::BigRational;

/// `n` as a rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n / d` as a rational in lowest terms. Panics if `d == 0`; intended for
/// literals in code and tests, not for user input (see [`parse_rational`]).
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parse `p` or `p/q` (optionally signed, `q > 0` after normalization).
///
/// This is the scalar syntax used by the vertex-function and form file
/// formats. A zero denominator is an input error, not a panic.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::Input(format!("invalid rational `{s}`"));
    let (num_str, den_str) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let num: BigInt = num_str.trim().parse().map_err(|_| bad())?;
    let den: BigInt = match den_str {
        Some(d) => d.trim().parse().map_err(|_| bad())?,
        None => BigInt::from(1),
    };
    if den.is_zero() {
        return Err(Error::Input(format!("zero denominator in `{s}`")));
    }
    Ok(Rational::new(num, den))
}

/// Format as `p` when integral, `p/q` otherwise (the parseable inverse of
/// [`parse_rational`], also used in reports).
pub fn format_rational(r: &Rational) -> String {
    // BigRational's Display already prints `p` or `p/q` in lowest terms.
    r.to_string()
}

/// True if `r` is a (possibly negative) integer.
pub fn is_integer(r: &Rational) -> bool {
    r.is_integer()
}

/// The integer value of `r` if it is integral and fits in `i64`.
pub fn as_i64(r: &Rational) -> Option<i64> {
    if !r.is_integer() {
        return None;
    }
    let n = r.numer();
    if n.abs() > BigInt::from(i64::MAX) {
        return None;
    }
    i64::try_from(n.clone()).ok()
}
