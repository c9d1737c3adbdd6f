//! Exact rational scalars and the integer combinatorics shared by every module.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision fraction, always stored in lowest terms with a
/// positive denominator. `Display` yields the canonical `p/q` form with the
/// denominator dropped when it is 1.
pub type Rational = BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn from_bigint(v: BigInt) -> Rational {
    Rational::from_integer(v)
}

/// Parses `p`, `-p`, or `p/q`. A zero denominator is rejected rather than panicking.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let err = |reason: &str| Error::Parse {
        input: s.to_string(),
        reason: reason.to_string(),
    };
    let t = s.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (t, None),
    };
    let num: BigInt = num.parse().map_err(|_| err("bad numerator"))?;
    let den: BigInt = match den {
        Some(d) => d.parse().map_err(|_| err("bad denominator"))?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(err("zero denominator"));
    }
    Ok(Rational::new(num, den))
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    // Exact at every step: the running value is C(n - k + i, i).
    (1..=k).fold(BigInt::one(), |acc, i| acc * (n - k + i) / i)
}

/// Row `n` of Pascal's triangle as rationals, `C(n, 0) ..= C(n, n)`.
pub fn pascal_row(n: usize) -> Vec<Rational> {
    let mut row = Vec::with_capacity(n + 1);
    let mut c = BigInt::one();
    row.push(from_bigint(c.clone()));
    for i in 1..=n {
        c = c * (n + 1 - i) / i;
        row.push(from_bigint(c.clone()));
    }
    row
}

/// `(-1)^e` as a rational.
pub fn sign(e: u32) -> Rational {
    if e.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// `base^e` with the convention `0^0 = 1`.
pub fn rpow(base: &Rational, e: u32) -> Rational {
    num_traits::pow(base.clone(), e as usize)
}
