//! Exact rationals over arbitrary-precision integers.
//!
//! `num_rational::BigRational` already keeps values reduced with a positive
//! denominator, so it is used directly; this module adds parsing and a few
//! integer helpers shared by the rest of the crate.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `p`, `-p` or `p/q` with decimal integers.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational literal `{s}`"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in `{s}`")));
    }
    Ok(Rational::new(num, den))
}

pub fn is_integer(q: &Rational) -> bool {
    q.denom().is_one()
}

/// Binomial coefficient as a big integer; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// gcd of the numerators and lcm of the denominators of a list of rationals,
/// returned as the rational `gcd/lcm` (positive), or zero if all are zero.
pub fn content_of<'a>(coeffs: impl IntoIterator<Item = &'a Rational>) -> Rational {
    let mut g = BigInt::zero();
    let mut l = BigInt::one();
    for c in coeffs {
        if c.is_zero() {
            continue;
        }
        g = g.gcd(c.numer());
        l = l.lcm(c.denom());
    }
    if g.is_zero() {
        Rational::zero()
    } else {
        Rational::new(g.abs(), l)
    }
}

/// Bit length of the larger of numerator and denominator.
pub fn bit_size(q: &Rational) -> u64 {
    q.numer().bits().max(q.denom().bits())
}
