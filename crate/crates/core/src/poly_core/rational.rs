//! Arbitrary-precision rationals and a few scalar helpers.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub use num_rational::BigRational as Rational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n / d`, reduced. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Parses `"3/2"`, `"-7"`, `" 1 / 3 "`. Decimal input is rejected so that
/// exactness is never silently lost.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("'{s}' is not a rational of the form a/b"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::Parse(format!("'{s}' has a zero denominator")));
    }
    Ok(Rational::new(num, den))
}

/// Canonical `a/b` form (`b` omitted when 1). Inverse of [`parse_rational`].
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

/// Rising factorial `(z)_j = z (z+1) ... (z+j-1)`, with `(z)_0 = 1`.
pub fn pochhammer(z: &Rational, j: usize) -> Rational {
    let mut acc = Rational::one();
    let mut f = z.clone();
    for _ in 0..j {
        acc *= &f;
        f += Rational::one();
    }
    acc
}

pub fn binomial(n: usize, k: usize) -> Rational {
    if k > n {
        return Rational::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    Rational::from_integer(acc)
}

/// Generalised binomial coefficient `C(z, j)` for rational `z`.
pub fn binomial_rational(z: &Rational, j: usize) -> Rational {
    let mut acc = Rational::one();
    for i in 0..j {
        acc *= z - int(i as i64);
        acc /= int(i as i64 + 1);
    }
    acc
}

pub fn factorial(n: usize) -> Rational {
    pochhammer(&Rational::one(), n)
}
