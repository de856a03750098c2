//! Helpers for exact rational arithmetic: parsing, formatting, integer
//! square-root bounds and dyadic rounding.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub fn int(v: i64) -> BigInt {
    BigInt::from(v)
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Formats a rational as `"num/den"` (denominator always written).
pub fn format_rational(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `"num/den"`, `"num"` or a finite decimal such as `"0.25"`.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| Error::Parse(format!("bad numerator in {s:?}")))?;
        let d: BigInt = d.trim().parse().map_err(|_| Error::Parse(format!("bad denominator in {s:?}")))?;
        if d.is_zero() {
            return Err(Error::Parse(format!("zero denominator in {s:?}")));
        }
        return Ok(BigRational::new(n, d));
    }
    if let Some((ip, fp)) = s.split_once('.') {
        let neg = ip.starts_with('-');
        let ip_abs = ip.trim_start_matches(['-', '+']);
        let digits = format!("{}{}", if ip_abs.is_empty() { "0" } else { ip_abs }, fp);
        let n: BigInt = digits.parse().map_err(|_| Error::Parse(format!("bad decimal {s:?}")))?;
        let d = num_traits::pow(BigInt::from(10), fp.len());
        let r = BigRational::new(n, d);
        return Ok(if neg { -r } else { r });
    }
    let n: BigInt = s.parse().map_err(|_| Error::Parse(format!("bad integer {s:?}")))?;
    Ok(BigRational::from_integer(n))
}

/// floor(r)
pub fn floor(r: &BigRational) -> BigInt {
    r.numer().div_floor(r.denom())
}

/// ceil(r)
pub fn ceil(r: &BigRational) -> BigInt {
    -((-r.numer()).div_floor(r.denom()))
}

/// Smallest integer `s >= 0` with `s*s >= n`.
pub fn isqrt_ceil(n: &BigInt) -> BigInt {
    assert!(!n.is_negative());
    let s = n.sqrt();
    if &(&s * &s) == n {
        s
    } else {
        s + 1
    }
}

/// A rational upper bound on `sqrt(r)` with relative error about `2^-bits`;
/// exact when `r` is the square of a rational.
pub fn sqrt_upper(r: &BigRational, bits: u64) -> BigRational {
    assert!(!r.is_negative());
    if r.is_zero() {
        return BigRational::zero();
    }
    if let Some(s) = exact_sqrt(r) {
        return s;
    }
    // sqrt(n/d) = sqrt(n*d*4^k) / (d*2^k)
    let scale = BigInt::one() << (2 * bits);
    let prod = r.numer() * r.denom() * &scale;
    BigRational::new(isqrt_ceil(&prod), r.denom() * (BigInt::one() << bits))
}

/// A rational lower bound on `sqrt(r)`, exact for perfect squares.
pub fn sqrt_lower(r: &BigRational, bits: u64) -> BigRational {
    assert!(!r.is_negative());
    if r.is_zero() {
        return BigRational::zero();
    }
    if let Some(s) = exact_sqrt(r) {
        return s;
    }
    let scale = BigInt::one() << (2 * bits);
    let prod = r.numer() * r.denom() * &scale;
    BigRational::new(prod.sqrt(), r.denom() * (BigInt::one() << bits))
}

fn exact_sqrt(r: &BigRational) -> Option<BigRational> {
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    if &(&n * &n) == r.numer() && &(&d * &d) == r.denom() {
        Some(BigRational::new(n, d))
    } else {
        None
    }
}

/// Rounds `r` to the nearest multiple of `2^-bits` (ties away from zero).
pub fn round_dyadic(r: &BigRational, bits: u64) -> BigRational {
    let scaled = r * BigRational::from_integer(BigInt::one() << bits);
    let two = BigRational::from_integer(BigInt::from(2));
    let half = BigRational::one() / two;
    let n = if scaled.is_negative() {
        -floor(&(-scaled + half))
    } else {
        floor(&(scaled + half))
    };
    BigRational::new(n, BigInt::one() << bits)
}

/// Rounds a non-negative rational up to a dyadic with `bits` fractional bits.
pub fn round_up_dyadic(r: &BigRational, bits: u64) -> BigRational {
    let scaled = r * BigRational::from_integer(BigInt::one() << bits);
    BigRational::new(ceil(&scaled), BigInt::one() << bits)
}

/// `floor(log2 |r|)` for nonzero `r`.
pub fn log2_floor(r: &BigRational) -> i64 {
    assert!(!r.is_zero());
    let n = r.numer().abs();
    let d = r.denom();
    let mut e = n.bits() as i64 - d.bits() as i64;
    // adjust so that 2^e <= n/d < 2^(e+1)
    let pow = |e: i64| -> BigRational {
        if e >= 0 {
            BigRational::from_integer(BigInt::one() << e as u64)
        } else {
            BigRational::new(BigInt::one(), BigInt::one() << (-e) as u64)
        }
    };
    let a = BigRational::new(n, d.clone());
    while pow(e) > a {
        e -= 1;
    }
    while pow(e + 1) <= a {
        e += 1;
    }
    e
}

/// Lossy conversion for display and diagnostics only.
pub fn to_f64(r: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or_else(|| {
        if r.numer().sign() == Sign::Minus {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    })
}

/// Exact conversion of a finite `f64` into a rational.
pub fn from_f64(x: f64) -> BigRational {
    BigRational::from_float(x).expect("finite float")
}
