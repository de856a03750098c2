//! Arbitrary-precision complex floating point, used by the Kleinian oracle.

use std::cell::RefCell;

use astro_float::{BigFloat, Consts, Radix, RoundingMode};
use num_bigint::BigInt;
use num_rational::BigRational;

use super::TraceRing;

const RM: RoundingMode = RoundingMode::ToEven;

thread_local! {
    static CONSTS: RefCell<Consts> = RefCell::new(Consts::new().expect("constants cache"));
}

fn with_consts<T>(f: impl FnOnce(&mut Consts) -> T) -> T {
    CONSTS.with(|c| f(&mut c.borrow_mut()))
}

pub fn bf_from_bigint(n: &BigInt, prec: usize) -> BigFloat {
    with_consts(|cc| BigFloat::parse(&n.to_string(), Radix::Dec, prec, RM, cc))
}

pub fn bf_from_rational(r: &BigRational, prec: usize) -> BigFloat {
    bf_from_bigint(r.numer(), prec).div(&bf_from_bigint(r.denom(), prec), prec, RM)
}

pub fn bf_to_f64(x: &BigFloat) -> f64 {
    if x.is_zero() {
        return 0.0;
    }
    let s = with_consts(|cc| x.format(Radix::Dec, RM, cc)).unwrap_or_else(|_| "NaN".into());
    s.parse::<f64>().unwrap_or(f64::NAN)
}

/// Decimal rendering with full working precision.
pub fn bf_to_string(x: &BigFloat) -> String {
    if x.is_zero() {
        return "0".into();
    }
    with_consts(|cc| x.format(Radix::Dec, RM, cc)).unwrap_or_else(|_| "NaN".into())
}

pub fn bf_pi(prec: usize) -> BigFloat {
    with_consts(|cc| cc.pi(prec, RM))
}

#[derive(Clone, Debug)]
pub struct BigComplex {
    pub re: BigFloat,
    pub im: BigFloat,
    pub prec: usize,
}

impl BigComplex {
    pub fn new(re: BigFloat, im: BigFloat, prec: usize) -> Self {
        BigComplex { re, im, prec }
    }

    pub fn from_f64(re: f64, im: f64, prec: usize) -> Self {
        BigComplex { re: BigFloat::from_f64(re, prec), im: BigFloat::from_f64(im, prec), prec }
    }

    pub fn from_int(n: i64, prec: usize) -> Self {
        BigComplex::from_f64(n as f64, 0.0, prec)
    }

    pub fn from_rationals(re: &BigRational, im: &BigRational, prec: usize) -> Self {
        BigComplex { re: bf_from_rational(re, prec), im: bf_from_rational(im, prec), prec }
    }

    pub fn zero(prec: usize) -> Self {
        BigComplex::from_f64(0.0, 0.0, prec)
    }

    pub fn add(&self, o: &Self) -> Self {
        let p = self.prec.max(o.prec);
        BigComplex { re: self.re.add(&o.re, p, RM), im: self.im.add(&o.im, p, RM), prec: p }
    }

    pub fn sub(&self, o: &Self) -> Self {
        let p = self.prec.max(o.prec);
        BigComplex { re: self.re.sub(&o.re, p, RM), im: self.im.sub(&o.im, p, RM), prec: p }
    }

    pub fn neg(&self) -> Self {
        BigComplex { re: self.re.neg(), im: self.im.neg(), prec: self.prec }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let p = self.prec.max(o.prec);
        let re = self.re.mul(&o.re, p, RM).sub(&self.im.mul(&o.im, p, RM), p, RM);
        let im = self.re.mul(&o.im, p, RM).add(&self.im.mul(&o.re, p, RM), p, RM);
        BigComplex { re, im, prec: p }
    }

    pub fn scale(&self, k: f64) -> Self {
        let f = BigFloat::from_f64(k, self.prec);
        BigComplex { re: self.re.mul(&f, self.prec, RM), im: self.im.mul(&f, self.prec, RM), prec: self.prec }
    }

    pub fn norm_sqr(&self) -> BigFloat {
        let p = self.prec;
        self.re.mul(&self.re, p, RM).add(&self.im.mul(&self.im, p, RM), p, RM)
    }

    pub fn abs(&self) -> BigFloat {
        self.norm_sqr().sqrt(self.prec, RM)
    }

    pub fn abs_f64(&self) -> f64 {
        bf_to_f64(&self.abs())
    }

    pub fn div(&self, o: &Self) -> Self {
        let p = self.prec.max(o.prec);
        let n = o.norm_sqr();
        let conj = BigComplex { re: o.re.clone(), im: o.im.neg(), prec: p };
        let num = self.mul(&conj);
        BigComplex { re: num.re.div(&n, p, RM), im: num.im.div(&n, p, RM), prec: p }
    }

    /// Principal square root.
    pub fn sqrt(&self) -> Self {
        let p = self.prec;
        if self.re.is_zero() && self.im.is_zero() {
            return BigComplex::zero(p);
        }
        let r = self.abs();
        let half = BigFloat::from_f64(0.5, p);
        // sqrt((r + |re|)/2)
        let t = r.add(&self.re.abs(), p, RM).mul(&half, p, RM).sqrt(p, RM);
        let two_t = t.add(&t, p, RM);
        if !self.re.is_negative() {
            BigComplex { re: t.clone(), im: self.im.div(&two_t, p, RM), prec: p }
        } else {
            let im = if self.im.is_negative() { t.neg() } else { t };
            BigComplex { re: self.im.abs().div(&two_t, p, RM), im, prec: p }
        }
    }

    /// `atan2(im, re)` in `(-pi, pi]`.
    pub fn arg(&self) -> BigFloat {
        let p = self.prec;
        let pi = bf_pi(p);
        if self.re.is_zero() {
            if self.im.is_zero() {
                return BigFloat::from_f64(0.0, p);
            }
            let half_pi = pi.mul(&BigFloat::from_f64(0.5, p), p, RM);
            return if self.im.is_negative() { half_pi.neg() } else { half_pi };
        }
        let base = with_consts(|cc| self.im.div(&self.re, p, RM).atan(p, RM, cc));
        if self.re.is_positive() {
            base
        } else if self.im.is_negative() {
            base.sub(&pi, p, RM)
        } else {
            base.add(&pi, p, RM)
        }
    }

    /// Principal logarithm.
    pub fn ln(&self) -> Self {
        let p = self.prec;
        let half = BigFloat::from_f64(0.5, p);
        let re = with_consts(|cc| self.norm_sqr().ln(p, RM, cc)).mul(&half, p, RM);
        BigComplex { re, im: self.arg(), prec: p }
    }

    pub fn exp(&self) -> Self {
        let p = self.prec;
        let (m, c, s) = with_consts(|cc| (self.re.exp(p, RM, cc), self.im.cos(p, RM, cc), self.im.sin(p, RM, cc)));
        BigComplex { re: m.mul(&c, p, RM), im: m.mul(&s, p, RM), prec: p }
    }

    pub fn one(prec: usize) -> Self {
        BigComplex::from_int(1, prec)
    }

    /// `asinh(z) = ln(z + sqrt(z^2 + 1))`, evaluated on the half plane
    /// `re >= 0` and extended by oddness to avoid cancellation.
    pub fn asinh(&self) -> Self {
        if self.re.is_negative() {
            return self.neg().asinh().neg();
        }
        let one = BigComplex::one(self.prec);
        self.add(&self.mul(self).add(&one).sqrt()).ln()
    }

    pub fn cosh(&self) -> Self {
        let e = self.exp();
        let inv = BigComplex::one(self.prec).div(&e);
        e.add(&inv).scale(0.5)
    }

    pub fn sinh(&self) -> Self {
        let e = self.exp();
        let inv = BigComplex::one(self.prec).div(&e);
        e.sub(&inv).scale(0.5)
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (bf_to_f64(&self.re), bf_to_f64(&self.im))
    }

    pub fn with_prec(&self, prec: usize) -> Self {
        let mut re = self.re.clone();
        let mut im = self.im.clone();
        let _ = re.set_precision(prec, RM);
        let _ = im.set_precision(prec, RM);
        BigComplex { re, im, prec }
    }
}

impl TraceRing for BigComplex {
    fn from_integer(&self, n: &BigInt) -> Self {
        BigComplex { re: bf_from_bigint(n, self.prec), im: BigFloat::from_f64(0.0, self.prec), prec: self.prec }
    }
    fn add(&self, o: &Self) -> Self {
        BigComplex::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        BigComplex::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        BigComplex::mul(self, o)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: &BigComplex, re: f64, im: f64, tol: f64) -> bool {
        let (x, y) = a.to_f64();
        (x - re).abs() < tol && (y - im).abs() < tol
    }

    #[test]
    fn sqrt_branches() {
        let z = BigComplex::from_f64(-4.0, 0.0, 128);
        assert!(close(&z.sqrt(), 0.0, 2.0, 1e-30));
        let z = BigComplex::from_f64(3.0, -4.0, 128);
        assert!(close(&z.sqrt(), 2.0, -1.0, 1e-30));
    }

    #[test]
    fn ln_exp_roundtrip() {
        let z = BigComplex::from_f64(-0.3, 2.5, 192);
        let w = z.exp().ln();
        assert!(close(&w, -0.3, 2.5, 1e-40));
    }

    #[test]
    fn asinh_inverts_sinh() {
        for (a, b) in [(0.2, 0.1), (-1.5, 0.7), (3.0, -2.0), (1e-9, 0.0)] {
            let z = BigComplex::from_f64(a, b, 192);
            assert!(close(&z.asinh().sinh(), a, b, 1e-40));
        }
    }

    #[test]
    fn rational_conversion() {
        let r = BigRational::new(BigInt::from(1), BigInt::from(3));
        let x = bf_from_rational(&r, 128);
        assert!((bf_to_f64(&x) - 1.0 / 3.0).abs() < 1e-16);
    }
}
