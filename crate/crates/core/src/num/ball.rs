//! Complex ball arithmetic on a fixed-point dyadic grid.
//!
//! A [`ComplexBall`] with precision `p` stores integers `re`, `im`, `rad`
//! and denotes the closed disc of radius `rad * 2^-p` around
//! `(re + i*im) * 2^-p`. Every operation returns a ball that contains all
//! possible results for inputs drawn from its operand balls.

use std::borrow::Cow;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::gauss::GaussRat;
use super::rat::isqrt_ceil;
use super::TraceRing;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexBall {
    re: BigInt,
    im: BigInt,
    rad: BigInt,
    prec: u32,
}

fn shr_round(x: &BigInt, k: u32) -> (BigInt, bool) {
    if k == 0 {
        return (x.clone(), false);
    }
    let half = BigInt::one() << (k - 1);
    let q = if x.is_negative() { -((-x + &half) >> k) } else { (x + &half) >> k };
    let exact = &(&q << k) == x;
    (q, !exact)
}

fn shr_ceil(x: &BigInt, k: u32) -> BigInt {
    // x >= 0
    if k == 0 {
        return x.clone();
    }
    let q: BigInt = x >> k;
    if &(&q << k) == x {
        q
    } else {
        q + 1
    }
}

impl ComplexBall {
    pub fn exact_int(n: &BigInt, prec: u32) -> Self {
        ComplexBall { re: n << prec, im: BigInt::zero(), rad: BigInt::zero(), prec }
    }

    pub fn zero(prec: u32) -> Self {
        ComplexBall::exact_int(&BigInt::zero(), prec)
    }

    /// The ball around the rounding of `z` to the grid, radius covering the
    /// rounding error.
    pub fn from_gauss(z: &GaussRat, prec: u32) -> Self {
        let scale = BigRational::from_integer(BigInt::one() << prec);
        let (re, re_inexact) = round_rat(&(&z.re * &scale));
        let (im, im_inexact) = round_rat(&(&z.im * &scale));
        let rad = if re_inexact || im_inexact { BigInt::one() } else { BigInt::zero() };
        ComplexBall { re, im, rad, prec }
    }

    /// Ball enclosing the disc `center ± radius`.
    pub fn from_center_radius(center: &GaussRat, radius: &BigRational, prec: u32) -> Self {
        let mut b = ComplexBall::from_gauss(center, prec);
        let scale = BigRational::from_integer(BigInt::one() << prec);
        let r = radius * scale;
        b.rad += super::rat::ceil(&r);
        b
    }

    pub fn prec(&self) -> u32 {
        self.prec
    }

    pub fn center(&self) -> GaussRat {
        let d = BigInt::one() << self.prec;
        GaussRat::new(
            BigRational::new(self.re.clone(), d.clone()),
            BigRational::new(self.im.clone(), d),
        )
    }

    pub fn radius(&self) -> BigRational {
        BigRational::new(self.rad.clone(), BigInt::one() << self.prec)
    }

    pub fn is_exact(&self) -> bool {
        self.rad.is_zero()
    }

    /// Re-expresses the ball at a different precision.
    pub fn with_prec(&self, prec: u32) -> Self {
        if prec >= self.prec {
            let k = prec - self.prec;
            ComplexBall { re: &self.re << k, im: &self.im << k, rad: &self.rad << k, prec }
        } else {
            let k = self.prec - prec;
            let (re, a) = shr_round(&self.re, k);
            let (im, b) = shr_round(&self.im, k);
            let mut rad = shr_ceil(&self.rad, k);
            if a || b {
                rad += 1;
            }
            ComplexBall { re, im, rad, prec }
        }
    }

    fn align<'a>(&'a self, o: &'a Self) -> (Cow<'a, Self>, Cow<'a, Self>) {
        if self.prec == o.prec {
            return (Cow::Borrowed(self), Cow::Borrowed(o));
        }
        let p = self.prec.max(o.prec);
        (Cow::Owned(self.with_prec(p)), Cow::Owned(o.with_prec(p)))
    }

    /// Cheap upper bound on `|center|` in grid units (`|re| + |im|`).
    fn abs_units_bound(&self) -> BigInt {
        self.re.abs() + self.im.abs()
    }

    /// Upper bound on `|center|` in grid units.
    fn abs_units_upper(&self) -> BigInt {
        isqrt_ceil(&(&self.re * &self.re + &self.im * &self.im))
    }

    pub fn add(&self, o: &Self) -> Self {
        let (a, b) = self.align(o);
        ComplexBall { re: &a.re + &b.re, im: &a.im + &b.im, rad: &a.rad + &b.rad, prec: a.prec }
    }

    pub fn sub(&self, o: &Self) -> Self {
        let (a, b) = self.align(o);
        ComplexBall { re: &a.re - &b.re, im: &a.im - &b.im, rad: &a.rad + &b.rad, prec: a.prec }
    }

    pub fn neg(&self) -> Self {
        ComplexBall { re: -&self.re, im: -&self.im, rad: self.rad.clone(), prec: self.prec }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let (a, b) = self.align(o);
        let p = a.prec;
        let re_full = &a.re * &b.re - &a.im * &b.im;
        let im_full = &a.re * &b.im + &a.im * &b.re;
        let (re, x) = shr_round(&re_full, p);
        let (im, y) = shr_round(&im_full, p);
        let mut rad = BigInt::zero();
        if !a.rad.is_zero() || !b.rad.is_zero() {
            let err = a.abs_units_bound() * &b.rad + b.abs_units_bound() * &a.rad + &a.rad * &b.rad;
            rad = shr_ceil(&err, p);
        }
        if x || y {
            rad += 1;
        }
        ComplexBall { re, im, rad, prec: p }
    }

    pub fn mul_int(&self, n: &BigInt) -> Self {
        ComplexBall {
            re: &self.re * n,
            im: &self.im * n,
            rad: &self.rad * n.abs(),
            prec: self.prec,
        }
    }

    pub fn square(&self) -> Self {
        self.mul(self)
    }

    /// True when the ball contains the origin.
    pub fn contains_zero(&self) -> bool {
        &self.re * &self.re + &self.im * &self.im <= &self.rad * &self.rad
    }

    /// True when the ball contains the exact point `z`.
    pub fn contains_point(&self, z: &GaussRat) -> bool {
        let c = self.center();
        let d = &(&c.re - &z.re) * &(&c.re - &z.re) + &(&c.im - &z.im) * &(&c.im - &z.im);
        let r = self.radius();
        d <= &r * &r
    }

    /// A certified lower bound on `|z|` for every `z` in the ball (zero if
    /// the ball meets the origin).
    pub fn abs_lower(&self) -> BigRational {
        let n = &self.re * &self.re + &self.im * &self.im;
        let v = n.sqrt() - &self.rad;
        if v.is_positive() {
            BigRational::new(v, BigInt::one() << self.prec)
        } else {
            BigRational::zero()
        }
    }

    /// A certified upper bound on `|z|` over the ball.
    pub fn abs_upper(&self) -> BigRational {
        BigRational::new(self.abs_units_upper() + &self.rad, BigInt::one() << self.prec)
    }

    /// Upper bound on `|center|` as a rational.
    pub fn center_abs_upper(&self) -> BigRational {
        BigRational::new(self.abs_units_upper(), BigInt::one() << self.prec)
    }

    /// Approximate center for diagnostics.
    pub fn center_f64(&self) -> (f64, f64) {
        let c = self.center();
        (super::rat::to_f64(&c.re), super::rat::to_f64(&c.im))
    }
}

fn round_rat(r: &BigRational) -> (BigInt, bool) {
    let n = r.numer();
    let d = r.denom();
    let twice = n * 2 + d;
    let q = num_integer::Integer::div_floor(&twice, &(d * 2));
    let exact = d.is_one();
    (q, !exact)
}

impl TraceRing for ComplexBall {
    fn from_integer(&self, n: &BigInt) -> Self {
        ComplexBall::exact_int(n, self.prec)
    }
    fn add(&self, o: &Self) -> Self {
        ComplexBall::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        ComplexBall::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        ComplexBall::mul(self, o)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::rat::rat;
    use proptest::prelude::*;

    fn g(a: i64, b: i64, c: i64, d: i64) -> GaussRat {
        GaussRat::new(rat(a, b), rat(c, d))
    }

    #[test]
    fn exact_integers_stay_exact() {
        let a = ComplexBall::from_gauss(&GaussRat::from_int(3), 64);
        let b = ComplexBall::from_gauss(&GaussRat::i(), 64);
        let p = a.mul(&b).add(&a);
        assert!(p.is_exact());
        assert_eq!(p.center(), GaussRat::new(rat(3, 1), rat(3, 1)));
    }

    #[test]
    fn contains_zero_detects_origin() {
        let b = ComplexBall::from_center_radius(&g(1, 10, 0, 1), &rat(1, 5), 32);
        assert!(b.contains_zero());
        let b = ComplexBall::from_center_radius(&g(1, 2, 0, 1), &rat(1, 5), 32);
        assert!(!b.contains_zero());
        assert!(b.abs_lower() > rat(29, 100));
    }

    proptest! {
        #[test]
        fn product_encloses_exact_product(
            a in -1000i64..1000, b in 1i64..50, c in -1000i64..1000, d in 1i64..50,
            e in -1000i64..1000, f in 1i64..50, h in -1000i64..1000, k in 1i64..50,
            prec in 8u32..80,
        ) {
            let x = g(a, b, c, d);
            let y = g(e, f, h, k);
            let bx = ComplexBall::from_gauss(&x, prec);
            let by = ComplexBall::from_gauss(&y, prec);
            prop_assert!(bx.mul(&by).contains_point(&(&x * &y)));
            prop_assert!(bx.sub(&by).contains_point(&(&x - &y)));
            prop_assert!(bx.with_prec(prec / 2).contains_point(&x));
        }
    }
}
