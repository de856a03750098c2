//! Certified complex root isolation for small integer polynomials.
//!
//! A disc of radius `n |f(z)| / |f'(z)|` around any `z` contains a root of
//! a degree-`n` polynomial `f`; `n` pairwise disjoint such discs therefore
//! each isolate exactly one root.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::intpoly::IntPoly;
use crate::error::{Error, Result};
use crate::num::rat::{from_f64, round_dyadic, round_up_dyadic, sqrt_upper};
use crate::num::GaussRat;

/// Center, radius (zero when the center is the root itself).
pub type Disc = (GaussRat, BigRational);

pub const BASE_BITS: u64 = 64;
const MAX_ISOLATION_BITS: u64 = 4096;

fn approx_roots(f: &IntPoly) -> Vec<Complex64> {
    let c = f.to_f64();
    let n = f.degree();
    let lead = c[n];
    let monic: Vec<f64> = c.iter().map(|a| a / lead).collect();
    let eval = |z: Complex64| {
        let mut p = Complex64::new(0.0, 0.0);
        let mut dp = Complex64::new(0.0, 0.0);
        for a in monic.iter().rev() {
            dp = dp * z + p;
            p = p * z + a;
        }
        (p, dp)
    };
    let bound = 1.0 + monic[..n].iter().fold(0.0f64, |m, a| m.max(a.abs()));
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(bound * 0.7, 2.0 * std::f64::consts::PI * k as f64 / n as f64 + 0.4))
        .collect();
    for _ in 0..2000 {
        let mut moved = 0.0f64;
        for i in 0..n {
            let (p, dp) = eval(z[i]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let s: Complex64 = (0..n).filter(|&j| j != i).map(|j| (z[i] - z[j]).inv()).sum();
            let w = ratio / (Complex64::new(1.0, 0.0) - ratio * s);
            if w.is_finite() {
                z[i] -= w;
                moved = moved.max(w.norm() / (1.0 + z[i].norm()));
            }
        }
        if moved < 1e-16 {
            break;
        }
    }
    z
}

fn round_gauss(z: &GaussRat, bits: u64) -> GaussRat {
    GaussRat::new(round_dyadic(&z.re, bits), round_dyadic(&z.im, bits))
}

fn newton(f: &IntPoly, df: &IntPoly, z: &GaussRat, bits: u64, steps: usize) -> GaussRat {
    let mut z = z.clone();
    for _ in 0..steps {
        let fz = f.eval_gauss(&z);
        if fz.is_zero() {
            break;
        }
        let Ok(step) = fz.checked_div(&df.eval_gauss(&z)) else { break };
        let next = round_gauss(&(&z - &step), bits);
        if next == z {
            break;
        }
        z = next;
    }
    z
}

/// Upper bound on `deg f * |f(z)| / |f'(z)|`, or `None` where `f'` vanishes.
pub fn inclusion_radius(f: &IntPoly, df: &IntPoly, z: &GaussRat, bits: u64) -> Option<BigRational> {
    let fz = f.eval_gauss(z);
    if fz.is_zero() {
        return Some(BigRational::zero());
    }
    let dfz = df.eval_gauss(z);
    if dfz.is_zero() {
        return None;
    }
    let n = BigRational::from_integer(BigInt::from(f.degree()));
    let r2 = &n * &n * fz.norm_sqr() / dfz.norm_sqr();
    Some(round_up_dyadic(&sqrt_upper(&r2, 16), bits + 8))
}

fn dist_sqr(a: &GaussRat, b: &GaussRat) -> BigRational {
    (a - b).norm_sqr()
}

pub fn discs_disjoint(a: &Disc, b: &Disc) -> bool {
    let r = &a.1 + &b.1;
    dist_sqr(&a.0, &b.0) > &r * &r
}

/// `inner` lies inside `outer`.
pub fn disc_contains(outer: &Disc, inner: &Disc) -> bool {
    let gap = &outer.1 - &inner.1;
    if gap.is_negative() {
        return false;
    }
    dist_sqr(&outer.0, &inner.0) <= &gap * &gap
}

fn exact_roots(f: &IntPoly) -> Option<Vec<GaussRat>> {
    let c = f.coeffs();
    match f.degree() {
        1 => Some(vec![GaussRat::real(BigRational::new(-&c[0], c[1].clone()))]),
        2 => {
            let (a, b, cc) = (&c[2], &c[1], &c[0]);
            let disc: BigInt = b * b - BigInt::from(4) * a * cc;
            if !disc.is_negative() {
                return None;
            }
            let s = (-&disc).sqrt();
            if &s * &s != -&disc {
                return None;
            }
            let two_a: BigInt = a * 2;
            let re = BigRational::new(-b, two_a.clone());
            let im = BigRational::new(s, two_a);
            Some(vec![GaussRat::new(re.clone(), -&im), GaussRat::new(re, im)])
        }
        _ => None,
    }
}

/// Isolating discs for all roots of an irreducible `f`, sorted by center.
pub fn isolate(f: &IntPoly) -> Result<Vec<Disc>> {
    if f.degree() == 0 {
        return Err(Error::InvalidInput("constant polynomial has no roots".into()));
    }
    if let Some(r) = exact_roots(f) {
        let mut out: Vec<Disc> = r.into_iter().map(|z| (z, BigRational::zero())).collect();
        sort_discs(&mut out);
        return Ok(out);
    }
    let df = f.derivative();
    let approx = approx_roots(f);
    let mut bits = BASE_BITS;
    let mut centers: Vec<GaussRat> =
        approx.iter().map(|z| GaussRat::new(from_f64(z.re), from_f64(z.im))).collect();
    while bits <= MAX_ISOLATION_BITS {
        centers = centers.iter().map(|z| newton(f, &df, &round_gauss(z, bits), bits, 60)).collect();
        let discs: Option<Vec<Disc>> =
            centers.iter().map(|z| inclusion_radius(f, &df, z, bits).map(|r| (z.clone(), r))).collect();
        if let Some(mut discs) = discs {
            let ok = (0..discs.len()).all(|i| (i + 1..discs.len()).all(|j| discs_disjoint(&discs[i], &discs[j])));
            if ok {
                sort_discs(&mut discs);
                return Ok(discs);
            }
        }
        bits *= 2;
    }
    Err(Error::Certification(format!("could not isolate the roots of {f}")))
}

fn sort_discs(d: &mut [Disc]) {
    d.sort_by(|a, b| a.0.re.cmp(&b.0.re).then_with(|| a.0.im.cmp(&b.0.im)));
}

/// A disc of about `bits` accuracy inside `prev`, if Newton's method gets
/// there within a few steps.
pub fn refine(f: &IntPoly, prev: &Disc, bits: u64) -> Option<Disc> {
    if prev.1.is_zero() {
        return Some(prev.clone());
    }
    let df = f.derivative();
    let mut z = round_gauss(&prev.0, bits);
    for _ in 0..8 {
        z = newton(f, &df, &z, bits, 12);
        if let Some(r) = inclusion_radius(f, &df, &z, bits) {
            let d = (z.clone(), r);
            if disc_contains(prev, &d) {
                return Some(d);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::rat::to_f64;

    #[test]
    fn golden_ratio_roots() {
        let f = IntPoly::from_i64(&[-1, -1, 1]);
        let d = isolate(&f).unwrap();
        assert_eq!(d.len(), 2);
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        assert!((to_f64(&d[1].0.re) - phi).abs() < 1e-15);
        assert!(d[1].1 > BigRational::zero());
        assert!(to_f64(&d[1].1) < 1e-15);
    }

    #[test]
    fn exact_quadratic_roots() {
        let d = isolate(&IntPoly::from_i64(&[1, 0, 1])).unwrap();
        assert_eq!(d[0].0, GaussRat::new(BigRational::zero(), -BigRational::from_integer(1.into())));
        assert!(d.iter().all(|x| x.1.is_zero()));
    }

    #[test]
    fn cubic_roots_disjoint_and_refinable() {
        let f = IntPoly::from_i64(&[1, 1, 0, 1]);
        let d = isolate(&f).unwrap();
        assert_eq!(d.len(), 3);
        for x in &d {
            let r = refine(&f, x, 256).unwrap();
            assert!(disc_contains(x, &r));
            assert!(r.1 < x.1);
        }
    }
}
