//! Markoff trace dynamics: flips along the Farey graph, numeric and
//! symbolic, and growth bounds for trace polynomial lengths.

mod flip;
mod poly;

pub use flip::{flip, int_triple, markoff_defect, FlipPath, Position, Triple};
pub use poly::{Monomial, TracePolynomial};

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::farey::{Slope, Triangle};

/// Default cap on the number of monomials of an expanded trace polynomial.
pub const DEFAULT_MONOMIAL_BUDGET: usize = 250_000;

const MAX_PATH: usize = 10_000_000;

/// Strict cyclic order of three distinct slopes.
fn cyclic(a: &Slope, y: &Slope, b: &Slope) -> bool {
    use std::cmp::Ordering::Less;
    let ab = a.line_cmp(b) == Less;
    let ay = a.line_cmp(y) == Less;
    let yb = y.line_cmp(b) == Less;
    (ay && yb) || (yb && !ab) || (!ab && ay)
}

/// Flips leading from the base triangle to a triangle containing `target`,
/// and the slot holding `target` at the end.
pub fn flip_path(target: &Slope, base: &Triangle) -> Result<(FlipPath, Position)> {
    let base = Triangle::new(base.alpha0.clone(), base.alpha1.clone(), base.beta1.clone())?;
    let mut tri: [(BigInt, BigInt); 3] = base.vertices().map(|s| s.vector());
    let mut path = Vec::new();
    loop {
        let slopes = tri.clone().map(|v| Slope::from_vector(&v));
        if let Some(i) = slopes.iter().position(|s| s == target) {
            return Ok((FlipPath(path), Position::from_index(i)?));
        }
        if path.len() >= MAX_PATH {
            return Err(Error::BudgetExceeded(format!("flip path to {target} longer than {MAX_PATH}")));
        }
        // the slot whose opposite arc contains the target
        let i = (0..3)
            .find(|&i| {
                let (u, w, v) = (&slopes[(i + 1) % 3], &slopes[i], &slopes[(i + 2) % 3]);
                cyclic(u, target, v) != cyclic(u, w, v)
            })
            .expect("target lies in one of three arcs");
        let (u, v) = (&tri[(i + 1) % 3], &tri[(i + 2) % 3]);
        let plus = (&u.0 + &v.0, &u.1 + &v.1);
        let next = if Slope::from_vector(&plus) == slopes[i] { (&u.0 - &v.0, &u.1 - &v.1) } else { plus };
        tri[i] = next;
        path.push(Position::from_index(i)?);
    }
}

/// The trace of `target` as a polynomial in the base traces
/// `X = tr(alpha_0)`, `Y = tr(alpha_1)`, `Z = tr(beta_1)`.
pub fn trace_polynomial(target: &Slope, base: &Triangle) -> Result<TracePolynomial> {
    trace_polynomial_with_path(target, base, DEFAULT_MONOMIAL_BUDGET).map(|(p, _)| p)
}

pub fn trace_polynomial_with_path(
    target: &Slope,
    base: &Triangle,
    max_terms: usize,
) -> Result<(TracePolynomial, FlipPath)> {
    let (path, slot) = flip_path(target, base)?;
    let mut t = [TracePolynomial::x(), TracePolynomial::y(), TracePolynomial::z()];
    for p in &path.0 {
        let i = p.index();
        let prod = t[(i + 1) % 3].checked_mul(&t[(i + 2) % 3], max_terms)?;
        t[i] = &prod - &t[i];
        if t[i].num_terms() > max_terms {
            return Err(Error::BudgetExceeded(format!("trace polynomial exceeds {max_terms} monomials")));
        }
    }
    let out = t[slot.index()].clone();
    Ok((out, path))
}

/// Entry `n` bounds the length of the trace polynomial of every vertex
/// determined by the first `n` widths (pivots up to `alpha_{n+1}` and the
/// first fan vertex beyond it); entry 0 covers the base triangle. Uses
/// `L(xy - z) <= L(x) L(y) + L(z)` along each pivot fan.
pub fn length_growth_bounds(widths: &[BigInt], base: &Triangle) -> Result<Vec<BigInt>> {
    Triangle::new(base.alpha0.clone(), base.alpha1.clone(), base.beta1.clone())?;
    let one = BigInt::one();
    let mut out = vec![one.clone()];
    // lengths of the current pivot and of fan vertices u_0, u_1
    let (mut cur, mut u0, mut u1) = (one.clone(), one.clone(), one);
    let mut running = out[0].clone();
    for w in widths {
        if w < &BigInt::one() {
            return Err(Error::InvalidInput("widths must be positive".into()));
        }
        let mut j = BigInt::one();
        while &j < w {
            let next = &cur * &u1 + &u0;
            u0 = std::mem::replace(&mut u1, next);
            running = running.max(u1.clone());
            j += 1;
        }
        // u1 is the next pivot; the fan vertex after it starts the next fan
        let beyond = &cur * &u1 + &u0;
        running = running.max(beyond.clone());
        let pivot = u1;
        u0 = std::mem::replace(&mut cur, pivot);
        u1 = beyond;
        out.push(running.clone());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::GaussRat;

    fn std_tp(p: i64, q: i64) -> TracePolynomial {
        trace_polynomial(&Slope::from_ints(p, q), &Triangle::standard()).unwrap()
    }

    #[test]
    fn recursion_examples() {
        assert_eq!(std_tp(0, 1), TracePolynomial::x());
        assert_eq!(std_tp(1, 0), TracePolynomial::y());
        let b2 = std_tp(2, 1);
        assert_eq!(b2.to_string(), "YZ - X");
        let b3 = std_tp(3, 1);
        let expect = &(&(&(&TracePolynomial::z() * &TracePolynomial::y()) * &TracePolynomial::y())
            - &(&TracePolynomial::x() * &TracePolynomial::y()))
            - &TracePolynomial::z();
        assert_eq!(b3, expect);
        assert_eq!(b3.length().unwrap(), BigInt::from(3));
        let (_, path) = trace_polynomial_with_path(&Slope::from_ints(2, 1), &Triangle::standard(), 100).unwrap();
        assert_eq!(path.to_string(), "1");
    }

    #[test]
    fn symbolic_matches_numeric_path() {
        let base = Triangle::standard();
        let t0 = [GaussRat::from_int(3), GaussRat::new(crate::num::rat::rat(1, 2), crate::num::rat::rat(-2, 3)), GaussRat::i()];
        for (p, q) in [(5, 3), (-7, 2), (13, 8), (2, 7), (-1, 4)] {
            let s = Slope::from_ints(p, q);
            let (poly, path) = trace_polynomial_with_path(&s, &base, 10_000).unwrap();
            let (_, slot) = flip_path(&s, &base).unwrap();
            let numeric = path.apply(&t0);
            assert_eq!(poly.eval(&t0[0], &t0[1], &t0[2]), numeric[slot.index()]);
        }
    }

    #[test]
    fn budget_error_is_reported() {
        let r = trace_polynomial_with_path(&Slope::from_ints(89, 55), &Triangle::standard(), 10);
        assert!(matches!(r, Err(Error::BudgetExceeded(_))));
    }

    #[test]
    fn growth_bounds_dominate_exact_lengths() {
        let base = Triangle::standard();
        assert_eq!(length_growth_bounds(&[], &base).unwrap(), vec![BigInt::one()]);
        let w: Vec<BigInt> = [3, 4, 2, 1, 3].iter().map(|&x| BigInt::from(x)).collect();
        let bounds = length_growth_bounds(&w, &base).unwrap();
        assert!(bounds.windows(2).all(|b| b[0] <= b[1]));
        let depth1 = length_growth_bounds(&w[..1], &base).unwrap();
        assert!(depth1[1] >= BigInt::from(2));
        let pivots = base.pivots_from_widths(&w).unwrap();
        for n in 1..=3 {
            // every fan vertex between alpha_n and alpha_{n+1}, and alpha_{n+1}
            let (a, b) = (pivots[n - 1].vector(), pivots[n].vector());
            let wn: i64 = w[n - 1].to_string().parse().unwrap();
            for j in 1..=wn + 1 {
                let v = Slope::from_vector(&(&a.0 + BigInt::from(j) * &b.0, &a.1 + BigInt::from(j) * &b.1));
                let len = trace_polynomial(&v, &base).unwrap().length().unwrap();
                assert!(len <= bounds[n], "vertex {v} length {len} exceeds bound {}", bounds[n]);
            }
        }
    }
}
