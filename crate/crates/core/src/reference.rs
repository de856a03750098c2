//! Slow, literal reimplementations used as test oracles. Nothing here shares
//! code with the main algorithms beyond the basic number types.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::algnum::AlgebraicSet;
use crate::error::Result;
use crate::farey::{ContinuedFraction, Endpoint, Slope};
use crate::num::BigComplex;
use crate::tracecalc::TracePolynomial;

/// A point of the extended real line; `None` is infinity.
type Pt = Option<BigRational>;

/// `t` lies in the open arc running upward from `a` to `b` (through
/// infinity when `b < a`).
fn in_arc(t: &Pt, a: &Pt, b: &Pt) -> bool {
    match (t, a, b) {
        (None, Some(a), Some(b)) => b < a,
        (None, _, _) => false,
        (Some(t), None, Some(b)) => t < b,
        (Some(t), Some(a), None) => t > a,
        (Some(t), Some(a), Some(b)) => {
            if a < b {
                a < t && t < b
            } else {
                t > a || t < b
            }
        }
        (Some(_), None, None) => false,
    }
}

fn separates(e: &(Pt, Pt), s: &Pt, t: &Pt) -> bool {
    if s == &e.0 || s == &e.1 || t == &e.0 || t == &e.1 {
        return false;
    }
    in_arc(s, &e.0, &e.1) != in_arc(t, &e.0, &e.1)
}

fn frac(p: &BigInt, q: &BigInt) -> BigRational {
    BigRational::new(p.clone(), q.clone())
}

/// Unimodular intervals `(a/b, c/d)` inside `(n, n+1)` that contain `t`.
fn stern_brocot_intervals(t: &BigRational) -> Vec<(Pt, Pt)> {
    let mut out = Vec::new();
    if t.is_integer() {
        return out;
    }
    let n = t.floor().to_integer();
    let (mut a, mut b, mut c, mut d) = (n.clone(), BigInt::one(), n + 1, BigInt::one());
    loop {
        out.push((Some(frac(&a, &b)), Some(frac(&c, &d))));
        let (m, k) = (&a + &c, &b + &d);
        let mid = frac(&m, &k);
        if &mid == t {
            return out;
        }
        if t < &mid {
            (c, d) = (m, k);
        } else {
            (a, b) = (m, k);
        }
    }
}

fn to_slope(p: &Pt) -> Slope {
    match p {
        None => Slope::infinity(),
        Some(r) => Slope::from_rational(r),
    }
}

fn finite_ints(p: &Pt) -> BigInt {
    p.as_ref().map(|r| r.floor().to_integer()).unwrap_or_default()
}

/// Pivots with widths along the separating edges between two rational
/// points, found by listing every Farey edge that separates them, ordering
/// the edges from `s` to `t`, and counting edges at each vertex.
pub fn pivots_between(s: &Pt, t: &Pt) -> Vec<(Slope, BigInt)> {
    let mut edges: Vec<(Pt, Pt)> = Vec::new();
    for p in [s, t].into_iter().flatten() {
        edges.extend(stern_brocot_intervals(p));
    }
    let (lo, hi) = {
        let (x, y) = (finite_ints(s), finite_ints(t));
        (x.clone().min(y.clone()) - 1, x.max(y) + 1)
    };
    let mut n: BigInt = lo;
    while n <= hi {
        edges.push((Some(BigRational::from_integer(n.clone())), None));
        n += 1;
    }
    edges.sort();
    edges.dedup();
    edges.retain(|e| separates(e, s, t));

    // an edge's rank is the number of separating edges between it and s
    let far_end = |e: &(Pt, Pt), f: &(Pt, Pt)| if f.0 == e.0 || f.1 == e.0 { e.1.clone() } else { e.0.clone() };
    let mut ranked: Vec<(usize, (Pt, Pt))> = edges
        .iter()
        .map(|e| {
            let r = edges.iter().filter(|f| *f != e && separates(f, s, &far_end(e, f))).count();
            (r, e.clone())
        })
        .collect();
    ranked.sort_by_key(|(r, _)| *r);

    let mut order: Vec<Pt> = Vec::new();
    for (_, e) in &ranked {
        for v in [&e.0, &e.1] {
            if !order.contains(v) {
                order.push(v.clone());
            }
        }
    }
    // of the first edge, the vertex shared with the second edge goes second
    if ranked.len() > 1 && (ranked[1].1 .0 == order[0] || ranked[1].1 .1 == order[0]) {
        order.swap(0, 1);
    }
    order
        .into_iter()
        .filter_map(|v| {
            let k = ranked.iter().filter(|(_, e)| e.0 == v || e.1 == v).count();
            (k >= 2).then(|| (to_slope(&v), BigInt::from(k - 1)))
        })
        .collect()
}

/// Rational stand-in for an endpoint: a point just below a rational
/// (just above every finite candidate for infinity), or a deep convergent.
fn stand_in(e: &Endpoint, other: &Pt) -> Result<Pt> {
    const M: i64 = 64;
    Ok(match e {
        Endpoint::Rational(r) => match r.to_rational() {
            Some(v) => Some(v - BigRational::new(BigInt::one(), r.q() * BigInt::from(M))),
            None => Some(BigRational::from_integer(finite_ints(other).max(BigInt::zero()) + M)),
        },
        Endpoint::Irrational(cf) => convergent_point(cf, 40)?,
    })
}

fn convergent_point(cf: &ContinuedFraction, k: usize) -> Result<Pt> {
    let k = cf.len().map(|n| n.min(k)).unwrap_or(k);
    let c = cf.convergents(k)?;
    Ok(c.last().and_then(|s| s.to_rational()))
}

/// Pivots (with widths) from `alpha_minus` towards `alpha_plus`, including
/// spurious pivots near both stand-in points; callers align on a known
/// pivot and compare a prefix.
pub fn pivot_walk(alpha_minus: &Endpoint, alpha_plus: &ContinuedFraction, depth: usize) -> Result<Vec<(Slope, BigInt)>> {
    let t = convergent_point(alpha_plus, depth + 12)?;
    let s = stand_in(alpha_minus, &t)?;
    Ok(pivots_between(&s, &t))
}

fn durand_kerner(c: &[f64]) -> Vec<Complex64> {
    let n = c.len() - 1;
    let lead = c[n];
    let mut z: Vec<Complex64> = (0..n).map(|k| Complex64::new(0.4, 0.9).powu(k as u32 + 1)).collect();
    for _ in 0..5000 {
        let mut delta = 0.0f64;
        for i in 0..n {
            let mut num = Complex64::new(0.0, 0.0);
            for a in c.iter().rev() {
                num = num * z[i] + a;
            }
            let mut den = Complex64::new(lead, 0.0);
            for j in 0..n {
                if j != i {
                    den *= z[i] - z[j];
                }
            }
            let step = num / den;
            z[i] -= step;
            delta = delta.max(step.norm());
        }
        if delta < 1e-15 {
            break;
        }
    }
    z
}

fn divides(g: &[BigInt], f: &[BigInt]) -> bool {
    let mut r: Vec<BigRational> = f.iter().map(|a| BigRational::from_integer(a.clone())).collect();
    let dg = g.len() - 1;
    let gl = BigRational::from_integer(g[dg].clone());
    while r.len() > dg {
        let top = r.pop().expect("nonempty") / &gl;
        let shift = r.len() - dg;
        for (k, gk) in g[..dg].iter().enumerate() {
            r[shift + k] -= &top * BigRational::from_integer(gk.clone());
        }
    }
    r.iter().all(|x| x.is_zero())
}

/// Irreducibility by searching subsets of numerical roots for a factor with
/// integer coefficients, each candidate confirmed by exact division.
pub fn irreducible_by_root_subsets(f: &[BigInt]) -> bool {
    let n = f.len() - 1;
    if n == 1 {
        return true;
    }
    let cf: Vec<f64> = f.iter().map(|a| a.to_f64().unwrap_or(f64::NAN)).collect();
    let roots = durand_kerner(&cf);
    let lead = f[n].abs();
    for mask in 1u32..(1 << n) - 1 {
        let k = mask.count_ones() as usize;
        if k > n / 2 {
            continue;
        }
        // monic factor over the chosen roots, low to high
        let mut g = vec![Complex64::new(1.0, 0.0)];
        for (i, r) in roots.iter().enumerate() {
            if mask & (1 << i) != 0 {
                let mut next = vec![Complex64::new(0.0, 0.0); g.len() + 1];
                for (j, a) in g.iter().enumerate() {
                    next[j + 1] += a;
                    next[j] -= a * r;
                }
                g = next;
            }
        }
        let mut l = BigInt::one();
        while l <= lead {
            if (&lead % &l).is_zero() {
                let s = l.to_f64().unwrap_or(1.0);
                let near: Option<Vec<BigInt>> = g
                    .iter()
                    .map(|a| {
                        let (re, im) = (a.re * s, a.im * s);
                        (im.abs() < 1e-6 && (re - re.round()).abs() < 1e-6).then(|| BigInt::from(re.round() as i64))
                    })
                    .collect();
                if let Some(h) = near {
                    if divides(&h, f) {
                        return false;
                    }
                }
            }
            l += 1;
        }
    }
    true
}

/// `|A_i|` recounted by enumerating coefficient vectors by exact length and
/// testing irreducibility numerically.
pub fn recount_a(i: usize) -> usize {
    let mut total = 0;
    for len in 1..=i as i64 {
        for deg in 1..=i {
            let mut vecs = Vec::new();
            exact_length_vectors(deg + 1, len, &mut Vec::new(), &mut vecs);
            for v in vecs {
                if !v[deg].is_positive() {
                    continue;
                }
                let g = v.iter().fold(BigInt::zero(), |g, a| g.gcd(a));
                if !g.is_one() || (deg > 1 && v[0].is_zero()) {
                    continue;
                }
                if irreducible_by_root_subsets(&v) {
                    total += deg;
                }
            }
        }
    }
    total
}

fn exact_length_vectors(slots: usize, len: i64, cur: &mut Vec<BigInt>, out: &mut Vec<Vec<BigInt>>) {
    if slots == 0 {
        if len == 0 {
            out.push(cur.clone());
        }
        return;
    }
    for a in -len..=len {
        cur.push(BigInt::from(a));
        exact_length_vectors(slots - 1, len - a.abs(), cur, out);
        cur.pop();
    }
}

/// Smallest `|P^2 - 4|` over `A^3` by uncertified high-precision evaluation,
/// skipping values within `1e-30` of `±2`.
pub fn gap_scan(p: &TracePolynomial, set: &AlgebraicSet, prec: usize) -> f64 {
    let level = (prec / 64).max(1).ilog2() as usize + 1;
    let vals: Vec<BigComplex> = set
        .members
        .iter()
        .map(|m| {
            let (c, _) = m.disc(level);
            BigComplex::from_rationals(&c.re, &c.im, prec)
        })
        .collect();
    let mut used = [false; 3];
    for (m, _) in p.terms() {
        used[0] |= m.0 > 0;
        used[1] |= m.1 > 0;
        used[2] |= m.2 > 0;
    }
    let range = |j: usize| if used[j] { vals.len() } else { 1 };
    let (two, four) = (BigComplex::from_int(2, prec), BigComplex::from_int(4, prec));
    let mut best = f64::INFINITY;
    for a in 0..range(0) {
        for b in 0..range(1) {
            for c in 0..range(2) {
                let v = p.eval(&vals[a], &vals[b], &vals[c]);
                if v.sub(&two).abs_f64() < 1e-30 || v.add(&two).abs_f64() < 1e-30 {
                    continue;
                }
                best = best.min(v.mul(&v).sub(&four).abs_f64());
            }
        }
    }
    best
}
