//! Pivot sequences of the separating edge set between two endpoints.
//!
//! Conventions (fixed once, checked against the triangle-walk oracle in
//! [`crate::reference`]):
//!
//! * A rational `alpha_minus = r` is itself the pivot `alpha_0`. Edges are
//!   counted as if `r` were nudged to a point just before `r` in the positive
//!   circle orientation, so the edge `[r, alpha_1]` belongs to the separating
//!   set and `alpha_1` is the endpoint of the first crossed edge lying after
//!   `alpha_plus`. The width of `alpha_0` is not defined and not reported.
//! * An irrational `alpha_minus` has a bi-infinite pivot sequence; indexing
//!   starts at the vertex shared by the entry and exit edges of the first
//!   triangle (nearest the root edge `[0, 1/0]`) the geodesic passes through.
//!   The pivot before it is reported as `alpha0`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use super::cf::ContinuedFraction;
use super::slope::Slope;
use crate::error::{Error, Result};

/// With `alpha_minus = 0/1` and `alpha_plus > 1`, the width of pivot
/// `alpha_n` (n >= 1) is the coefficient `a_{n + WIDTH_CF_OFFSET}`.
pub const WIDTH_CF_OFFSET: i64 = -1;

/// An end invariant: a rational slope (geometrically finite end) or an
/// irrational lamination given by its continued fraction.
#[derive(Clone, Debug, PartialEq)]
pub enum Endpoint {
    Rational(Slope),
    Irrational(ContinuedFraction),
}

impl Endpoint {
    pub fn to_json(&self) -> Value {
        match self {
            Endpoint::Rational(s) => json!(s.to_string()),
            Endpoint::Irrational(cf) => cf.to_json(),
        }
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        match v {
            Value::String(s) => s.parse(),
            _ => Ok(Endpoint::Irrational(ContinuedFraction::from_json(v)?)),
        }
    }
}

/// A slope such as `2/5` or `1/0`, or any continued fraction form.
impl std::str::FromStr for Endpoint {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.parse::<Slope>() {
            Ok(r) => Ok(Endpoint::Rational(r)),
            Err(_) => Ok(Endpoint::Irrational(s.parse()?)),
        }
    }
}

type Vector = (BigInt, BigInt);

/// `t -> (a t + b) / (c t + d)`.
struct Mobius {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    d: BigInt,
}

impl Mobius {
    fn columns(first: &Vector, second: &Vector) -> Mobius {
        Mobius { a: first.0.clone(), b: second.0.clone(), c: first.1.clone(), d: second.1.clone() }
    }

    fn at(&self, t: &BigInt) -> Slope {
        Slope::new(&self.a * t + &self.b, &self.c * t + &self.d).expect("unimodular")
    }

    fn vector_at(&self, t: &BigInt) -> Vector {
        (&self.a * t + &self.b, &self.c * t + &self.d)
    }

    fn at_infinity(&self) -> Slope {
        Slope::new(self.a.clone(), self.c.clone()).expect("unimodular")
    }

    fn preserves_orientation(&self) -> bool {
        (&self.a * &self.d - &self.b * &self.c).is_positive()
    }
}

/// Strict cyclic order `a -> x -> b` on the circle, `x` never equal to `a` or `b`.
fn cyclic(a: &Slope, x: &ContinuedFraction, b: &Slope) -> bool {
    use std::cmp::Ordering::*;
    let a_lt_x = x.cmp_slope(a) == Greater;
    let x_lt_b = x.cmp_slope(b) == Less;
    let a_lt_b = a.line_cmp(b) == Less;
    (a_lt_x && x_lt_b) || (x_lt_b && !a_lt_b) || (!a_lt_b && a_lt_x)
}

fn reached(x: &ContinuedFraction, s: &Slope) -> Result<()> {
    if !x.is_infinite() && x.cmp_slope(s) == std::cmp::Ordering::Equal {
        let n = x.len().unwrap_or(0);
        return Err(Error::InsufficientCoefficients { available: n, requested: n + 1 });
    }
    Ok(())
}

/// Whether `M^{-1}(x) > j`.
fn beyond(m: &Mobius, j: &BigInt, x: &ContinuedFraction) -> Result<bool> {
    let mj = m.at(j);
    let minf = m.at_infinity();
    reached(x, &mj)?;
    reached(x, &minf)?;
    Ok(if m.preserves_orientation() { cyclic(&mj, x, &minf) } else { cyclic(&minf, x, &mj) })
}

/// `floor(M^{-1}(x))` by exponential then binary search.
fn floor_preimage(m: &Mobius, x: &ContinuedFraction) -> Result<BigInt> {
    let (mut lo, mut hi);
    if beyond(m, &BigInt::zero(), x)? {
        lo = BigInt::zero();
        hi = BigInt::one();
        while beyond(m, &hi, x)? {
            lo = hi.clone();
            hi *= 2;
        }
    } else {
        hi = BigInt::zero();
        lo = -BigInt::one();
        while !beyond(m, &lo, x)? {
            hi = lo.clone();
            lo *= 2;
        }
    }
    // beyond(lo) && !beyond(hi)
    while &hi - &lo > BigInt::one() {
        let mid: BigInt = (&lo + &hi) >> 1;
        if beyond(m, &mid, x)? {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(lo)
}

/// A unimodular map sending infinity to `s`.
fn chart_at(s: &Slope) -> Mobius {
    let (p, q) = s.vector();
    let e = p.extended_gcd(&q);
    // p*x + q*y = gcd = +-1; want p*d - q*b = 1
    let (mut d, mut b) = (e.x, -e.y);
    if e.gcd.is_negative() {
        d = -d;
        b = -b;
    }
    Mobius { a: p, b, c: q, d }
}

/// A pivot with its width. `fan_base` is the previous pivot's vector, signed
/// so that the fan vertices `fan_base + j * slope` (0 < j < width) are the
/// non-pivot vertices attached to this pivot.
#[derive(Clone, Debug, PartialEq)]
pub struct Pivot {
    pub slope: Slope,
    pub width: BigInt,
    fan_base: Vector,
}

impl Pivot {
    /// Non-pivot vertices adjacent to this pivot, in edge order.
    pub fn non_pivots(&self) -> impl Iterator<Item = Slope> + '_ {
        let (p, q) = self.slope.vector();
        let mut j = BigInt::one();
        std::iter::from_fn(move || {
            if j >= self.width {
                return None;
            }
            let s = Slope::new(&self.fan_base.0 + &j * &p, &self.fan_base.1 + &j * &q).expect("neighbor");
            j += 1;
            Some(s)
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct PivotSequence {
    pub alpha_minus: Endpoint,
    pub alpha_plus: ContinuedFraction,
    /// The pivot preceding the first reported one (`alpha_minus` itself when rational).
    pub alpha0: Slope,
    pub pivots: Vec<Pivot>,
}

impl PivotSequence {
    pub fn widths(&self) -> Vec<BigInt> {
        self.pivots.iter().map(|p| p.width.clone()).collect()
    }

    pub fn slopes(&self) -> Vec<Slope> {
        self.pivots.iter().map(|p| p.slope.clone()).collect()
    }

    /// Non-pivot vertices `beta_1, beta_2, ...` in order, at most `limit`.
    pub fn non_pivots(&self, limit: usize) -> Vec<Slope> {
        self.pivots.iter().flat_map(|p| p.non_pivots()).take(limit).collect()
    }

    pub fn to_json(&self, non_pivot_limit: usize) -> Value {
        json!({
            "alpha_minus": self.alpha_minus.to_json(),
            "alpha_plus": self.alpha_plus.to_json(),
            "alpha0": self.alpha0.to_string(),
            "pivots": self.pivots.iter().map(|p| json!({
                "slope": p.slope.to_string(),
                "width": p.width.to_string(),
            })).collect::<Vec<_>>(),
            "non_pivots": self.non_pivots(non_pivot_limit).iter().map(|s| s.to_string()).collect::<Vec<_>>(),
        })
    }
}

fn walk(mut prev: Vector, mut cur: Vector, x: &ContinuedFraction, depth: usize) -> Result<Vec<Pivot>> {
    let mut out = Vec::with_capacity(depth);
    while out.len() < depth {
        let mut m = Mobius::columns(&cur, &prev);
        let step = (|| -> Result<BigInt> {
            if !beyond(&m, &BigInt::zero(), x)? {
                prev = (-&prev.0, -&prev.1);
                m = Mobius::columns(&cur, &prev);
            }
            floor_preimage(&m, x)
        })();
        let k = match step {
            Ok(k) => k,
            Err(Error::InsufficientCoefficients { available, .. }) => {
                return Err(Error::InsufficientCoefficients { available: available.max(out.len()), requested: depth })
            }
            Err(e) => return Err(e),
        };
        debug_assert!(k.is_positive());
        let next = m.vector_at(&k);
        out.push(Pivot { slope: Slope::from_vector(&cur), width: k, fan_base: prev.clone() });
        prev = cur;
        cur = next;
    }
    Ok(out)
}

/// The first `depth` pivots after `alpha0` along the separating edge set
/// from `alpha_minus` to `alpha_plus`, with widths.
pub fn pivot_sequence(alpha_minus: &Endpoint, alpha_plus: &ContinuedFraction, depth: usize) -> Result<PivotSequence> {
    let equal = match alpha_minus {
        Endpoint::Rational(r) => !alpha_plus.is_infinite() && alpha_plus.cmp_slope(r) == std::cmp::Ordering::Equal,
        Endpoint::Irrational(c) => c.cmp_value(alpha_plus) == std::cmp::Ordering::Equal,
    };
    if equal {
        return Err(Error::EqualEndpoints(format!("alpha_minus = alpha_plus = {alpha_plus}")));
    }
    let x = alpha_plus;
    let (alpha0, prev, cur) = match alpha_minus {
        Endpoint::Rational(r) => {
            let h = chart_at(r);
            let n = floor_preimage(&h, x)?;
            (r.clone(), r.vector(), h.vector_at(&(n + 1)))
        }
        Endpoint::Irrational(xm) => {
            let m = branching_vertex(xm, x)?;
            let h = chart_at(&m);
            let ym = floor_preimage(&h, xm)?;
            let yp = floor_preimage(&h, x)?;
            let j0 = if ym < yp { ym + 1 } else { ym };
            (h.at(&j0), h.vector_at(&j0), m.vector())
        }
    };
    let pivots = walk(prev, cur, x, depth)?;
    Ok(PivotSequence { alpha_minus: alpha_minus.clone(), alpha_plus: alpha_plus.clone(), alpha0, pivots })
}

/// The vertex shared by the entry and exit edges of the first triangle
/// (descending from the edge `[0, 1/0]`) separating `xm` from `xp`.
fn branching_vertex(xm: &ContinuedFraction, xp: &ContinuedFraction) -> Result<Slope> {
    use std::cmp::Ordering::*;
    let zero = Slope::integer(0);
    let sm = xm.cmp_slope(&zero);
    let sp = xp.cmp_slope(&zero);
    if sp == Equal {
        reached(xp, &zero)?;
    }
    if sm != sp {
        let v = Slope::integer(if sp == Greater { 1 } else { -1 });
        reached(xp, &v)?;
        let inside = if sp == Greater { xp.cmp_slope(&v) == Less } else { xp.cmp_slope(&v) == Greater };
        return Ok(if inside { zero } else { Slope::infinity() });
    }
    let (mut a, mut b): (Vector, Vector) = if sp == Greater {
        ((BigInt::zero(), BigInt::one()), (BigInt::one(), BigInt::zero()))
    } else {
        ((-BigInt::one(), BigInt::zero()), (BigInt::zero(), BigInt::one()))
    };
    loop {
        let m = Slope::new(&a.0 + &b.0, &a.1 + &b.1)?;
        reached(xp, &m)?;
        let l = xm.cmp_slope(&m) == Less;
        let r = xp.cmp_slope(&m) == Less;
        if l != r {
            return Ok(m);
        }
        let mv = (&a.0 + &b.0, &a.1 + &b.1);
        if l {
            b = mv;
        } else {
            a = mv;
        }
    }
}

/// A continued fraction whose pivot sequence from `base.0` (with `base.1`
/// as the first pivot) has the given leading widths. The expansion is the
/// widths followed by the tail `[1, 1, ...]`, mapped from the standard base
/// `(0/1, 1/0)` by the orientation-preserving map sending it to `base`.
pub fn widths_to_cf(base: (&Slope, &Slope), widths: &[BigInt]) -> Result<ContinuedFraction> {
    if widths.is_empty() {
        return Err(Error::InvalidInput("empty width sequence".into()));
    }
    if widths.iter().any(|w| !w.is_positive()) {
        return Err(Error::InvalidInput("widths must be positive".into()));
    }
    let (a0, a1) = base;
    if !a0.is_neighbor(a1) {
        return Err(Error::InvalidInput(format!("base {a0}, {a1} are not Farey neighbors")));
    }
    let standard = ContinuedFraction::periodic(widths.to_vec(), vec![BigInt::one()])?;
    // columns g(inf) = a1, g(0) = a0
    let (mut p1, mut q1) = a1.vector();
    let (p0, q0) = a0.vector();
    if (&p1 * &q0 - &p0 * &q1).is_negative() {
        p1 = -p1;
        q1 = -q1;
    }
    if p1 == BigInt::one() && q1.is_zero() && p0.is_zero() && q0.is_one() {
        return Ok(standard);
    }
    standard.homographic([p1, p0, q1, q0])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn rational(p: i64, q: i64) -> Endpoint {
        Endpoint::Rational(Slope::from_ints(p, q))
    }

    #[test]
    fn golden_from_zero_gives_fibonacci_pivots() {
        let seq = pivot_sequence(&rational(0, 1), &ContinuedFraction::golden(), 6).unwrap();
        let s: Vec<String> = seq.slopes().iter().map(|s| s.to_string()).collect();
        assert_eq!(s, ["1/0", "1/1", "2/1", "3/2", "5/3", "8/5"]);
        assert!(seq.widths().iter().all(|w| w.is_one()));
        assert!(seq.non_pivots(10).is_empty());
    }

    #[test]
    fn widths_follow_coefficients_with_offset() {
        let x = ContinuedFraction::periodic_i64(&[2, 5, 1], &[3, 4]).unwrap();
        let seq = pivot_sequence(&rational(0, 1), &x, 10).unwrap();
        for (n, w) in seq.widths().iter().enumerate() {
            let k = (n as i64 + 1 + WIDTH_CF_OFFSET) as usize;
            assert_eq!(w, &x.term(k).unwrap());
        }
    }

    #[test]
    fn periodic_three_from_infinity() {
        let x = ContinuedFraction::periodic_i64(&[0], &[3]).unwrap();
        let seq = pivot_sequence(&rational(1, 0), &x, 6).unwrap();
        let w = seq.widths();
        assert!(w[2..].iter().all(|w| w == &BigInt::from(3)), "{w:?}");
        for p in seq.pivots.windows(2) {
            assert!(p[0].slope.is_neighbor(&p[1].slope));
        }
    }

    #[test]
    fn non_pivots_attach_to_both_pivots() {
        let x = ContinuedFraction::periodic_i64(&[4], &[2, 3]).unwrap();
        let seq = pivot_sequence(&rational(0, 1), &x, 6).unwrap();
        for w in seq.pivots.windows(2) {
            for b in w[1].non_pivots() {
                assert!(b.is_neighbor(&w[0].slope) && b.is_neighbor(&w[1].slope) || b.is_neighbor(&w[1].slope));
            }
        }
        // beta_1 is adjacent to alpha_0
        let b1 = &seq.non_pivots(1)[0];
        assert!(b1.is_neighbor(&seq.alpha0));
    }

    #[test]
    fn equal_endpoints_rejected() {
        let g = ContinuedFraction::golden();
        assert!(matches!(
            pivot_sequence(&Endpoint::Irrational(g.clone()), &g, 3),
            Err(Error::EqualEndpoints(_))
        ));
        let r = ContinuedFraction::finite_i64(&[1, 2]).unwrap();
        assert!(matches!(pivot_sequence(&rational(3, 2), &r, 3), Err(Error::EqualEndpoints(_))));
    }

    #[test]
    fn rational_plus_runs_out() {
        let r = ContinuedFraction::finite_i64(&[1, 2, 3]).unwrap();
        assert!(matches!(
            pivot_sequence(&rational(0, 1), &r, 10),
            Err(Error::InsufficientCoefficients { .. })
        ));
    }

    #[test]
    fn irrational_minus() {
        let xm = ContinuedFraction::periodic_i64(&[-3], &[1]).unwrap();
        let xp = ContinuedFraction::golden();
        let seq = pivot_sequence(&Endpoint::Irrational(xm), &xp, 5).unwrap();
        // crosses [0, 1/0] then [1, 1/0]
        assert_eq!(seq.pivots[0].slope, Slope::infinity());
        assert!(seq.alpha0.is_neighbor(&seq.pivots[0].slope));
        for p in seq.pivots.windows(2) {
            assert!(p[0].slope.is_neighbor(&p[1].slope));
        }
    }

    #[test]
    fn widths_to_cf_examples() {
        let base = (Slope::from_ints(0, 1), Slope::infinity());
        let cf = widths_to_cf((&base.0, &base.1), &ints(&[3, 4, 2, 1, 3])).unwrap();
        let seq = pivot_sequence(&Endpoint::Rational(base.0.clone()), &cf, 5).unwrap();
        assert_eq!(seq.widths(), ints(&[3, 4, 2, 1, 3]));
        let ones = widths_to_cf((&base.0, &base.1), &ints(&[1])).unwrap();
        assert_eq!(ones.cmp_value(&ContinuedFraction::golden()), std::cmp::Ordering::Equal);
        assert!(widths_to_cf((&base.0, &base.1), &[]).is_err());
        assert!(widths_to_cf((&Slope::from_ints(1, 3), &Slope::from_ints(2, 3)), &ints(&[1])).is_err());
    }

    #[test]
    fn widths_to_cf_general_base() {
        let a0 = Slope::from_ints(2, 5);
        let a1 = Slope::from_ints(3, 7);
        let w = ints(&[2, 1, 5, 3, 1, 2]);
        let cf = widths_to_cf((&a0, &a1), &w).unwrap();
        let seq = pivot_sequence(&Endpoint::Rational(a0), &cf, w.len()).unwrap();
        assert_eq!(seq.pivots[0].slope, a1);
        assert_eq!(seq.widths(), w);
    }
}
