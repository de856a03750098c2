//! Certified evaluation of trace polynomials at algebraic triples, the
//! exact `P = ±2` test, and the minimum gap `min |P^2 - 4|` over `A^3`.
//!
//! The exact test uses a norm argument instead of resultants. Write
//! `Q = P - c` with `c = ±2`, `N_j = deg_j Q`, and let `f_j` be the minimal
//! polynomials, `D = prod deg f_j`. If `Q(x,y,z) != 0` then
//! `prod_j lc(f_j)^{N_j} Q(x,y,z)` is a nonzero algebraic integer of degree
//! at most `D`, and each conjugate is bounded by `L(Q) prod_j L(f_j)^{N_j}`
//! (Mahler measure is at most length). Its norm is at least 1, so
//! `|Q(x,y,z)| >= (L(Q) prod_j L(f_j)^{N_j})^{-D}`. A ball of radius below
//! half that bound which still meets zero therefore proves `Q(x,y,z) = 0`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};
use rayon::prelude::*;

use super::{level_bits, AlgebraicNumber, AlgebraicSet};
use crate::error::{Error, Result};
use crate::num::rat::{floor, log2_floor, sqrt_lower};
use crate::num::{ComplexBall, GaussRat};
use crate::tracecalc::TracePolynomial;

/// Deepest refinement level tried (about `64 * 2^MAX_LEVEL` bits).
pub const MAX_LEVEL: usize = 10;

/// Relative slack allowed between the reported minimum gap and the truth.
const GAP_SLACK: (i64, i64) = (995, 1000);

/// Guard bits added to the working precision over the disc accuracy.
const GUARD_BITS: u32 = 32;

/// Significant bits kept in an inexact reported gap.
const GAP_BITS: u64 = 48;

fn prec_at(level: usize) -> u32 {
    level_bits(level) as u32 + GUARD_BITS
}

/// `r <= |a|` from the Cauchy bound on the reciprocal polynomial.
pub fn liouville_lower_bound(a: &AlgebraicNumber) -> Result<BigRational> {
    let c = a.minpoly().coeffs();
    if c[0].is_zero() {
        return Err(Error::InvalidInput("zero has no positive lower bound".into()));
    }
    let c0 = c[0].abs();
    let rest = c[1..].iter().map(|x| x.abs()).max().unwrap_or_default();
    Ok(BigRational::new(c0.clone(), c0 + rest))
}

/// Which variables `p` depends on.
fn used_vars(p: &TracePolynomial) -> [bool; 3] {
    let mut u = [false; 3];
    for (m, _) in p.terms() {
        u[0] |= m.0 > 0;
        u[1] |= m.1 > 0;
        u[2] |= m.2 > 0;
    }
    u
}

fn var_degrees(p: &TracePolynomial) -> [u32; 3] {
    let mut d = [0; 3];
    for (m, _) in p.terms() {
        d[0] = d[0].max(m.0);
        d[1] = d[1].max(m.1);
        d[2] = d[2].max(m.2);
    }
    d
}

/// A ball containing `p(x, y, z)`, with each input at refinement `level`.
/// Variables that `p` ignores are not refined.
pub fn value_ball(p: &TracePolynomial, triple: [&AlgebraicNumber; 3], level: usize) -> ComplexBall {
    let prec = prec_at(level);
    let used = used_vars(p);
    let b: Vec<ComplexBall> = (0..3)
        .map(|j| if used[j] { triple[j].ball(level, prec) } else { ComplexBall::zero(prec) })
        .collect();
    p.eval(&b[0], &b[1], &b[2])
}

/// Certified lower bound on `|w^2 - 4|` over the ball.
pub fn gap_lower_bound(b: &ComplexBall) -> BigRational {
    let two = ComplexBall::exact_int(&BigInt::from(2), b.prec());
    b.sub(&two).abs_lower() * b.add(&two).abs_lower()
}

fn gap_upper_bound(b: &ComplexBall) -> BigRational {
    let two = ComplexBall::exact_int(&BigInt::from(2), b.prec());
    b.sub(&two).abs_upper() * b.add(&two).abs_upper()
}

/// A ball containing `p(x, y, z)` with radius at most `radius`.
pub fn certified_eval(p: &TracePolynomial, triple: [&AlgebraicNumber; 3], radius: &BigRational) -> Result<ComplexBall> {
    if !radius.is_positive() {
        return Err(Error::InvalidInput("target radius must be positive".into()));
    }
    for level in 0..=MAX_LEVEL {
        let b = value_ball(p, triple, level);
        if &b.radius() <= radius {
            return Ok(b);
        }
    }
    Err(Error::BudgetExceeded(format!("radius {radius} not reached by refinement level {MAX_LEVEL}")))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Pm2Verdict {
    EqualsPlus2,
    EqualsMinus2,
    /// `gap <= |P^2 - 4|`, `gap > 0`.
    Differs { gap: BigRational },
}

impl Pm2Verdict {
    pub fn gap(&self) -> Option<&BigRational> {
        match self {
            Pm2Verdict::Differs { gap } => Some(gap),
            _ => None,
        }
    }
}

fn exact_triple(p: &TracePolynomial, triple: [&AlgebraicNumber; 3]) -> Option<GaussRat> {
    let used = used_vars(p);
    let mut v = Vec::with_capacity(3);
    for j in 0..3 {
        v.push(if used[j] { triple[j].exact_value()? } else { GaussRat::zero() });
    }
    Some(p.eval(&v[0], &v[1], &v[2]))
}

fn exact_verdict(v: &GaussRat) -> Pm2Verdict {
    let two = GaussRat::from_int(2);
    if v == &two {
        return Pm2Verdict::EqualsPlus2;
    }
    if v == &GaussRat::from_int(-2) {
        return Pm2Verdict::EqualsMinus2;
    }
    let w = &(v * v) - &GaussRat::from_int(4);
    let gap = if w.im.is_zero() { w.re.abs() } else { sqrt_lower(&w.norm_sqr(), 64) };
    Pm2Verdict::Differs { gap }
}

/// Exact-test separation bound `rho <= |Q(x,y,z)|` whenever it is nonzero.
fn separation_bound(q: &TracePolynomial, triple: [&AlgebraicNumber; 3]) -> Result<BigRational> {
    let deg = var_degrees(q);
    let mut h = q.length()?;
    let mut d = 1usize;
    for j in 0..3 {
        if deg[j] > 0 {
            h *= Pow::pow(triple[j].length(), deg[j]);
            d *= triple[j].degree();
        }
    }
    Ok(BigRational::new(BigInt::one(), Pow::pow(h, d)))
}

/// Decides whether `p(x, y, z)` is `+2`, `-2`, or neither with a certified gap.
pub fn certify_not_pm2(p: &TracePolynomial, triple: [&AlgebraicNumber; 3]) -> Result<Pm2Verdict> {
    if let Some(v) = exact_triple(p, triple) {
        return Ok(exact_verdict(&v));
    }
    for level in 0..=2 {
        let g = gap_lower_bound(&value_ball(p, triple, level));
        if g.is_positive() {
            return Ok(Pm2Verdict::Differs { gap: g });
        }
    }
    // 0 stays inside B - 2 or B + 2: run the exact test for each sign
    let mut level = 3;
    for (c, verdict) in [(2, Pm2Verdict::EqualsPlus2), (-2, Pm2Verdict::EqualsMinus2)] {
        let q = p - &TracePolynomial::constant(c);
        if q.is_zero() {
            return Ok(verdict);
        }
        let rho = separation_bound(&q, triple)?;
        let cb = ComplexBall::exact_int(&BigInt::from(c), 64);
        loop {
            let b = value_ball(p, triple, level);
            let diff = b.sub(&cb.with_prec(b.prec()));
            if !diff.contains_zero() {
                break;
            }
            if diff.radius() * BigInt::from(2) < rho {
                return Ok(verdict);
            }
            level += 1;
            if level > MAX_LEVEL + 6 {
                return Err(Error::Certification(format!("exact test for {p} = {c} did not converge")));
            }
        }
    }
    loop {
        let g = gap_lower_bound(&value_ball(p, triple, level));
        if g.is_positive() {
            return Ok(Pm2Verdict::Differs { gap: g });
        }
        level += 1;
        if level > MAX_LEVEL + 6 {
            return Err(Error::Certification(format!("gap of {p} not separated from zero")));
        }
    }
}

/// Whether `|p(x,y,z)^2 - 4| >= m` can be certified (refining up to
/// [`MAX_LEVEL`]), with the best lower bound found. `None` when `p = ±2`.
pub fn gap_at_least(p: &TracePolynomial, triple: [&AlgebraicNumber; 3], m: &BigRational) -> Result<Option<(bool, BigRational)>> {
    let g = match certify_not_pm2(p, triple)? {
        Pm2Verdict::Differs { gap } => gap,
        _ => return Ok(None),
    };
    if let Some(v) = exact_triple(p, triple) {
        let w = &(&v * &v) - &GaussRat::from_int(4);
        let ok = !m.is_positive() || w.norm_sqr() >= m * m;
        return Ok(Some((ok, if ok { g.max(m.clone()) } else { g })));
    }
    if &g >= m {
        return Ok(Some((true, g)));
    }
    let mut best = g;
    for level in 0..=MAX_LEVEL {
        let ball = value_ball(p, triple, level);
        let g = gap_lower_bound(&ball);
        if &g >= m {
            return Ok(Some((true, g)));
        }
        best = best.max(g);
        // the whole ball already sits below m: refining further cannot help
        if &gap_upper_bound(&ball) < m {
            break;
        }
    }
    Ok(Some((false, best)))
}

/// Result of [`min_gap`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GapResult {
    /// Certified `m <= |P^2 - 4|` over all admissible triples.
    pub m: BigRational,
    /// Upper bound on the true minimum (attained near `argmin`).
    pub upper: BigRational,
    /// Member indices of a minimizing triple; ignored variables report 0.
    pub argmin: [usize; 3],
    /// Number of triples with `P != ±2`.
    pub admissible: u64,
    /// Number of triples with `P = ±2` (excluded from the minimum).
    pub excluded: u64,
    /// True when the minimum was computed in exact arithmetic.
    pub exact: bool,
}

/// Rounds a positive rational down to `bits` significant bits.
fn round_down_significant(r: &BigRational, bits: u64) -> BigRational {
    let e = log2_floor(r);
    let shift = bits as i64 - 1 - e;
    let scale = |k: i64| -> BigRational {
        if k >= 0 {
            BigRational::from_integer(BigInt::one() << k as u64)
        } else {
            BigRational::new(BigInt::one(), BigInt::one() << (-k) as u64)
        }
    };
    BigRational::from_integer(floor(&(r * scale(shift)))) * scale(-shift)
}

#[derive(Clone)]
enum Scan {
    Excluded,
    Exact(BigRational),
    Bounds { lower: BigRational, upper: BigRational, level: usize },
    /// Level-0 ball whose upper bound has not been needed yet.
    Unranked { lower: BigRational, ball: ComplexBall },
}

/// `x^0 ..= x^n` as balls at `prec`.
fn power_table(a: &AlgebraicNumber, n: u32, level: usize, prec: u32) -> Vec<ComplexBall> {
    let x = a.ball(level, prec);
    let mut out = vec![ComplexBall::exact_int(&BigInt::one(), prec)];
    for k in 1..=n as usize {
        out.push(out[k - 1].mul(&x));
    }
    out
}

/// Triple space of `p` over `set`: variables `p` ignores range over a
/// single placeholder member. Triples are visited in blocks sharing the two
/// outer coordinates; within a block `p` is a polynomial in the innermost
/// variable whose coefficient balls are computed once.
struct TripleSpace {
    dims: [usize; 3],
    /// Axes from outermost to innermost.
    order: [usize; 3],
    /// Multiplicity of each enumerated triple in the full `A^3`.
    weight: u64,
    prec: u32,
    /// `tables[axis][member][k]` is the `k`-th power.
    tables: Vec<Vec<Vec<ComplexBall>>>,
    /// Terms grouped by the innermost exponent: `(outer exponents, coefficient)`.
    groups: Vec<Vec<((usize, usize), BigInt)>>,
}

impl TripleSpace {
    fn new(p: &TracePolynomial, set: &AlgebraicSet) -> Self {
        let n = set.len();
        let used = used_vars(p);
        let deg = var_degrees(p);
        let dims: [usize; 3] = used.map(|u| if u { n } else { 1 });
        let weight: u64 = used.iter().filter(|u| !**u).fold(1u64, |w, _| w * n as u64);
        let inner = (0..3).filter(|&j| used[j]).min_by_key(|&j| deg[j]).unwrap_or(2);
        let outer: Vec<usize> = (0..3).filter(|&j| j != inner).collect();
        let order = [outer[0], outer[1], inner];
        let prec = prec_at(0);
        let tables = (0..3)
            .map(|j| {
                (0..dims[j])
                    .into_par_iter()
                    .map(|i| power_table(&set.members[i], if used[j] { deg[j] } else { 0 }, 0, prec))
                    .collect()
            })
            .collect();
        let mut groups = vec![Vec::new(); deg[inner] as usize + 1];
        for (m, c) in p.terms() {
            let e = [m.0 as usize, m.1 as usize, m.2 as usize];
            groups[e[inner]].push(((e[order[0]], e[order[1]]), c.clone()));
        }
        TripleSpace { dims, order, weight, prec, tables, groups }
    }

    fn axis_len(&self, j: usize) -> usize {
        self.dims[self.order[j]]
    }

    fn total(&self) -> usize {
        self.dims[0] * self.dims[1] * self.dims[2]
    }

    fn unflat(&self, k: usize) -> [usize; 3] {
        let (d1, d2) = (self.axis_len(1), self.axis_len(2));
        let u = [k / (d1 * d2), (k / d2) % d1, k % d2];
        let mut idx = [0; 3];
        for j in 0..3 {
            idx[self.order[j]] = u[j];
        }
        idx
    }

    /// Level-0 balls for block `b`, i.e. flat indices `b * inner_len ..`.
    fn block(&self, b: usize) -> Vec<ComplexBall> {
        let d1 = self.axis_len(1);
        let t0 = &self.tables[self.order[0]][b / d1];
        let t1 = &self.tables[self.order[1]][b % d1];
        let zero = ComplexBall::zero(self.prec);
        let coeffs: Vec<ComplexBall> = self
            .groups
            .iter()
            .map(|g| g.iter().fold(zero.clone(), |acc, ((i, j), c)| acc.add(&t0[*i].mul(&t1[*j]).mul_int(c))))
            .collect();
        self.tables[self.order[2]]
            .iter()
            .map(|t2| coeffs.iter().zip(t2).fold(zero.clone(), |acc, (c, pw)| acc.add(&c.mul(pw))))
            .collect()
    }

    /// `f(flat index, level-0 ball)` for every triple, in flat order.
    fn map<T: Send>(&self, f: impl Fn(usize, ComplexBall) -> Result<T> + Sync) -> Result<Vec<T>> {
        let inner = self.axis_len(2);
        let blocks: Vec<Vec<T>> = (0..self.axis_len(0) * self.axis_len(1))
            .into_par_iter()
            .map(|b| self.block(b).into_iter().enumerate().map(|(j, ball)| f(b * inner + j, ball)).collect())
            .collect::<Result<_>>()?;
        Ok(blocks.into_iter().flatten().collect())
    }
}

/// Outcome of [`verify_gap`], counted over the full `A^3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GapCheck {
    pub triples: u64,
    pub admissible: u64,
    pub excluded: u64,
    /// Admissible triples where `|P^2 - 4| >= m` could not be certified.
    pub failures: u64,
}

/// Certifies `|P(x,y,z)^2 - 4| >= m` at every triple of `A^3` with
/// `P(x,y,z) != ±2`.
pub fn verify_gap(p: &TracePolynomial, set: &AlgebraicSet, m: &BigRational) -> Result<GapCheck> {
    let space = TripleSpace::new(p, set);
    let results: Vec<Option<bool>> = space.map(|k, ball| {
        let triple = space.unflat(k).map(|i| &set.members[i]);
        if exact_triple(p, triple).is_none() && &gap_lower_bound(&ball) >= m {
            return Ok(Some(true));
        }
        Ok(gap_at_least(p, triple, m)?.map(|(ok, _)| ok))
    })?;
    let w = space.weight;
    let excluded = results.iter().filter(|r| r.is_none()).count() as u64;
    let failures = results.iter().filter(|r| **r == Some(false)).count() as u64;
    Ok(GapCheck {
        triples: space.total() as u64 * w,
        admissible: (space.total() as u64 - excluded) * w,
        excluded: excluded * w,
        failures: failures * w,
    })
}

/// `m = min |P(x,y,z)^2 - 4|` over triples in `A^3` with `P(x,y,z) != ±2`,
/// certified from below and within 0.5% of the true minimum.
pub fn min_gap(p: &TracePolynomial, set: &AlgebraicSet) -> Result<GapResult> {
    if set.is_empty() {
        return Err(Error::InvalidInput("empty algebraic set".into()));
    }
    let space = TripleSpace::new(p, set);
    let (total, weight) = (space.total(), space.weight);
    let unflat = |k: usize| space.unflat(k);

    let mut scan: Vec<Scan> = space.map(|k, b| {
            let idx = unflat(k);
            let triple = idx.map(|i| &set.members[i]);
            if let Some(v) = exact_triple(p, triple) {
                return Ok(match exact_verdict(&v) {
                    Pm2Verdict::Differs { .. } => {
                        let w = &(&v * &v) - &GaussRat::from_int(4);
                        if w.im.is_zero() {
                            Scan::Exact(w.re.abs())
                        } else {
                            Scan::Bounds {
                                lower: sqrt_lower(&w.norm_sqr(), 96),
                                upper: crate::num::rat::sqrt_upper(&w.norm_sqr(), 96),
                                level: MAX_LEVEL,
                            }
                        }
                    }
                    _ => Scan::Excluded,
                });
            }
            let lower = gap_lower_bound(&b);
            if lower.is_positive() {
                return Ok(Scan::Unranked { lower, ball: b });
            }
            Ok(match certify_not_pm2(p, triple)? {
                Pm2Verdict::Differs { .. } => refine_bounds(p, triple, 1),
                _ => Scan::Excluded,
            })
        })?;

    let excluded = scan.iter().filter(|s| matches!(s, Scan::Excluded)).count() as u64;
    let admissible = total as u64 - excluded;
    if admissible == 0 {
        return Err(Error::DegenerateGap(format!("{p} equals ±2 at every triple of A_{}", set.index)));
    }

    // upper bounds only matter for triples whose lower bound can beat the best one so far
    let mut best_upper = scan
        .iter()
        .filter_map(|s| match s {
            Scan::Exact(v) => Some(v.clone()),
            Scan::Bounds { upper, .. } => Some(upper.clone()),
            _ => None,
        })
        .min();
    let mut unranked: Vec<usize> = (0..total).filter(|&k| matches!(scan[k], Scan::Unranked { .. })).collect();
    unranked.sort_by(|&a, &b| match (&scan[a], &scan[b]) {
        (Scan::Unranked { lower: x, .. }, Scan::Unranked { lower: y, .. }) => x.cmp(y).then(a.cmp(&b)),
        _ => unreachable!(),
    });
    for k in unranked {
        let Scan::Unranked { lower, ball } = &scan[k] else { unreachable!() };
        if best_upper.as_ref().is_some_and(|u| lower > u) {
            break;
        }
        let upper = gap_upper_bound(ball);
        if best_upper.as_ref().is_none_or(|u| &upper < u) {
            best_upper = Some(upper.clone());
        }
        scan[k] = Scan::Bounds { lower: lower.clone(), upper, level: 0 };
    }

    // refine every triple whose lower bound could still be the minimum
    let slack = BigRational::new(BigInt::from(GAP_SLACK.0), BigInt::from(GAP_SLACK.1));
    loop {
        let best_upper = scan
            .iter()
            .filter_map(|s| match s {
                Scan::Exact(v) => Some(v.clone()),
                Scan::Bounds { upper, .. } => Some(upper.clone()),
                _ => None,
            })
            .min()
            .expect("admissible triple");
        let pending: Vec<usize> = scan
            .iter()
            .enumerate()
            .filter(|(_, s)| match s {
                Scan::Bounds { lower, upper, level } => {
                    lower <= &best_upper && lower < &(upper * &slack) && *level < MAX_LEVEL
                }
                _ => false,
            })
            .map(|(k, _)| k)
            .collect();
        if pending.is_empty() {
            break;
        }
        let refined: Vec<(usize, Scan)> = pending
            .into_par_iter()
            .map(|k| {
                let Scan::Bounds { level, .. } = scan[k] else { unreachable!() };
                let triple = unflat(k).map(|i| &set.members[i]);
                (k, refine_bounds(p, triple, level + 1))
            })
            .collect();
        for (k, s) in refined {
            scan[k] = s;
        }
    }

    let mut best: Option<(BigRational, BigRational, usize, bool)> = None;
    for (k, s) in scan.iter().enumerate() {
        let (lo, up, exact) = match s {
            Scan::Exact(v) => (v.clone(), v.clone(), true),
            Scan::Bounds { lower, upper, .. } => (lower.clone(), upper.clone(), false),
            _ => continue,
        };
        if best.as_ref().map(|b| lo < b.0).unwrap_or(true) {
            best = Some((lo, up, k, exact));
        }
    }
    let (lo, _, k, exact) = best.expect("admissible triple");
    let upper = scan
        .iter()
        .filter_map(|s| match s {
            Scan::Exact(v) => Some(v.clone()),
            Scan::Bounds { upper, .. } => Some(upper.clone()),
            _ => None,
        })
        .min()
        .expect("admissible triple");
    let m = if exact { lo } else { round_down_significant(&lo, GAP_BITS) };
    if !m.is_positive() {
        return Err(Error::Certification(format!("gap of {p} could not be separated from zero")));
    }
    Ok(GapResult { m, upper, argmin: unflat(k), admissible: admissible * weight, excluded: excluded * weight, exact })
}

fn refine_bounds(p: &TracePolynomial, triple: [&AlgebraicNumber; 3], level: usize) -> Scan {
    let b = value_ball(p, triple, level);
    Scan::Bounds { lower: gap_lower_bound(&b), upper: gap_upper_bound(&b), level }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algnum::{enumerate_a_cached, MAX_INDEX};
    use crate::num::rat::rat;

    fn num(s: &str) -> AlgebraicNumber {
        AlgebraicNumber::parse(s).unwrap()
    }

    #[test]
    fn liouville_bounds() {
        for (s, cap) in [("1", rat(1, 1)), ("i", rat(1, 1)), ("1/3", rat(1, 3)), ("-5/2", rat(5, 2))] {
            let r = liouville_lower_bound(&num(s)).unwrap();
            assert!(r.is_positive() && r <= cap, "{s}: {r}");
        }
        assert!(liouville_lower_bound(&num("0")).is_err());
        let phi_bar = num("root:-1,-1,1@-0.6,0");
        let r = liouville_lower_bound(&phi_bar).unwrap();
        assert!(crate::num::rat::to_f64(&r) <= 0.618_033_99);
    }

    #[test]
    fn eval_examples() {
        let (one, i) = (num("1"), num("i"));
        let zy_x = &(&TracePolynomial::z() * &TracePolynomial::y()) - &TracePolynomial::x();
        let b = certified_eval(&zy_x, [&one, &i, &i], &rat(1, 1000)).unwrap();
        assert!(b.contains_point(&GaussRat::from_int(-2)));
        let (x, y, z) = (TracePolynomial::x(), TracePolynomial::y(), TracePolynomial::z());
        let defect = &(&(&(&x * &x) + &(&y * &y)) + &(&z * &z)) - &(&(&x * &y) * &z);
        let three = num("3");
        let b = certified_eval(&defect, [&three, &three, &three], &rat(1, 1 << 20)).unwrap();
        assert!(b.contains_zero());
    }

    #[test]
    fn pm2_examples() {
        let x = TracePolynomial::x();
        let (two, zero, one, i) = (num("2"), num("0"), num("1"), num("i"));
        assert_eq!(certify_not_pm2(&x, [&two, &zero, &zero]).unwrap(), Pm2Verdict::EqualsPlus2);
        assert_eq!(certify_not_pm2(&x, [&zero, &one, &one]).unwrap(), Pm2Verdict::Differs { gap: rat(4, 1) });
        let zy_x = &(&TracePolynomial::z() * &TracePolynomial::y()) - &x;
        assert_eq!(certify_not_pm2(&zy_x, [&one, &i, &i]).unwrap(), Pm2Verdict::EqualsMinus2);
    }

    #[test]
    fn exact_test_on_irrational_triple() {
        // phi^2 - phi - 1 = 0, so X^2 - X + 1 is exactly 2 at phi
        let phi = num("root:-1,-1,1@1.6,0");
        let x = TracePolynomial::x();
        let p = &(&(&x * &x) - &x) + &TracePolynomial::constant(1);
        assert_eq!(certify_not_pm2(&p, [&phi, &phi, &phi]).unwrap(), Pm2Verdict::EqualsPlus2);
        let p = &(&x * &x) - &x;
        let v = certify_not_pm2(&p, [&phi, &phi, &phi]).unwrap();
        assert!(matches!(v, Pm2Verdict::Differs { .. }));
        // X Y = -1 for the two roots of X^2 - X - 1
        let psi = num("root:-1,-1,1@-0.6,0");
        let xy = &(&x * &TracePolynomial::y()) - &TracePolynomial::constant(1);
        assert_eq!(certify_not_pm2(&xy, [&phi, &psi, &phi]).unwrap(), Pm2Verdict::EqualsMinus2);
    }

    #[test]
    fn min_gap_examples() {
        let x = TracePolynomial::x();
        let a1 = enumerate_a_cached(1, None, MAX_INDEX).unwrap();
        let r = min_gap(&x, &a1).unwrap();
        assert_eq!(r.m, rat(4, 1));
        let a2 = enumerate_a_cached(2, None, MAX_INDEX).unwrap();
        let r = min_gap(&x, &a2).unwrap();
        assert_eq!(r.m, rat(3, 1));
        assert!(r.exact);
        assert_eq!(r.admissible, 125);
        assert!(matches!(min_gap(&TracePolynomial::constant(2), &a2), Err(Error::DegenerateGap(_))));
    }

    #[test]
    fn significant_rounding() {
        let r = round_down_significant(&rat(1, 3), 8);
        assert!(r <= rat(1, 3) && r >= rat(1, 3) * rat(127, 128));
    }
}
