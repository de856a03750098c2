//! Numeric ground truth for the trace calculus: Markoff triples realized as
//! `SL2(C)` matrix pairs, slopes as words in the generators, and complex
//! translation lengths.
//!
//! Generators are chosen as
//!
//! ```text
//! A = [[x, b], [-1/b, 0]],   B = [[0, 1], [-1, y]],   b^2 + z b + 1 = 0,
//! ```
//!
//! so `tr A = x`, `tr B = y`, `tr AB = -b - 1/b = z`, and by the Fricke
//! identity `tr [A, B] = x^2 + y^2 + z^2 - xyz - 2 = -2` on Markoff triples.
//! Slope `1/0` is `A`, `0/1` is `B`, and a Farey mediant gets the
//! concatenation of its parents' words.

use std::fmt;

use astro_float::{BigFloat, RoundingMode};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::farey::{Slope, Triangle};
use crate::num::bigcomplex::{bf_pi, bf_to_f64, bf_to_string};
use crate::num::BigComplex;
use crate::tracecalc::TracePolynomial;

const RM: RoundingMode = RoundingMode::ToEven;

pub const BASE_PREC: usize = 128;
pub const MAX_PREC: usize = 4096;

/// Traces closer than this to `±2` use the series for `asinh`.
const SERIES_RADIUS: f64 = 1e-6;

/// Relative tolerance for accepting a triple as Markoff.
const MARKOFF_TOL: f64 = 1e-9;

fn bf(x: f64, prec: usize) -> BigFloat {
    BigFloat::from_f64(x, prec)
}

/// `2^-e` at `prec` bits.
fn eps(e: usize, prec: usize) -> BigFloat {
    bf(2.0, prec).powi(e, prec, RM).reciprocal(prec, RM)
}

/// A `2x2` complex matrix of determinant one.
#[derive(Clone, Debug)]
pub struct Mat2 {
    /// Row-major `[a, b, c, d]`.
    pub e: [BigComplex; 4],
    pub prec: usize,
}

impl Mat2 {
    pub fn new(e: [BigComplex; 4]) -> Result<Mat2> {
        let prec = e.iter().map(|x| x.prec).max().unwrap_or(BASE_PREC);
        let m = Mat2 { e, prec };
        if !m.det_ok() {
            return Err(Error::InvalidInput("determinant is not 1".into()));
        }
        Ok(m)
    }

    /// The unique matrix `[[a, b], [c, (1 + bc)/a]]`.
    pub fn unimodular(a: BigComplex, b: BigComplex, c: BigComplex) -> Result<Mat2> {
        if a.re.is_zero() && a.im.is_zero() {
            return Err(Error::InvalidInput("upper-left entry must be nonzero".into()));
        }
        let prec = a.prec.max(b.prec).max(c.prec);
        let d = BigComplex::one(prec).add(&b.mul(&c)).div(&a);
        Ok(Mat2 { e: [a, b, c, d], prec })
    }

    pub fn identity(prec: usize) -> Mat2 {
        let (o, z) = (BigComplex::one(prec), BigComplex::zero(prec));
        Mat2 { e: [o.clone(), z.clone(), z, o], prec }
    }

    pub fn mul(&self, o: &Mat2) -> Mat2 {
        let [a, b, c, d] = &self.e;
        let [p, q, r, s] = &o.e;
        Mat2 {
            e: [a.mul(p).add(&b.mul(r)), a.mul(q).add(&b.mul(s)), c.mul(p).add(&d.mul(r)), c.mul(q).add(&d.mul(s))],
            prec: self.prec.max(o.prec),
        }
    }

    /// Inverse via the adjugate, valid because the determinant is one.
    pub fn inverse(&self) -> Mat2 {
        let [a, b, c, d] = &self.e;
        Mat2 { e: [d.clone(), b.neg(), c.neg(), a.clone()], prec: self.prec }
    }

    pub fn trace(&self) -> BigComplex {
        self.e[0].add(&self.e[3])
    }

    pub fn det(&self) -> BigComplex {
        self.e[0].mul(&self.e[3]).sub(&self.e[1].mul(&self.e[2]))
    }

    /// `|det - 1| <= 2^(-prec/2) * max(1, |M|^2)`, `|M|` the largest entry.
    pub fn det_ok(&self) -> bool {
        let p = self.prec;
        let err = self.det().sub(&BigComplex::one(p)).abs();
        let mut scale = bf(1.0, p);
        for x in &self.e {
            let n = x.norm_sqr();
            if n > scale {
                scale = n;
            }
        }
        err <= eps(p / 2, p).mul(&scale, p, RM)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Letter {
    A,
    B,
    AInv,
    BInv,
}

/// A word in `A`, `B` and their inverses, printed with lower case for
/// inverses.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn concat(&self, o: &Word) -> Word {
        Word(self.0.iter().chain(&o.0).copied().collect())
    }

    /// Exponent sums of `A` and `B`.
    pub fn homology(&self) -> (i64, i64) {
        self.0.iter().fold((0, 0), |(a, b), l| match l {
            Letter::A => (a + 1, b),
            Letter::AInv => (a - 1, b),
            Letter::B => (a, b + 1),
            Letter::BInv => (a, b - 1),
        })
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            f.write_str(match l {
                Letter::A => "A",
                Letter::B => "B",
                Letter::AInv => "a",
                Letter::BInv => "b",
            })?;
        }
        Ok(())
    }
}

fn det2(u: &(BigInt, BigInt), v: &(BigInt, BigInt)) -> BigInt {
    &u.0 * &v.1 - &u.1 * &v.0
}

/// Word of a slope by mediant descent: with `det(u, v) = 1`, the vector
/// `u + v` gets `word(u) word(v)`. Slopes are vectors `(p, q)` with
/// `1/0 = (1, 0)`; negative slopes descend from `(0, 1)` and `(-1, 0)`.
pub fn slope_to_word(s: &Slope) -> Word {
    let t = (s.p().clone(), s.q().clone());
    let unit = |l: Letter| Word(vec![l]);
    let (mut u, mut v, mut wu, mut wv) = if t.0.is_negative() {
        ((BigInt::zero(), BigInt::from(1)), (BigInt::from(-1), BigInt::zero()), unit(Letter::B), unit(Letter::AInv))
    } else {
        ((BigInt::from(1), BigInt::zero()), (BigInt::zero(), BigInt::from(1)), unit(Letter::A), unit(Letter::B))
    };
    if t == u {
        return wu;
    }
    if t == v {
        return wv;
    }
    loop {
        let m = (&u.0 + &v.0, &u.1 + &v.1);
        let wm = wu.concat(&wv);
        if m == t {
            return wm;
        }
        // t = a u + b v with a, b > 0
        let (a, b) = (det2(&t, &v), det2(&u, &t));
        if a > b {
            v = m;
            wv = wm;
        } else {
            u = m;
            wu = wm;
        }
    }
}

/// The product spelled by `word`, failing when the determinant has drifted
/// beyond the working precision.
pub fn evaluate_word(word: &Word, a: &Mat2, b: &Mat2) -> Result<Mat2> {
    let (ai, bi) = (a.inverse(), b.inverse());
    let mut m = Mat2::identity(a.prec.max(b.prec));
    for l in &word.0 {
        m = m.mul(match l {
            Letter::A => a,
            Letter::B => b,
            Letter::AInv => &ai,
            Letter::BInv => &bi,
        });
    }
    if !m.det_ok() {
        return Err(Error::Certification(format!("precision underflow evaluating {word} at {} bits", m.prec)));
    }
    Ok(m)
}

pub fn trace_of_word(word: &Word, a: &Mat2, b: &Mat2) -> Result<BigComplex> {
    Ok(evaluate_word(word, a, b)?.trace())
}

pub fn markoff_residual(t: &[BigComplex; 3]) -> BigComplex {
    let [x, y, z] = t;
    x.mul(x).add(&y.mul(y)).add(&z.mul(z)).sub(&x.mul(y).mul(z))
}

/// Generators with `tr A = x`, `tr B = y`, `tr AB = z` and parabolic
/// commutator of trace `-2`.
pub fn triple_to_matrices(t: &[BigComplex; 3]) -> Result<(Mat2, Mat2)> {
    let [x, y, z] = t;
    if t.iter().any(|c| c.re.is_zero() && c.im.is_zero()) {
        return Err(Error::InvalidInput("triple has a zero coordinate".into()));
    }
    let scale = 1.0 + x.abs_f64() * y.abs_f64() * z.abs_f64();
    if markoff_residual(t).abs_f64() > MARKOFF_TOL * scale {
        return Err(Error::InvalidInput("triple does not satisfy the Markoff equation".into()));
    }
    let p = x.prec.max(y.prec).max(z.prec);
    // larger root of b^2 + z b + 1, so that -1/b is small
    let disc = z.mul(z).sub(&BigComplex::from_int(4, p)).sqrt();
    let (r1, r2) = (z.neg().add(&disc).scale(0.5), z.neg().sub(&disc).scale(0.5));
    let b = if bf_to_f64(&r1.norm_sqr()) >= bf_to_f64(&r2.norm_sqr()) { r1 } else { r2 };
    let (zero, one) = (BigComplex::zero(p), BigComplex::one(p));
    let ma = Mat2 { e: [x.clone(), b.clone(), one.neg().div(&b), zero.clone()], prec: p };
    let mb = Mat2 { e: [zero, one.clone(), one.neg(), y.clone()], prec: p };
    Ok((ma, mb))
}

pub fn commutator(a: &Mat2, b: &Mat2) -> Mat2 {
    a.mul(b).mul(&a.inverse()).mul(&b.inverse())
}

/// `|tr [A,B] - (tr^2 A + tr^2 B + tr^2 AB - tr A tr B tr AB - 2)|`.
pub fn fricke_residual(a: &Mat2, b: &Mat2) -> BigFloat {
    let (x, y, z) = (a.trace(), b.trace(), a.mul(b).trace());
    let rhs = markoff_residual(&[x, y, z]).sub(&BigComplex::from_int(2, a.prec));
    commutator(a, b).trace().sub(&rhs).abs()
}

fn random_complex(rng: &mut impl Rng, r: f64, prec: usize) -> BigComplex {
    BigComplex::from_f64(rng.gen_range(-r..r), rng.gen_range(-r..r), prec)
}

/// A random matrix of determinant one with entries of modulus about 1.
pub fn random_unimodular(rng: &mut impl Rng, prec: usize) -> Mat2 {
    loop {
        let a = random_complex(rng, 2.0, prec);
        if a.abs_f64() < 0.5 {
            continue;
        }
        let (b, c) = (random_complex(rng, 2.0, prec), random_complex(rng, 2.0, prec));
        return Mat2::unimodular(a, b, c).expect("nonzero entry");
    }
}

/// `λ = l + iθ` with `tr^2 = 4 cosh^2(λ/2)`, `l >= 0`, `θ ∈ (-π, π]`.
#[derive(Clone, Debug)]
pub struct ComplexLength {
    pub l: BigFloat,
    pub theta: BigFloat,
}

impl ComplexLength {
    pub fn to_f64(&self) -> (f64, f64) {
        (bf_to_f64(&self.l), bf_to_f64(&self.theta))
    }

    pub fn as_complex(&self, prec: usize) -> BigComplex {
        BigComplex::new(self.l.clone(), self.theta.clone(), prec)
    }
}

/// `asinh(s) = Σ (-1)^n (2n)! / (4^n n!^2 (2n+1)) s^(2n+1)` for small `s`.
fn asinh_series(s: &BigComplex) -> BigComplex {
    let p = s.prec;
    let s2 = s.mul(s).neg();
    let tiny = eps(p + 8, p).mul(&s.abs(), p, RM);
    let mut term = s.clone();
    let mut sum = s.clone();
    let mut n = 0u64;
    loop {
        let k = 2 * n as i64 + 1;
        let ratio = BigComplex::from_int(k * k, p).div(&BigComplex::from_int((k + 1) * (k + 2), p));
        term = term.mul(&s2).mul(&ratio);
        sum = sum.add(&term);
        if term.abs() <= tiny {
            return sum;
        }
        n += 1;
    }
}

fn length_at(tr: &BigComplex, prec: usize) -> ComplexLength {
    let tr = tr.with_prec(prec);
    let two = BigComplex::from_int(2, prec);
    let (tm, tp) = (tr.sub(&two), tr.add(&two));
    // sinh(λ/2) = sqrt(tr^2 - 4) / 2, with tr^2 - 4 factored against cancellation
    let s = tm.mul(&tp).sqrt().scale(0.5);
    let near = tm.abs_f64() < SERIES_RADIUS || tp.abs_f64() < SERIES_RADIUS;
    let half = if near { asinh_series(&s) } else { s.asinh() };
    let mut lambda = half.scale(2.0);
    if lambda.re.is_negative() {
        lambda = lambda.neg();
    }
    let pi = bf_pi(prec);
    let two_pi = pi.add(&pi, prec, RM);
    let mut theta = lambda.im;
    while theta > pi {
        theta = theta.sub(&two_pi, prec, RM);
    }
    while theta <= pi.neg() {
        theta = theta.add(&two_pi, prec, RM);
    }
    if lambda.re.is_zero() && theta.is_negative() {
        theta = theta.neg();
    }
    ComplexLength { l: lambda.re, theta }
}

/// `|4 sinh^2(λ/2) - (tr^2 - 4)|`.
pub fn length_residual(tr: &BigComplex, len: &ComplexLength) -> BigFloat {
    let p = tr.prec.max(len.l.mantissa_max_bit_len().unwrap_or(0)).max(BASE_PREC);
    let sh = len.as_complex(p).scale(0.5).sinh();
    let lhs = sh.mul(&sh).scale(4.0);
    let rhs = tr.mul(tr).sub(&BigComplex::from_int(4, p));
    lhs.sub(&rhs).abs()
}

/// Complex translation length, computed at increasing precision until the
/// defining identity checks to half the working precision.
pub fn complex_length(tr: &BigComplex) -> ComplexLength {
    let mut prec = tr.prec.max(BASE_PREC);
    loop {
        let len = length_at(tr, prec);
        let t = tr.with_prec(prec);
        let scale = bf(1.0, prec).add(&t.norm_sqr(), prec, RM);
        if prec >= MAX_PREC || length_residual(&t, &len) <= eps(prec / 2, prec).mul(&scale, prec, RM) {
            return len;
        }
        prec *= 2;
    }
}

/// `|tr^2 - 4|`, cross-checked against `|4 sinh^2(λ/2)|` to `1e-12`
/// relative to `1 + |tr|^2`.
pub fn trace_gap(tr: &BigComplex) -> Result<BigFloat> {
    let p = tr.prec;
    let two = BigComplex::from_int(2, p);
    let gap = tr.sub(&two).mul(&tr.add(&two)).abs();
    let len = complex_length(tr);
    let scale = 1.0 + tr.abs_f64().powi(2);
    let res = bf_to_f64(&length_residual(tr, &len));
    if res > 1e-12 * scale {
        return Err(Error::Certification(format!("length identity off by {res:e}")));
    }
    Ok(gap)
}

/// A Markoff triple `(x, y, z)` reproducible at any precision: `x`, `y`
/// are exact doubles and `z` is the chosen root of
/// `z^2 - xy z + x^2 + y^2 = 0`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MarkoffSeed {
    pub x: (f64, f64),
    pub y: (f64, f64),
    /// Take `(xy + sqrt(...))/2` when true, `(xy - sqrt(...))/2` otherwise.
    pub plus: bool,
}

impl MarkoffSeed {
    pub fn triple(&self, prec: usize) -> [BigComplex; 3] {
        let x = BigComplex::from_f64(self.x.0, self.x.1, prec);
        let y = BigComplex::from_f64(self.y.0, self.y.1, prec);
        let xy = x.mul(&y);
        let d = xy.mul(&xy).sub(&x.mul(&x).add(&y.mul(&y)).scale(4.0)).sqrt();
        let z = if self.plus { xy.add(&d) } else { xy.sub(&d) }.scale(0.5);
        [x, y, z]
    }

    /// Coordinates with modulus in `[lo, hi]`.
    pub fn random(rng: &mut impl Rng, lo: f64, hi: f64) -> MarkoffSeed {
        let pick = |rng: &mut _| {
            let r: f64 = Rng::gen_range(rng, lo..hi);
            let a: f64 = Rng::gen_range(rng, -std::f64::consts::PI..std::f64::consts::PI);
            (r * a.cos(), r * a.sin())
        };
        loop {
            let (x, y) = (pick(rng), pick(rng));
            let plus = rng.gen_bool(0.5);
            let seed = MarkoffSeed { x, y, plus };
            let z = seed.triple(64)[2].abs_f64();
            if (lo..=hi).contains(&z) {
                return seed;
            }
        }
    }
}

/// About 30 significant digits.
fn format_real(x: &BigFloat) -> String {
    let mut x = x.clone();
    let _ = x.set_precision(104, RM);
    bf_to_string(&x)
}

fn format_complex(z: &BigComplex) -> String {
    let sign = if z.im.is_negative() { "-" } else { "+" };
    format!("{}{sign}{}i", format_real(&z.re), format_real(&z.im.abs()))
}

/// One comparison of a trace polynomial against a matrix word trace.
#[derive(Clone, Debug)]
pub struct OracleSample {
    pub target: Slope,
    pub poly_eval: BigComplex,
    pub word_trace: BigComplex,
    pub abs_diff: BigFloat,
    pub prec: usize,
    pub pass: bool,
}

#[derive(Serialize)]
struct OracleLine {
    target: String,
    poly_eval: String,
    word_trace: String,
    abs_diff: String,
    prec: usize,
    pass: bool,
}

impl OracleSample {
    /// A single JSON line.
    pub fn to_json_line(&self) -> String {
        let line = OracleLine {
            target: self.target.to_string(),
            poly_eval: format_complex(&self.poly_eval),
            word_trace: format_complex(&self.word_trace),
            abs_diff: format_real(&self.abs_diff),
            prec: self.prec,
            pass: self.pass,
        };
        serde_json::to_string(&line).expect("plain struct serializes")
    }
}

/// Evaluates `poly` (the trace polynomial of `target` over the standard
/// base triangle) at the traces of the base words, and compares with the
/// trace of `target`'s word, doubling the precision up to [`MAX_PREC`]
/// until they agree to `tol`.
pub fn oracle_compare(target: &Slope, poly: &TracePolynomial, seed: &MarkoffSeed, tol: f64) -> Result<OracleSample> {
    let base = Triangle::standard();
    let word = slope_to_word(target);
    let base_words = base.vertices().map(slope_to_word);
    let mut prec = BASE_PREC;
    loop {
        let (a, b) = triple_to_matrices(&seed.triple(prec))?;
        let attempt = (|| -> Result<OracleSample> {
            let [x, y, z] = [0, 1, 2].map(|i| trace_of_word(&base_words[i], &a, &b));
            let poly_eval = poly.eval(&x?, &y?, &z?);
            let word_trace = trace_of_word(&word, &a, &b)?;
            let abs_diff = poly_eval.sub(&word_trace).abs();
            let pass = abs_diff <= bf(tol, prec);
            Ok(OracleSample { target: target.clone(), poly_eval, word_trace, abs_diff, prec, pass })
        })();
        match attempt {
            Ok(s) if s.pass || prec >= MAX_PREC => return Ok(s),
            Err(e) if prec >= MAX_PREC => return Err(e),
            _ => prec *= 2,
        }
    }
}

/// A random slope reached from `1/1` by at most `depth` Stern–Brocot
/// moves, with a random sign.
pub fn random_target(rng: &mut impl Rng, depth: usize) -> Slope {
    let steps = rng.gen_range(0..=depth);
    let (mut lo, mut hi) = ((0i64, 1i64), (1i64, 0i64));
    let mut m = (1i64, 1i64);
    for _ in 0..steps {
        if rng.gen_bool(0.5) {
            hi = m;
        } else {
            lo = m;
        }
        m = (lo.0 + hi.0, lo.1 + hi.1);
    }
    let sign = if rng.gen_bool(0.5) { -1 } else { 1 };
    Slope::from_ints(sign * m.0, m.1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tracecalc::trace_polynomial;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> BigComplex {
        BigComplex::from_f64(re, im, 256)
    }

    fn close(z: &BigComplex, re: f64, im: f64, tol: f64) -> bool {
        let (a, b) = z.to_f64();
        (a - re).abs() < tol && (b - im).abs() < tol
    }

    fn markoff(x: f64, y: f64) -> [BigComplex; 3] {
        MarkoffSeed { x: (x, 0.0), y: (y, 0.0), plus: false }.triple(256)
    }

    #[test]
    fn words_of_small_slopes() {
        let w = |p, q| slope_to_word(&Slope::from_ints(p, q)).to_string();
        assert_eq!(w(1, 0), "A");
        assert_eq!(w(0, 1), "B");
        assert_eq!(w(1, 1), "AB");
        assert_eq!(w(2, 1), "AAB");
        assert_eq!(w(1, 2), "ABB");
        assert_eq!(w(-1, 1), "Ba");
        for (p, q) in [(3, 5), (-7, 4), (13, 8)] {
            assert_eq!(slope_to_word(&Slope::from_ints(p, q)).homology(), (p, q));
        }
    }

    #[test]
    fn realizes_integer_triples() {
        for t in [[3.0, 3.0, 3.0], [3.0, 3.0, 6.0]] {
            let t = t.map(|v| c(v, 0.0));
            let (a, b) = triple_to_matrices(&t).unwrap();
            assert!(close(&a.trace(), t[0].to_f64().0, 0.0, 1e-12));
            assert!(close(&b.trace(), t[1].to_f64().0, 0.0, 1e-12));
            assert!(close(&a.mul(&b).trace(), t[2].to_f64().0, 0.0, 1e-12));
            assert!(close(&commutator(&a, &b).trace(), -2.0, 0.0, 1e-12));
            assert!(a.det_ok() && b.det_ok());
        }
    }

    #[test]
    fn rejects_bad_triples() {
        assert!(triple_to_matrices(&[c(0.0, 0.0), c(3.0, 0.0), c(3.0, 0.0)]).is_err());
        assert!(triple_to_matrices(&[c(3.0, 0.0), c(3.0, 0.0), c(4.0, 0.0)]).is_err());
    }

    #[test]
    fn word_traces_match_recursion() {
        let t = markoff(3.0, 3.0);
        let (a, b) = triple_to_matrices(&t).unwrap();
        let tr = |p, q| trace_of_word(&slope_to_word(&Slope::from_ints(p, q)), &a, &b).unwrap();
        assert!(close(&tr(1, 1), 3.0, 0.0, 1e-30));
        // tr(AB.B) = tr(AB) tr(B) - tr(A)
        let [x, y, z] = &t;
        let want = z.mul(y).sub(x);
        assert!(tr(1, 2).sub(&want).abs_f64() < 1e-30);
    }

    #[test]
    fn flips_are_consistent() {
        let (a, b) = triple_to_matrices(&MarkoffSeed { x: (2.5, 0.4), y: (-3.0, 1.0), plus: true }.triple(256)).unwrap();
        let tr = |s: &Slope| trace_of_word(&slope_to_word(s), &a, &b).unwrap();
        // triangle (u, v, u+v) flips to (u, v, u-v)
        for (u, v) in [((1, 0), (0, 1)), ((2, 1), (1, 1)), ((3, 2), (1, 1)), ((-1, 1), (0, 1))] {
            let s = |p: i64, q: i64| Slope::from_ints(p, q);
            let (su, sv) = (s(u.0, u.1), s(v.0, v.1));
            let plus = s(u.0 + v.0, u.1 + v.1);
            let minus = s(u.0 - v.0, u.1 - v.1);
            let lhs = tr(&plus).add(&tr(&minus));
            assert!(lhs.sub(&tr(&su).mul(&tr(&sv))).abs_f64() < 1e-40, "{u:?} {v:?}");
        }
    }

    #[test]
    fn fricke_on_random_pairs() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..20 {
            let (a, b) = (random_unimodular(&mut rng, 128), random_unimodular(&mut rng, 128));
            assert!(bf_to_f64(&fricke_residual(&a, &b)) < 1e-25);
        }
    }

    #[test]
    fn length_examples() {
        let l = complex_length(&c(2.0, 0.0));
        assert_eq!(l.to_f64(), (0.0, 0.0));
        let l = complex_length(&c(0.0, 0.0)).to_f64();
        assert!(l.0.abs() < 1e-30 && (l.1 - std::f64::consts::PI).abs() < 1e-15);
        let l = complex_length(&c(3.0, 0.0)).to_f64();
        assert!((l.0 - 2.0 * 1.5f64.acosh()).abs() < 1e-14 && l.1.abs() < 1e-30);
        assert!((l.0 - 1.9248473).abs() < 1e-7);
        let l = complex_length(&c(-3.0, 0.0)).to_f64();
        // only tr^2 matters, so -3 has the same length as 3
        assert!((l.0 - 1.9248473).abs() < 1e-7 && l.1.abs() < 1e-30);
    }

    #[test]
    fn length_near_parabolic() {
        for d in [1e-8, -1e-8, 1e-5, 3e-4] {
            for base in [2.0, -2.0] {
                let tr = c(base + d, d / 3.0);
                let len = complex_length(&tr);
                assert!(!len.l.is_negative());
                let r = bf_to_f64(&length_residual(&tr, &len));
                assert!(r < 1e-40, "{base} {d} {r:e} {:?}", len.to_f64());
            }
        }
    }

    #[test]
    fn trace_gap_examples() {
        assert_eq!(bf_to_f64(&trace_gap(&c(2.0, 0.0)).unwrap()), 0.0);
        assert!((bf_to_f64(&trace_gap(&c(3.0, 0.0)).unwrap()) - 5.0).abs() < 1e-30);
        assert!((bf_to_f64(&trace_gap(&c(0.0, 2.0)).unwrap()) - 8.0).abs() < 1e-30);
    }

    #[test]
    fn oracle_agrees_on_sample_targets() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..10 {
            let seed = MarkoffSeed::random(&mut rng, 2.1, 10.0);
            let target = random_target(&mut rng, 6);
            let poly = trace_polynomial(&target, &Triangle::standard()).unwrap();
            let s = oracle_compare(&target, &poly, &seed, 1e-8).unwrap();
            assert!(s.pass, "{}", s.to_json_line());
        }
    }

    #[test]
    fn oracle_line_shape() {
        let seed = MarkoffSeed { x: (3.0, 0.0), y: (3.0, 0.0), plus: true };
        let t = Slope::from_ints(2, 1);
        let poly = trace_polynomial(&t, &Triangle::standard()).unwrap();
        let line = oracle_compare(&t, &poly, &seed, 1e-8).unwrap().to_json_line();
        let v: serde_json::Value = serde_json::from_str(&line).unwrap();
        assert_eq!(v["target"], "2/1");
        assert!(v["poly_eval"].as_str().unwrap().ends_with('i'));
        assert_eq!(v["pass"], true);
    }
}
