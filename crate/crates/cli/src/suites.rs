//! Invariant suites behind `pivotlab verify`. Every suite is seeded and
//! collects parallel results in a fixed order, so reports do not depend on
//! the thread count.

use num_bigint::BigInt;
use num_rational::BigRational;
use pivotlab_core::algnum::{enumerate_a_cached, min_gap, AlgebraicNumber, MAX_INDEX};
use pivotlab_core::construct::{replay, ConstructionTranscript};
use pivotlab_core::farey::{pivot_sequence, Endpoint, Triangle, WIDTH_CF_OFFSET};
use pivotlab_core::kleinian::{
    commutator, complex_length, fricke_residual, length_residual, oracle_compare, random_target,
    random_unimodular, triple_to_matrices, MarkoffSeed,
};
use pivotlab_core::num::bigcomplex::bf_to_f64;
use pivotlab_core::num::{BigComplex, GaussRat};
use pivotlab_core::reference::{pivot_walk, recount_a};
use pivotlab_core::tracecalc::{flip, markoff_defect, trace_polynomial, Position, TracePolynomial, Triple};
use pivotlab_core::{ContinuedFraction, Slope};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

pub struct Settings {
    pub samples: usize,
    pub flips: usize,
    pub seed: u64,
    pub defect: bool,
    pub transcript: Option<ConstructionTranscript>,
}

pub struct SuiteResult {
    pub name: &'static str,
    pub checked: usize,
    pub failures: usize,
    pub detail: Value,
}

impl SuiteResult {
    pub fn pass(&self) -> bool {
        self.failures == 0
    }

    pub fn to_json(&self) -> Value {
        json!({
            "suite": self.name,
            "pass": self.pass(),
            "checked": self.checked,
            "failures": self.failures,
            "detail": self.detail,
        })
    }
}

fn rng(seed: u64, salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed.wrapping_mul(0x9e37_79b9_7f4a_7c15) ^ salt)
}

pub fn run_all(s: &Settings) -> Vec<SuiteResult> {
    let mut out = vec![
        formulas(),
        flip_invariance(s.flips, s.seed, s.defect),
        fricke(s.samples, s.seed),
        oracle(s.samples, s.seed),
        length_identity(s.samples, s.seed),
        width_cf((s.samples / 5).max(1), s.seed),
        algebraic_sets(3),
        gap_sanity(),
    ];
    if let Some(t) = &s.transcript {
        out.push(transcript_replay(t));
    }
    out
}

fn count(name: &'static str, checks: Vec<bool>, detail: Value) -> SuiteResult {
    SuiteResult { name, checked: checks.len(), failures: checks.iter().filter(|c| !**c).count(), detail }
}

pub fn formulas() -> SuiteResult {
    let (x, y, z) = (TracePolynomial::x(), TracePolynomial::y(), TracePolynomial::z());
    let b2 = &z.checked_mul(&y, 100).unwrap() - &x;
    let b3 = &(&z.checked_mul(&y, 100).unwrap().checked_mul(&y, 100).unwrap() - &x.checked_mul(&y, 100).unwrap()) - &z;
    let base = Triangle::standard();
    let cases = [("2/1", b2, 2), ("3/1", b3, 3), ("0/1", x, 1)];
    let mut rows = Vec::new();
    let checks = cases
        .iter()
        .map(|(t, want, len)| {
            let got = trace_polynomial(&t.parse().unwrap(), &base);
            let ok = got.as_ref().map(|p| p == want && p.length() == Ok(BigInt::from(*len))).unwrap_or(false);
            rows.push(json!({"target": t, "poly": got.map(|p| p.to_string()).unwrap_or_default(), "ok": ok}));
            ok
        })
        .collect();
    count("formulas", checks, json!(rows))
}

fn random_gauss(r: &mut ChaCha8Rng) -> GaussRat {
    let q = |r: &mut ChaCha8Rng| BigRational::new(r.gen_range(-60..=60).into(), r.gen_range(1..=25).into());
    GaussRat::new(q(r), q(r))
}

/// `flip`, or with `defect` a deliberately wrong rule `xy - z + 1`.
fn flip_rule<R: pivotlab_core::num::TraceRing>(t: &Triple<R>, pos: Position, defect: bool) -> Triple<R> {
    let mut out = flip(t, pos);
    if defect {
        let i = pos.index();
        out[i] = out[i].add(&out[i].from_integer(&BigInt::from(1)));
    }
    out
}

pub fn flip_invariance(flips: usize, seed: u64, defect: bool) -> SuiteResult {
    let mut r = rng(seed, 1);
    let mut checks = Vec::with_capacity(flips + 3);
    for _ in 0..flips {
        let t = [random_gauss(&mut r), random_gauss(&mut r), random_gauss(&mut r)];
        let pos = Position::from_index(r.gen_range(0..3)).unwrap();
        checks.push(markoff_defect(&flip_rule(&t, pos, defect)) == markoff_defect(&t));
    }
    let sym = [TracePolynomial::x(), TracePolynomial::y(), TracePolynomial::z()];
    let d0 = markoff_defect(&sym);
    for i in 0..3 {
        let d1 = markoff_defect(&flip_rule(&sym, Position::from_index(i).unwrap(), defect));
        checks.push((&d1 - &d0).is_zero());
    }
    count("flip-invariance", checks, json!({"random_flips": flips, "symbolic_positions": 3, "defect_injected": defect}))
}

pub fn fricke(samples: usize, seed: u64) -> SuiteResult {
    let mut r = rng(seed, 2);
    let pairs: Vec<_> = (0..samples).map(|_| (random_unimodular(&mut r, 128), random_unimodular(&mut r, 128))).collect();
    let seeds: Vec<_> = (0..samples).map(|_| MarkoffSeed::random(&mut r, 2.1, 10.0)).collect();
    let mut worst = 0f64;
    let mut checks: Vec<bool> = pairs
        .par_iter()
        .map(|(a, b)| bf_to_f64(&fricke_residual(a, b)))
        .collect::<Vec<_>>()
        .into_iter()
        .map(|e| {
            worst = worst.max(e);
            e < 1e-10
        })
        .collect();
    let mut worst_markoff = 0f64;
    for s in &seeds {
        let ok = triple_to_matrices(&s.triple(128))
            .map(|(a, b)| {
                let e = commutator(&a, &b).trace().add(&BigComplex::from_int(2, 128)).abs_f64();
                worst_markoff = worst_markoff.max(e);
                e < 1e-10
            })
            .unwrap_or(false);
        checks.push(ok);
    }
    count("fricke", checks, json!({"max_identity_error": format!("{worst:.3e}"), "max_commutator_error": format!("{worst_markoff:.3e}")}))
}

pub fn oracle(samples: usize, seed: u64) -> SuiteResult {
    let mut r = rng(seed, 3);
    let jobs: Vec<(MarkoffSeed, Slope)> =
        (0..samples).map(|_| (MarkoffSeed::random(&mut r, 2.1, 10.0), random_target(&mut r, 10))).collect();
    let base = Triangle::standard();
    let results: Vec<(bool, usize)> = jobs
        .par_iter()
        .map(|(s, t)| {
            trace_polynomial(t, &base)
                .and_then(|p| oracle_compare(t, &p, s, 1e-8))
                .map(|o| (o.pass, o.prec))
                .unwrap_or((false, 0))
        })
        .collect();
    let max_prec = results.iter().map(|r| r.1).max().unwrap_or(0);
    count("oracle", results.iter().map(|r| r.0).collect(), json!({"tolerance": "1e-8", "max_depth": 10, "max_precision_bits": max_prec}))
}

/// Traces on a grid: generic points, and `±2 + d` with `|d|` from `1e-3`
/// down to `1e-8` in varying directions.
pub fn trace_grid(n: usize, seed: u64) -> Vec<BigComplex> {
    let mut r = rng(seed, 4);
    let mut out = Vec::with_capacity(n + 2);
    for k in 0..n {
        if k % 2 == 0 {
            out.push(BigComplex::from_f64(r.gen_range(-6.0..6.0), r.gen_range(-6.0..6.0), 128));
        } else {
            let mag = 10f64.powf(-3.0 - 5.0 * r.gen::<f64>());
            let phi: f64 = r.gen_range(-std::f64::consts::PI..std::f64::consts::PI);
            let base = if r.gen_bool(0.5) { 2.0 } else { -2.0 };
            out.push(BigComplex::from_f64(base + mag * phi.cos(), mag * phi.sin(), 128));
        }
    }
    out
}

pub fn length_identity(samples: usize, seed: u64) -> SuiteResult {
    let grid = trace_grid(samples, seed);
    let errs: Vec<f64> = grid.par_iter().map(|t| bf_to_f64(&length_residual(t, &complex_length(t)))).collect();
    let worst = errs.iter().cloned().fold(0f64, f64::max);
    let mut checks: Vec<bool> = errs.iter().map(|e| *e < 1e-12).collect();
    let at = |re: f64| complex_length(&BigComplex::from_f64(re, 0.0, 128)).to_f64();
    let (two, zero) = (at(2.0), at(0.0));
    checks.push(two == (0.0, 0.0));
    checks.push(zero.0 == 0.0 && zero.1 == std::f64::consts::PI);
    count("length-identity", checks, json!({"max_error": format!("{worst:.3e}"), "length_at_2": [two.0, two.1], "length_at_0": [zero.0, zero.1]}))
}

pub fn random_periodic(r: &mut ChaCha8Rng) -> ContinuedFraction {
    let a0 = r.gen_range(1..=4);
    let mut pre = vec![a0];
    pre.extend((0..r.gen_range(0..3)).map(|_| r.gen_range(1..=6)));
    let period: Vec<i64> = (0..r.gen_range(1..=3)).map(|_| r.gen_range(1..=6)).collect();
    ContinuedFraction::periodic_i64(&pre, &period).expect("positive terms")
}

/// Widths from `0/1` towards a periodic value above 1 against its
/// coefficients and against the brute-force triangle walk.
pub fn width_cf(samples: usize, seed: u64) -> SuiteResult {
    let mut r = rng(seed, 5);
    let cfs: Vec<ContinuedFraction> = (0..samples).map(|_| random_periodic(&mut r)).collect();
    let depth = 10;
    let checks: Vec<bool> = cfs
        .par_iter()
        .map(|cf| {
            let am = Endpoint::Rational(Slope::from_ints(0, 1));
            let (Ok(seq), Ok(walk), Ok(terms)) = (pivot_sequence(&am, cf, depth), pivot_walk(&am, cf, depth), cf.terms(depth))
            else {
                return false;
            };
            let by_cf = seq.widths().iter().enumerate().all(|(k, w)| {
                let n = k as i64 + 1;
                terms.get((n + WIDTH_CF_OFFSET) as usize) == Some(w)
            });
            let Some(start) = walk.iter().position(|(s, _)| s == &seq.alpha0) else { return false };
            let by_walk =
                seq.pivots.iter().enumerate().all(|(k, p)| walk.get(start + 1 + k) == Some(&(p.slope.clone(), p.width.clone())));
            by_cf && by_walk
        })
        .collect();
    count("width-cf", checks, json!({"depth": depth, "offset": WIDTH_CF_OFFSET}))
}

pub fn algebraic_sets(max_recount: usize) -> SuiteResult {
    let mut checks = Vec::new();
    let mut sizes = Vec::new();
    let exact = |i: usize| -> Vec<GaussRat> {
        enumerate_a_cached(i, None, MAX_INDEX).map(|s| s.members.iter().filter_map(|a| a.exact_value()).collect()).unwrap_or_default()
    };
    checks.push(exact(1) == vec![GaussRat::zero()]);
    let mut a2: Vec<String> = exact(2).iter().map(|g| g.to_string()).collect();
    a2.sort();
    let mut want: Vec<String> =
        ["0", "1", "-1", "i", "-i"].iter().map(|s| AlgebraicNumber::parse(s).unwrap().exact_value().unwrap().to_string()).collect();
    want.sort();
    checks.push(a2 == want);
    for i in 1..=max_recount {
        let n = enumerate_a_cached(i, None, MAX_INDEX).map(|s| s.len()).unwrap_or(0);
        let m = recount_a(i);
        checks.push(n == m);
        sizes.push(json!({"i": i, "enumerated": n, "recounted": m}));
    }
    count("algebraic-sets", checks, json!(sizes))
}

pub fn gap_sanity() -> SuiteResult {
    let set = enumerate_a_cached(2, None, MAX_INDEX).expect("A_2");
    let r = min_gap(&TracePolynomial::x(), &set);
    let ok = r.as_ref().map(|g| g.m >= BigRational::new(297.into(), 100.into()) && g.m <= BigRational::from_integer(3.into()));
    count(
        "gap",
        vec![ok.unwrap_or(false)],
        json!({"poly": "X", "set": 2, "m": r.map(|g| format!("{}/{}", g.m.numer(), g.m.denom())).unwrap_or_default()}),
    )
}

pub fn transcript_replay(t: &ConstructionTranscript) -> SuiteResult {
    match replay(t) {
        Ok(stages) => {
            let checks = stages.iter().map(|s| s.ok()).collect();
            count("replay", checks, json!(stages.iter().map(|s| s.to_json()).collect::<Vec<_>>()))
        }
        Err(e) => count("replay", vec![false], json!({"error": e.to_string()})),
    }
}
