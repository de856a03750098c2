//! The width-sequence diagonalization: stage by stage, choose a width large
//! enough that the modeled trace-gap bound drops below the smallest
//! `|P_i^2 - 4|` over the algebraic triples of stage `i`.

use std::path::PathBuf;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::algnum::{self, gap_at_least, min_gap, verify_gap, AlgebraicNumber, AlgebraicSet, GapResult};
use crate::error::{Error, Result};
use crate::farey::{json_int, widths_to_cf, ContinuedFraction, Slope, Triangle};
use crate::num::rat::{floor, format_rational, parse_rational};
use crate::tracecalc::{trace_polynomial_with_path, TracePolynomial, DEFAULT_MONOMIAL_BUDGET};
use crate::FORMAT_VERSION;

/// Stated in every transcript and report.
pub const CONDITIONAL_NOTE: &str = "conclusions are conditional on C majorizing the true constant in the trace-gap bound |a^2 - 4| <= C / w^2";

/// `B(w) = C / w^2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundModel {
    c: BigRational,
}

impl BoundModel {
    pub fn new(c: BigRational) -> Result<Self> {
        if !c.is_positive() {
            return Err(Error::InvalidInput(format!("bound constant must be positive, got {c}")));
        }
        Ok(BoundModel { c })
    }

    pub fn c(&self) -> &BigRational {
        &self.c
    }

    pub fn bound(&self, w: &BigInt) -> BigRational {
        &self.c / BigRational::from_integer(w * w)
    }
}

impl Default for BoundModel {
    fn default() -> Self {
        BoundModel { c: BigRational::from_integer(BigInt::from(16)) }
    }
}

/// Least `w >= 1` with `C / w^2 < m`.
pub fn choose_width(m: &BigRational, model: &BoundModel) -> Result<BigInt> {
    if !m.is_positive() {
        return Err(Error::InvalidInput(format!("gap must be positive, got {m}")));
    }
    // w^2 > C/m  <=>  w > isqrt(floor(C/m))
    let k = floor(&(model.c() / m));
    Ok(k.sqrt() + 1)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WidthSchedule {
    /// Stage `i` fixes `w(indices[i-1])`; strictly increasing, from 1.
    pub indices: Vec<usize>,
    pub filler: BigInt,
    pub base: Triangle,
    pub model: BoundModel,
    pub max_stage: usize,
    /// Filler widths appended after the last stage.
    pub tail: usize,
    pub max_index: usize,
    pub monomial_budget: usize,
    pub cache_dir: Option<PathBuf>,
}

impl WidthSchedule {
    /// `n_i = i`, filler 1, `C = 16`, standard base.
    pub fn standard(max_stage: usize) -> Self {
        WidthSchedule {
            indices: (1..=max_stage).collect(),
            filler: BigInt::one(),
            base: Triangle::standard(),
            model: BoundModel::default(),
            max_stage,
            tail: 0,
            max_index: algnum::MAX_INDEX,
            monomial_budget: DEFAULT_MONOMIAL_BUDGET,
            cache_dir: None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.indices.len() < self.max_stage {
            return Err(Error::InvalidInput(format!(
                "schedule lists {} indices but {} stages were requested",
                self.indices.len(),
                self.max_stage
            )));
        }
        if self.indices.first().map(|&n| n < 1).unwrap_or(false) {
            return Err(Error::InvalidInput("schedule indices start at 1".into()));
        }
        if self.indices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidInput("schedule indices must be strictly increasing".into()));
        }
        if !self.filler.is_positive() {
            return Err(Error::InvalidInput("filler width must be positive".into()));
        }
        if self.max_stage > self.max_index {
            return Err(Error::BudgetExceeded(format!(
                "{} stages need A_{}, beyond the limit A_{}",
                self.max_stage, self.max_stage, self.max_index
            )));
        }
        Ok(())
    }

    /// The parts of the schedule that determine the transcript.
    pub fn to_json(&self) -> Value {
        json!({
            "indices": self.indices[..self.max_stage.min(self.indices.len())],
            "filler": self.filler.to_string(),
            "base": self.base.to_json(),
            "C": format_rational(self.model.c()),
            "max_stage": self.max_stage,
            "tail": self.tail,
            "monomial_budget": self.monomial_budget,
        })
    }

    /// Hex SHA-256 of the canonical schedule JSON.
    pub fn config_hash(&self) -> String {
        let text = serde_json::to_string(&self.to_json()).expect("serializable");
        Sha256::digest(text.as_bytes()).iter().map(|b| format!("{b:02x}")).collect()
    }
}

#[derive(Clone, Debug)]
pub struct Stage {
    pub stage: usize,
    /// The scheduled position `n_i`.
    pub n: usize,
    /// Index of the algebraic set `A_i`.
    pub set_index: usize,
    pub set_size: usize,
    pub pivot: Slope,
    pub poly: TracePolynomial,
    pub gap: GapResult,
    /// `argmin` as numbers (for display).
    pub argmin: [AlgebraicNumber; 3],
    pub width: BigInt,
    pub bound: BigRational,
    pub widths: Vec<BigInt>,
}

impl Stage {
    fn to_json(&self) -> Value {
        json!({
            "stage": self.stage,
            "n": self.n,
            "set_index": self.set_index,
            "set_size": self.set_size,
            "pivot": self.pivot.to_string(),
            "poly": self.poly.to_json(),
            "poly_display": self.poly.to_string(),
            "poly_terms": self.poly.num_terms(),
            "m": format_rational(&self.gap.m),
            "m_upper": format_rational(&self.gap.upper),
            "m_exact": self.gap.exact,
            "admissible": self.gap.admissible,
            "excluded": self.gap.excluded,
            "argmin_index": self.gap.argmin,
            "argmin": self.argmin.iter().map(|a| a.to_json()).collect::<Vec<_>>(),
            "width": self.width.to_string(),
            "bound": format_rational(&self.bound),
            "bound_below_m": self.bound < self.gap.m,
            "widths": self.widths.iter().map(|w| w.to_string()).collect::<Vec<_>>(),
        })
    }
}

#[derive(Clone, Debug)]
pub struct ConstructionTranscript {
    pub schedule: WidthSchedule,
    pub stages: Vec<Stage>,
    pub widths: Vec<BigInt>,
    /// Widths followed by 1 forever, as a continued fraction.
    pub nu_plus: Option<ContinuedFraction>,
    /// Open arc of the circle that contains every continuation.
    pub enclosure: Option<(Slope, Slope)>,
    /// Set when a stage hit a resource budget; earlier stages are kept.
    pub aborted: Option<String>,
}

impl ConstructionTranscript {
    pub fn to_json(&self) -> Value {
        json!({
            "format": FORMAT_VERSION,
            "config_hash": self.schedule.config_hash(),
            "schedule": self.schedule.to_json(),
            "note": CONDITIONAL_NOTE,
            "stages": self.stages.iter().map(Stage::to_json).collect::<Vec<_>>(),
            "widths": self.widths.iter().map(|w| w.to_string()).collect::<Vec<_>>(),
            "nu_plus": self.nu_plus.as_ref().map(|c| c.to_json()),
            "nu_plus_display": self.nu_plus.as_ref().map(|c| c.to_string()),
            "enclosure": self.enclosure.as_ref().map(|(a, b)| [a.to_string(), b.to_string()]),
            "aborted": self.aborted,
        })
    }

    /// Reads a transcript back. Stage gaps and widths are taken as recorded;
    /// [`replay`] re-certifies them.
    pub fn from_json(v: &Value) -> Result<Self> {
        if v.get("format").and_then(Value::as_str) != Some(FORMAT_VERSION) {
            return Err(Error::Parse(format!("transcript format must be {FORMAT_VERSION}")));
        }
        let sched = v.get("schedule").ok_or_else(|| Error::Parse("transcript needs schedule".into()))?;
        let schedule = schedule_from_json(sched)?;
        let str_field = |o: &Value, k: &str| -> Result<String> {
            o.get(k).and_then(Value::as_str).map(str::to_owned).ok_or_else(|| Error::Parse(format!("missing {k:?}")))
        };
        let usize_field = |o: &Value, k: &str| -> Result<usize> {
            o.get(k).and_then(Value::as_u64).map(|x| x as usize).ok_or_else(|| Error::Parse(format!("missing {k:?}")))
        };
        let ints = |o: &Value, k: &str| -> Result<Vec<BigInt>> {
            o.get(k)
                .and_then(Value::as_array)
                .ok_or_else(|| Error::Parse(format!("missing {k:?}")))?
                .iter()
                .map(json_int)
                .collect()
        };
        let mut stages = Vec::new();
        for s in v.get("stages").and_then(Value::as_array).ok_or_else(|| Error::Parse("missing stages".into()))? {
            let poly = TracePolynomial::from_json(s.get("poly").ok_or_else(|| Error::Parse("stage needs poly".into()))?)?;
            let argmin_index: Vec<usize> = s
                .get("argmin_index")
                .and_then(Value::as_array)
                .map(|a| a.iter().filter_map(Value::as_u64).map(|x| x as usize).collect())
                .unwrap_or_default();
            if argmin_index.len() != 3 {
                return Err(Error::Parse("argmin_index needs three entries".into()));
            }
            let argmin: Vec<AlgebraicNumber> = s
                .get("argmin")
                .and_then(Value::as_array)
                .ok_or_else(|| Error::Parse("missing argmin".into()))?
                .iter()
                .map(number_from_json)
                .collect::<Result<_>>()?;
            let argmin: [AlgebraicNumber; 3] =
                argmin.try_into().map_err(|_| Error::Parse("argmin needs three numbers".into()))?;
            let gap = GapResult {
                m: parse_rational(&str_field(s, "m")?)?,
                upper: parse_rational(&str_field(s, "m_upper")?)?,
                argmin: [argmin_index[0], argmin_index[1], argmin_index[2]],
                admissible: s.get("admissible").and_then(Value::as_u64).unwrap_or(0),
                excluded: s.get("excluded").and_then(Value::as_u64).unwrap_or(0),
                exact: s.get("m_exact").and_then(Value::as_bool).unwrap_or(false),
            };
            stages.push(Stage {
                stage: usize_field(s, "stage")?,
                n: usize_field(s, "n")?,
                set_index: usize_field(s, "set_index")?,
                set_size: usize_field(s, "set_size")?,
                pivot: str_field(s, "pivot")?.parse()?,
                poly,
                gap,
                argmin,
                width: str_field(s, "width")?.parse().map_err(|_| Error::Parse("bad width".into()))?,
                bound: parse_rational(&str_field(s, "bound")?)?,
                widths: ints(s, "widths")?,
            });
        }
        let widths = ints(v, "widths")?;
        let nu_plus = match v.get("nu_plus") {
            Some(Value::Null) | None => None,
            Some(c) => Some(ContinuedFraction::from_json(c)?),
        };
        let enclosure = match v.get("enclosure").and_then(Value::as_array) {
            Some(a) if a.len() == 2 => {
                let s = |x: &Value| -> Result<Slope> {
                    x.as_str().ok_or_else(|| Error::Parse("enclosure entries are strings".into()))?.parse()
                };
                Some((s(&a[0])?, s(&a[1])?))
            }
            _ => None,
        };
        let aborted = v.get("aborted").and_then(Value::as_str).map(str::to_owned);
        Ok(ConstructionTranscript { schedule, stages, widths, nu_plus, enclosure, aborted })
    }
}

fn number_from_json(v: &Value) -> Result<AlgebraicNumber> {
    let f = algnum::IntPoly::from_json(v.get("minpoly").ok_or_else(|| Error::Parse("number needs minpoly".into()))?)?;
    let c = v.get("center").and_then(Value::as_array).filter(|c| c.len() == 2);
    let c = c.ok_or_else(|| Error::Parse("number needs center".into()))?;
    let part = |x: &Value| -> Result<f64> {
        let r = parse_rational(x.as_str().ok_or_else(|| Error::Parse("center parts are strings".into()))?)?;
        Ok(crate::num::rat::to_f64(&r))
    };
    AlgebraicNumber::from_minpoly_near(f, (part(&c[0])?, part(&c[1])?))
}

/// Reads a schedule (the `schedule` object of a transcript, or a config).
pub fn schedule_from_json(v: &Value) -> Result<WidthSchedule> {
    let max_stage = v.get("max_stage").and_then(Value::as_u64).unwrap_or(0) as usize;
    let mut s = WidthSchedule::standard(max_stage);
    if let Some(a) = v.get("indices").and_then(Value::as_array) {
        s.indices = a
            .iter()
            .map(|x| x.as_u64().map(|n| n as usize).ok_or_else(|| Error::Parse("indices are integers".into())))
            .collect::<Result<_>>()?;
    }
    if let Some(f) = v.get("filler") {
        s.filler = json_int(f)?;
    }
    if let Some(b) = v.get("base") {
        s.base = Triangle::from_json(b)?;
    }
    if let Some(c) = v.get("C").and_then(Value::as_str) {
        s.model = BoundModel::new(parse_rational(c)?)?;
    }
    if let Some(t) = v.get("tail").and_then(Value::as_u64) {
        s.tail = t as usize;
    }
    if let Some(b) = v.get("monomial_budget").and_then(Value::as_u64) {
        s.monomial_budget = b as usize;
    }
    Ok(s)
}

/// `p` with `filler` appended until it has `len` entries.
fn pad(widths: &mut Vec<BigInt>, len: usize, filler: &BigInt) {
    while widths.len() < len {
        widths.push(filler.clone());
    }
}

/// Runs stages `1..=max_stage`. Budget overruns end the run early with the
/// completed stages kept and `aborted` set; a degenerate gap is an error.
pub fn run_construction(schedule: &WidthSchedule) -> Result<ConstructionTranscript> {
    schedule.validate()?;
    let mut widths: Vec<BigInt> = Vec::new();
    let mut stages = Vec::new();
    let mut aborted = None;
    for stage in 1..=schedule.max_stage {
        let n = schedule.indices[stage - 1];
        pad(&mut widths, n - 1, &schedule.filler);
        match run_stage(schedule, stage, n, &widths) {
            Ok(s) => {
                widths.push(s.width.clone());
                stages.push(Stage { widths: widths.clone(), ..s });
            }
            Err(Error::BudgetExceeded(msg)) => {
                aborted = Some(format!("stage {stage}: {msg}"));
                break;
            }
            Err(e) => return Err(e),
        }
    }
    if aborted.is_none() {
        let len = widths.len() + schedule.tail;
        pad(&mut widths, len, &schedule.filler);
    }
    let (nu_plus, enclosure) = match nu_plus_from_widths(&schedule.base, &widths)? {
        Some((cf, arc)) => (Some(cf), Some(arc)),
        None => (None, None),
    };
    Ok(ConstructionTranscript { schedule: schedule.clone(), stages, widths, nu_plus, enclosure, aborted })
}

/// The continued fraction of the widths followed by 1 forever, and the arc
/// between the last pivot and the mediant after it, which contains every
/// continuation of the widths. `None` for no widths.
pub fn nu_plus_from_widths(base: &Triangle, widths: &[BigInt]) -> Result<Option<(ContinuedFraction, (Slope, Slope))>> {
    if widths.is_empty() {
        return Ok(None);
    }
    let cf = widths_to_cf((&base.alpha0, &base.alpha1), widths)?;
    let pivots = base.pivots_from_widths(widths)?;
    let (a, b) = (pivots[pivots.len() - 2].vector(), pivots[pivots.len() - 1].vector());
    let next = Slope::from_vector(&(&a.0 + &b.0, &a.1 + &b.1));
    Ok(Some((cf, (pivots[pivots.len() - 1].clone(), next))))
}

fn stage_set(schedule: &WidthSchedule, i: usize) -> Result<AlgebraicSet> {
    algnum::enumerate_a_cached(i, schedule.cache_dir.as_deref(), schedule.max_index)
}

fn run_stage(schedule: &WidthSchedule, stage: usize, n: usize, widths: &[BigInt]) -> Result<Stage> {
    let pivots = schedule.base.pivots_from_widths(widths)?;
    let pivot = pivots[n].clone();
    let (poly, _) = trace_polynomial_with_path(&pivot, &schedule.base, schedule.monomial_budget)?;
    let set = stage_set(schedule, stage)?;
    let gap = min_gap(&poly, &set)?;
    let width = choose_width(&gap.m, &schedule.model)?;
    let bound = schedule.model.bound(&width);
    debug_assert!(bound < gap.m);
    let argmin = gap.argmin.map(|k| set.members[k].clone());
    Ok(Stage {
        stage,
        n,
        set_index: stage,
        set_size: set.len(),
        pivot,
        poly,
        gap,
        argmin,
        width,
        bound,
        widths: Vec::new(),
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct ContradictionReport {
    pub stage: usize,
    pub poly: TracePolynomial,
    /// `None` when `P_i = ±2` at the candidate (excluded from the minimum).
    pub gap_lower: Option<BigRational>,
    pub m: BigRational,
    pub width: BigInt,
    pub bound: BigRational,
    /// `|P_i^2 - 4| >= m_i` certified.
    pub gap_at_least_m: bool,
    /// `B(w(n_i)) < m_i`, exact.
    pub bound_below_m: bool,
}

impl ContradictionReport {
    pub fn to_json(&self) -> Value {
        json!({
            "stage": self.stage,
            "poly": self.poly.to_string(),
            "excluded_pm2": self.gap_lower.is_none(),
            "gap_lower": self.gap_lower.as_ref().map(format_rational),
            "m": format_rational(&self.m),
            "width": self.width.to_string(),
            "bound": format_rational(&self.bound),
            "gap_at_least_m": self.gap_at_least_m,
            "bound_below_m": self.bound_below_m,
            "compared": "|P^2 - 4| against m; the variant |P^2 - 2| is not used",
            "note": CONDITIONAL_NOTE,
        })
    }
}

/// Locates the first stage whose set contains the candidate traces and
/// certifies `|P_i(candidate)^2 - 4| >= m_i > B(w(n_i))`.
pub fn contradiction_check(t: &ConstructionTranscript, candidate: [&AlgebraicNumber; 3]) -> Result<ContradictionReport> {
    let need = candidate.iter().map(|a| a.min_index()).max().unwrap_or(1).max(1);
    let stage = t
        .stages
        .iter()
        .find(|s| s.set_index >= need)
        .ok_or_else(|| Error::InvalidInput(format!("candidate needs A_{need}, beyond the transcript's stages")))?;
    let r = gap_at_least(&stage.poly, candidate, &stage.gap.m)?;
    let (gap_lower, ok) = match r {
        Some((ok, g)) => (Some(g), ok),
        None => (None, true),
    };
    Ok(ContradictionReport {
        stage: stage.stage,
        poly: stage.poly.clone(),
        gap_lower,
        m: stage.gap.m.clone(),
        width: stage.width.clone(),
        bound: stage.bound.clone(),
        gap_at_least_m: ok,
        bound_below_m: stage.bound < stage.gap.m,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct StageReplay {
    pub stage: usize,
    pub triples: u64,
    pub admissible: u64,
    pub excluded: u64,
    /// Triples where `|P^2 - 4| >= m` could not be certified.
    pub failures: u64,
    pub m_positive: bool,
    pub bound_below_m: bool,
    pub width_matches: bool,
    pub poly_matches: bool,
}

impl StageReplay {
    pub fn ok(&self) -> bool {
        self.failures == 0 && self.m_positive && self.bound_below_m && self.width_matches && self.poly_matches
    }

    pub fn to_json(&self) -> Value {
        json!({
            "stage": self.stage,
            "triples": self.triples,
            "admissible": self.admissible,
            "excluded": self.excluded,
            "failures": self.failures,
            "m_positive": self.m_positive,
            "bound_below_m": self.bound_below_m,
            "width_matches": self.width_matches,
            "poly_matches": self.poly_matches,
            "ok": self.ok(),
        })
    }
}

/// Re-derives each stage's polynomial and width from the recorded widths and
/// certifies `|P_i^2 - 4| >= m_i` at every triple of `A_i^3` with `P_i != ±2`.
pub fn replay(t: &ConstructionTranscript) -> Result<Vec<StageReplay>> {
    let sched = &t.schedule;
    let mut out = Vec::new();
    for s in &t.stages {
        let prefix = &s.widths[..s.n.saturating_sub(1).min(s.widths.len())];
        let pivots = sched.base.pivots_from_widths(prefix)?;
        let poly_ok = pivots.get(s.n).map(|p| p == &s.pivot).unwrap_or(false)
            && trace_polynomial_with_path(&s.pivot, &sched.base, sched.monomial_budget)?.0 == s.poly;
        let set = stage_set(sched, s.set_index)?;
        let check = verify_gap(&s.poly, &set, &s.gap.m)?;
        let width = choose_width(&s.gap.m, &sched.model).unwrap_or_default();
        out.push(StageReplay {
            stage: s.stage,
            triples: check.triples,
            admissible: check.admissible,
            excluded: check.excluded,
            failures: check.failures,
            m_positive: s.gap.m.is_positive(),
            bound_below_m: sched.model.bound(&s.width) < s.gap.m,
            width_matches: width == s.width && s.widths.get(s.n - 1) == Some(&s.width),
            poly_matches: poly_ok,
        });
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QualityRow {
    pub exponent: u32,
    /// `(k, p_k/q_k)` of the first convergent with `|x - p/q| < q^-d` certified.
    pub witness: Option<(usize, Slope)>,
}

/// For each exponent `d`, the first convergent `p_k/q_k` (`k < depth`, `q_k >= 2`) with
/// `1 / (a_{k+1} q_k^2) <= q_k^-d`, which certifies `|x - p_k/q_k| < q_k^-d`.
/// Finite evidence only.
pub fn liouville_quality(cf: &ContinuedFraction, exponents: &[u32], depth: usize) -> Result<Vec<QualityRow>> {
    if exponents.contains(&0) {
        return Err(Error::InvalidInput("exponents must be positive".into()));
    }
    let terms = cf.terms(depth + 1)?;
    let conv = cf.convergents(depth)?;
    Ok(exponents
        .iter()
        .map(|&d| {
            let witness = (0..depth).find_map(|k| {
                let q = conv[k].q().abs();
                if q < BigInt::from(2) {
                    return None;
                }
                let a = &terms[k + 1];
                // q^d <= a q^2, i.e. q^(d-2) <= a (strict bound comes from |x - p/q| < 1/(a q^2))
                let lhs = num_traits::Pow::pow(&q, d);
                (lhs <= a * &q * &q).then(|| (k, conv[k].clone()))
            });
            QualityRow { exponent: d, witness }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::rat::rat;
    use num_traits::Zero;

    #[test]
    fn width_choice() {
        let c16 = BoundModel::new(rat(16, 1)).unwrap();
        assert_eq!(choose_width(&rat(4, 1), &c16).unwrap(), BigInt::from(3));
        let c1 = BoundModel::new(rat(1, 1)).unwrap();
        assert_eq!(choose_width(&rat(1, 1), &c1).unwrap(), BigInt::from(2));
        assert_eq!(choose_width(&rat(100, 1), &c16).unwrap(), BigInt::one());
        assert!(choose_width(&BigRational::zero(), &c16).is_err());
        assert!(BoundModel::new(rat(-1, 2)).is_err());
    }

    #[test]
    fn zero_and_one_stage() {
        let t = run_construction(&WidthSchedule { tail: 3, ..WidthSchedule::standard(0) }).unwrap();
        assert!(t.stages.is_empty());
        assert_eq!(t.widths, vec![BigInt::one(); 3]);
        let t = run_construction(&WidthSchedule::standard(1)).unwrap();
        let s = &t.stages[0];
        assert_eq!(s.poly, TracePolynomial::y());
        assert_eq!(s.gap.m, rat(4, 1));
        assert_eq!(s.width, BigInt::from(3));
        assert!(s.bound < s.gap.m);
    }

    #[test]
    fn contradiction_for_zero_triple() {
        let t = run_construction(&WidthSchedule::standard(2)).unwrap();
        let z = AlgebraicNumber::from_int(0);
        let r = contradiction_check(&t, [&z, &z, &z]).unwrap();
        assert_eq!(r.stage, 1);
        assert!(r.gap_at_least_m && r.bound_below_m);
        let far = AlgebraicNumber::from_int(7);
        assert!(contradiction_check(&t, [&far, &z, &z]).is_err());
    }

    #[test]
    fn transcript_json_roundtrip() {
        let t = run_construction(&WidthSchedule::standard(2)).unwrap();
        let back = ConstructionTranscript::from_json(&t.to_json()).unwrap();
        assert_eq!(back.to_json(), t.to_json());
    }

    #[test]
    fn liouville_rows() {
        let golden = ContinuedFraction::golden();
        let r = liouville_quality(&golden, &[1, 3], 20).unwrap();
        assert!(r[0].witness.is_some());
        assert!(r[1].witness.is_none());
        // q_2 = 10 and a_3 = 500 >= 10^2
        let cf = ContinuedFraction::periodic_i64(&[1, 3, 3, 500], &[1]).unwrap();
        let r = liouville_quality(&cf, &[4], 6).unwrap();
        assert_eq!(r[0].witness.as_ref().map(|w| w.0), Some(2));
        assert!(liouville_quality(&ContinuedFraction::finite_i64(&[1, 2]).unwrap(), &[2], 5).is_err());
    }
}
