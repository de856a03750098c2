//! Regular continued fractions: finite, eventually periodic, or produced by
//! a named coefficient generator.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use super::slope::Slope;
use crate::error::{Error, Result};

/// Built-in infinite coefficient generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    /// Euler's number, `[2; 1, 2, 1, 1, 4, 1, 1, 6, ...]`.
    E,
    /// `[0; 1!, 2!, 3!, ...]`.
    Factorial,
}

impl Generator {
    pub fn name(self) -> &'static str {
        match self {
            Generator::E => "e",
            Generator::Factorial => "factorial",
        }
    }

    pub fn from_name(s: &str) -> Result<Generator> {
        match s {
            "e" => Ok(Generator::E),
            "factorial" => Ok(Generator::Factorial),
            _ => Err(Error::Parse(format!("unknown continued fraction generator {s:?}"))),
        }
    }

    fn term(self, k: usize, memo: &mut Vec<BigInt>) -> BigInt {
        while memo.len() <= k {
            let j = memo.len();
            let t = match self {
                Generator::E => {
                    if j == 0 {
                        BigInt::from(2)
                    } else if j % 3 == 2 {
                        BigInt::from(2 * (j / 3 + 1))
                    } else {
                        BigInt::one()
                    }
                }
                Generator::Factorial => {
                    if j == 0 {
                        BigInt::zero()
                    } else if j == 1 {
                        BigInt::one()
                    } else {
                        &memo[j - 1] * BigInt::from(j)
                    }
                }
            };
            memo.push(t);
        }
        memo[k].clone()
    }
}

#[derive(Clone, Debug)]
enum Terms {
    Finite(Vec<BigInt>),
    Periodic { preperiod: Vec<BigInt>, period: Vec<BigInt> },
    Generated { generator: Generator, memo: Arc<Mutex<Vec<BigInt>>> },
}

/// A regular continued fraction `[a0; a1, a2, ...]`. Every coefficient after
/// `a0` is a positive integer.
#[derive(Clone, Debug)]
pub struct ContinuedFraction {
    terms: Terms,
}

impl PartialEq for ContinuedFraction {
    fn eq(&self, other: &Self) -> bool {
        match (&self.terms, &other.terms) {
            (Terms::Finite(a), Terms::Finite(b)) => a == b,
            (
                Terms::Periodic { preperiod: a, period: p },
                Terms::Periodic { preperiod: b, period: q },
            ) => a == b && p == q,
            (Terms::Generated { generator: a, .. }, Terms::Generated { generator: b, .. }) => a == b,
            _ => false,
        }
    }
}

fn check_tail(terms: &[BigInt], skip_first: bool) -> Result<()> {
    for (i, t) in terms.iter().enumerate() {
        if (i > 0 || !skip_first) && !t.is_positive() {
            return Err(Error::InvalidInput(format!("continued fraction coefficient {t} is not positive")));
        }
    }
    Ok(())
}

impl ContinuedFraction {
    pub fn finite(terms: Vec<BigInt>) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::InvalidInput("empty continued fraction".into()));
        }
        check_tail(&terms, true)?;
        Ok(ContinuedFraction { terms: Terms::Finite(terms) })
    }

    /// `preperiod` includes `a0` and must be nonempty; `period` is repeated forever.
    pub fn periodic(preperiod: Vec<BigInt>, period: Vec<BigInt>) -> Result<Self> {
        if preperiod.is_empty() {
            return Err(Error::InvalidInput("preperiod must contain a0".into()));
        }
        if period.is_empty() {
            return Err(Error::InvalidInput("empty period".into()));
        }
        check_tail(&preperiod, true)?;
        check_tail(&period, false)?;
        Ok(ContinuedFraction { terms: Terms::Periodic { preperiod, period } })
    }

    pub fn generated(generator: Generator) -> Self {
        ContinuedFraction { terms: Terms::Generated { generator, memo: Arc::new(Mutex::new(Vec::new())) } }
    }

    pub fn finite_i64(terms: &[i64]) -> Result<Self> {
        ContinuedFraction::finite(terms.iter().map(|&t| BigInt::from(t)).collect())
    }

    pub fn periodic_i64(preperiod: &[i64], period: &[i64]) -> Result<Self> {
        ContinuedFraction::periodic(
            preperiod.iter().map(|&t| BigInt::from(t)).collect(),
            period.iter().map(|&t| BigInt::from(t)).collect(),
        )
    }

    /// The golden ratio `[1; 1, 1, ...]`.
    pub fn golden() -> Self {
        ContinuedFraction::periodic_i64(&[1], &[1]).expect("valid")
    }

    pub fn is_infinite(&self) -> bool {
        !matches!(self.terms, Terms::Finite(_))
    }

    /// Number of coefficients, `None` when infinite. Never empty.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> Option<usize> {
        match &self.terms {
            Terms::Finite(t) => Some(t.len()),
            _ => None,
        }
    }

    /// Coefficient `a_k`, or `None` past the end of a finite expansion.
    pub fn term(&self, k: usize) -> Option<BigInt> {
        match &self.terms {
            Terms::Finite(t) => t.get(k).cloned(),
            Terms::Periodic { preperiod, period } => Some(if k < preperiod.len() {
                preperiod[k].clone()
            } else {
                period[(k - preperiod.len()) % period.len()].clone()
            }),
            Terms::Generated { generator, memo } => {
                let mut m = memo.lock().expect("memo lock");
                Some(generator.term(k, &mut m))
            }
        }
    }

    pub fn terms(&self, n: usize) -> Result<Vec<BigInt>> {
        (0..n)
            .map(|k| {
                self.term(k).ok_or(Error::InsufficientCoefficients { available: self.len().unwrap_or(0), requested: n })
            })
            .collect()
    }

    /// Continued fraction of a rational slope, in canonical form (last
    /// coefficient at least 2 unless the expansion is a single integer).
    pub fn of_rational(s: &Slope) -> Result<Self> {
        if s.is_infinity() {
            return Err(Error::InvalidInput("1/0 has no continued fraction".into()));
        }
        let (mut p, mut q) = (s.p().clone(), s.q().clone());
        let mut out = Vec::new();
        loop {
            let (a, r) = p.div_mod_floor(&q);
            out.push(a);
            if r.is_zero() {
                break;
            }
            p = q;
            q = r;
        }
        if out.len() > 1 && out.last().map(|t| t.is_one()).unwrap_or(false) {
            out.pop();
            *out.last_mut().expect("nonempty") += 1;
        }
        ContinuedFraction::finite(out)
    }

    /// The first `k` convergents `p_0/q_0, ..., p_{k-1}/q_{k-1}`.
    pub fn convergents(&self, k: usize) -> Result<Vec<Slope>> {
        let mut out = Vec::with_capacity(k);
        let (mut p0, mut q0) = (BigInt::one(), BigInt::zero());
        let (mut p1, mut q1) = (BigInt::zero(), BigInt::one());
        for i in 0..k {
            let a = self
                .term(i)
                .ok_or(Error::InsufficientCoefficients { available: self.len().unwrap_or(0), requested: k })?;
            let p = &a * &p0 + &p1;
            let q = &a * &q0 + &q1;
            p1 = std::mem::replace(&mut p0, p.clone());
            q1 = std::mem::replace(&mut q0, q.clone());
            out.push(Slope::new(p, q)?);
        }
        Ok(out)
    }

    /// Exact value of a finite expansion.
    pub fn value(&self) -> Option<BigRational> {
        let n = self.len()?;
        let c = self.convergents(n).ok()?;
        c.last().and_then(|s| s.to_rational())
    }

    /// Compares the value of this continued fraction with a rational slope
    /// (infinity is larger than every real).
    pub fn cmp_slope(&self, r: &Slope) -> Ordering {
        if r.is_infinity() {
            return Ordering::Less;
        }
        if let Some(v) = self.value() {
            return v.cmp(&r.to_rational().expect("finite"));
        }
        // Compare term by term with the canonical expansion of r. At level k
        // both tails lie strictly inside (t_k, t_k + 1), so the first differing
        // term decides, with the order flipping at odd levels. If r's terms run
        // out first, the infinite tail of self adds a positive amount there.
        let rt = match ContinuedFraction::of_rational(r) {
            Ok(cf) => cf.terms(cf.len().unwrap_or(0)).expect("finite terms"),
            Err(_) => unreachable!("finite slope"),
        };
        let flip = |k: usize, o: Ordering| if k.is_multiple_of(2) { o } else { o.reverse() };
        for (k, b) in rt.iter().enumerate() {
            let a = self.term(k).expect("infinite");
            if &a != b {
                return flip(k, a.cmp(b));
            }
        }
        flip(rt.len() - 1, Ordering::Greater)
    }

    /// Number of leading coefficients to compare before declaring two
    /// generator-backed expansions equal.
    pub const GENERATOR_COMPARE_LIMIT: usize = 4096;

    /// Compares two values. Periodic and finite expansions are compared
    /// exactly; generator-backed ones up to [`Self::GENERATOR_COMPARE_LIMIT`]
    /// coefficients.
    pub fn cmp_value(&self, other: &ContinuedFraction) -> Ordering {
        let limit = match (&self.terms, &other.terms) {
            (Terms::Periodic { preperiod: a, period: p }, Terms::Periodic { preperiod: b, period: q }) => {
                a.len().max(b.len()) + p.len().lcm(&q.len()) + 1
            }
            _ => match (self.len(), other.len()) {
                (Some(x), Some(y)) => x.max(y) + 1,
                (Some(x), None) | (None, Some(x)) => x + 1,
                (None, None) => Self::GENERATOR_COMPARE_LIMIT,
            },
        };
        for k in 0..limit {
            let sign_flip = k % 2 == 1;
            let ord = match (self.term(k), other.term(k)) {
                (Some(a), Some(b)) => a.cmp(&b),
                // a finite expansion ending here equals a tail of +infinity
                (None, Some(_)) => Ordering::Greater,
                (Some(_), None) => Ordering::Less,
                (None, None) => return Ordering::Equal,
            };
            if ord != Ordering::Equal {
                return if sign_flip { ord.reverse() } else { ord };
            }
        }
        Ordering::Equal
    }

    /// `(a x + b) / (c x + d)` for an integer matrix with determinant +-1,
    /// computed by Gosper's homographic algorithm. Periodic inputs give
    /// periodic outputs; generator-backed inputs are not supported.
    pub fn homographic(&self, m: [BigInt; 4]) -> Result<ContinuedFraction> {
        let det = &m[0] * &m[3] - &m[1] * &m[2];
        if !det.abs().is_one() {
            return Err(Error::InvalidInput("homographic map must be unimodular".into()));
        }
        match &self.terms {
            Terms::Finite(_) => {
                let v = self.value().expect("finite");
                let num = &m[0] * v.numer() + &m[1] * v.denom();
                let den = &m[2] * v.numer() + &m[3] * v.denom();
                ContinuedFraction::of_rational(&Slope::new(num, den)?)
            }
            Terms::Generated { .. } => {
                Err(Error::InvalidInput("homographic transform of a generated expansion".into()))
            }
            Terms::Periodic { preperiod, period } => gosper_periodic(m, preperiod, period),
        }
    }

    pub fn to_json(&self) -> Value {
        match &self.terms {
            Terms::Finite(t) => Value::Array(t.iter().map(int_json).collect()),
            Terms::Periodic { preperiod, period } => json!({
                "kind": "periodic",
                "preperiod": preperiod.iter().map(int_json).collect::<Vec<_>>(),
                "period": period.iter().map(int_json).collect::<Vec<_>>(),
            }),
            Terms::Generated { generator, .. } => json!({"kind": "generator", "name": generator.name()}),
        }
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        match v {
            Value::Array(a) => ContinuedFraction::finite(a.iter().map(json_int).collect::<Result<_>>()?),
            Value::Object(o) => match o.get("kind").and_then(Value::as_str) {
                Some("periodic") => {
                    let get = |k: &str| -> Result<Vec<BigInt>> {
                        o.get(k)
                            .and_then(Value::as_array)
                            .ok_or_else(|| Error::Parse(format!("periodic continued fraction needs {k:?}")))?
                            .iter()
                            .map(json_int)
                            .collect()
                    };
                    ContinuedFraction::periodic(get("preperiod")?, get("period")?)
                }
                Some("generator") => {
                    let name = o.get("name").and_then(Value::as_str).unwrap_or_default();
                    Ok(ContinuedFraction::generated(Generator::from_name(name)?))
                }
                other => Err(Error::Parse(format!("unknown continued fraction kind {other:?}"))),
            },
            _ => Err(Error::Parse("continued fraction must be an array or object".into())),
        }
    }
}

/// `golden`, `e`, `factorial`, `[a0; a1, ..., an]`, or `[a0; a1, (p1, ..., pk)]`
/// with the parenthesized tail repeated forever.
impl FromStr for ContinuedFraction {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "golden" => return Ok(ContinuedFraction::golden()),
            "e" | "factorial" => return Ok(ContinuedFraction::generated(Generator::from_name(s)?)),
            _ => {}
        }
        let bad = || Error::Parse(format!("bad continued fraction {s:?}"));
        let body = s.strip_prefix('[').and_then(|b| b.strip_suffix(']')).ok_or_else(bad)?;
        let (head, tail) = match body.split_once(';') {
            Some((h, t)) => (h, t.trim()),
            None => (body, ""),
        };
        let ints = |t: &str| -> Result<Vec<BigInt>> {
            t.split(',')
                .map(str::trim)
                .filter(|x| !x.is_empty())
                .map(|x| x.parse::<BigInt>().map_err(|_| bad()))
                .collect()
        };
        let mut pre = vec![head.trim().parse::<BigInt>().map_err(|_| bad())?];
        match tail.find('(') {
            Some(i) => {
                let period = tail[i + 1..].trim_end().strip_suffix(')').ok_or_else(bad)?;
                pre.extend(ints(&tail[..i])?);
                ContinuedFraction::periodic(pre, ints(period)?)
            }
            None => {
                pre.extend(ints(tail)?);
                ContinuedFraction::finite(pre)
            }
        }
    }
}

impl fmt::Display for ContinuedFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show: Vec<BigInt> = match &self.terms {
            Terms::Finite(t) => t.clone(),
            _ => (0..8).filter_map(|k| self.term(k)).collect(),
        };
        write!(f, "[{}", show[0])?;
        for (i, t) in show.iter().enumerate().skip(1) {
            write!(f, "{}{}", if i == 1 { "; " } else { ", " }, t)?;
        }
        if self.is_infinite() {
            write!(f, ", ...")?;
        }
        write!(f, "]")
    }
}

fn int_json(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(v) => json!(v),
        None => json!(n.to_string()),
    }
}

pub(crate) fn json_int(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .ok_or_else(|| Error::Parse(format!("non-integer coefficient {n}"))),
        Value::String(s) => s.parse().map_err(|_| Error::Parse(format!("bad integer {s:?}"))),
        _ => Err(Error::Parse("coefficient must be an integer".into())),
    }
}

/// Output digit of `t -> (a t + b)/(c t + d)` valid for every `t` in the
/// open interval `(1, inf)`, if one exists.
fn emit_digit(m: &[BigInt; 4]) -> Option<BigInt> {
    let (a, b, c, d) = (&m[0], &m[1], &m[2], &m[3]);
    if c.is_zero() {
        return None;
    }
    let cd = c + d;
    if cd.is_zero() || cd.sign() != c.sign() {
        return None;
    }
    let v1 = BigRational::new(a + b, cd);
    let vinf = BigRational::new(a.clone(), c.clone());
    let (lo, hi) = if v1 < vinf { (v1, vinf) } else { (vinf, v1) };
    let fl = lo.numer().div_floor(lo.denom());
    let ce = -((-hi.numer()).div_floor(hi.denom()));
    if fl == ce - 1 {
        Some(fl)
    } else {
        None
    }
}

fn gosper_periodic(m: [BigInt; 4], preperiod: &[BigInt], period: &[BigInt]) -> Result<ContinuedFraction> {
    let mut m = m;
    let mut out: Vec<BigInt> = Vec::new();
    let mut seen: HashMap<([BigInt; 4], usize), usize> = HashMap::new();
    let total_pre = preperiod.len();
    const MAX_STEPS: usize = 100_000;
    for step in 0..MAX_STEPS {
        // consume the next input coefficient
        let a = if step < total_pre { preperiod[step].clone() } else { period[(step - total_pre) % period.len()].clone() };
        // m * [[a, 1], [1, 0]]
        m = [&m[0] * &a + &m[1], m[0].clone(), &m[2] * &a + &m[3], m[2].clone()];
        while let Some(dgt) = emit_digit(&m) {
            // [[0, 1], [1, -dgt]] * m
            m = [m[2].clone(), m[3].clone(), &m[0] - &dgt * &m[2], &m[1] - &dgt * &m[3]];
            out.push(dgt);
        }
        if step + 1 >= total_pre {
            let phase = (step + 1 - total_pre) % period.len();
            if let Some(&prev_len) = seen.get(&(m.clone(), phase)) {
                if prev_len < out.len() {
                    let pre = out[..prev_len].to_vec();
                    let per = out[prev_len..].to_vec();
                    if pre.is_empty() {
                        // keep a0 in the preperiod
                        let mut pre = vec![per[0].clone()];
                        let mut rot = per[1..].to_vec();
                        rot.push(per[0].clone());
                        pre.truncate(1);
                        return ContinuedFraction::periodic(pre, rot);
                    }
                    return ContinuedFraction::periodic(pre, per);
                }
            }
            seen.insert((m.clone(), phase), out.len());
        }
    }
    Err(Error::BudgetExceeded("homographic transform did not become periodic".into()))
}

#[cfg(test)]
mod tests {
    #[test]
    fn parses_text_forms() {
        use super::*;
        assert_eq!("[0; 3, 1]".parse::<ContinuedFraction>().unwrap(), ContinuedFraction::finite_i64(&[0, 3, 1]).unwrap());
        assert_eq!("[0; (3)]".parse::<ContinuedFraction>().unwrap(), ContinuedFraction::periodic_i64(&[0], &[3]).unwrap());
        assert_eq!("[1;2,(3, 4)]".parse::<ContinuedFraction>().unwrap(), ContinuedFraction::periodic_i64(&[1, 2], &[3, 4]).unwrap());
        assert_eq!("golden".parse::<ContinuedFraction>().unwrap(), ContinuedFraction::golden());
        assert_eq!("[5]".parse::<ContinuedFraction>().unwrap(), ContinuedFraction::finite_i64(&[5]).unwrap());
        for bad in ["0; 3", "[0; 0]", "[0; (3]", "[x]", "[0; ()]"] {
            assert!(bad.parse::<ContinuedFraction>().is_err(), "{bad}");
        }
    }

    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn of_rational_examples() {
        assert_eq!(ContinuedFraction::of_rational(&Slope::from_ints(7, 5)).unwrap().terms(3).unwrap(), ints(&[1, 2, 2]));
        assert_eq!(ContinuedFraction::of_rational(&Slope::from_ints(3, 1)).unwrap().len(), Some(1));
        assert_eq!(ContinuedFraction::of_rational(&Slope::from_ints(-1, 2)).unwrap().terms(2).unwrap(), ints(&[-1, 2]));
        assert!(ContinuedFraction::of_rational(&Slope::infinity()).is_err());
    }

    #[test]
    fn of_rational_value_roundtrip() {
        for (p, q) in [(7, 5), (-13, 8), (1, 1), (100, 37), (-5, 1)] {
            let s = Slope::from_ints(p, q);
            let cf = ContinuedFraction::of_rational(&s).unwrap();
            assert_eq!(cf.value().unwrap(), s.to_rational().unwrap());
            let n = cf.len().unwrap();
            if n > 1 {
                assert!(cf.term(n - 1).unwrap() >= BigInt::from(2));
            }
        }
    }

    #[test]
    fn convergent_examples() {
        let show = |c: Vec<Slope>| c.iter().map(|s| s.to_string()).collect::<Vec<_>>();
        let cf = ContinuedFraction::finite_i64(&[1, 1, 1, 1, 1]).unwrap();
        assert_eq!(show(cf.convergents(5).unwrap()), ["1/1", "2/1", "3/2", "5/3", "8/5"]);
        let cf = ContinuedFraction::finite_i64(&[3]).unwrap();
        assert_eq!(show(cf.convergents(1).unwrap()), ["3/1"]);
        let cf = ContinuedFraction::finite_i64(&[0, 2, 2, 2]).unwrap();
        assert_eq!(show(cf.convergents(4).unwrap()), ["0/1", "1/2", "2/5", "5/12"]);
        assert!(matches!(cf.convergents(5), Err(Error::InsufficientCoefficients { .. })));
    }

    #[test]
    fn convergents_are_neighbors_and_bracket_value() {
        let cf = ContinuedFraction::generated(Generator::E);
        let c = cf.convergents(12).unwrap();
        for w in c.windows(2) {
            assert!(w[0].is_neighbor(&w[1]));
        }
        // |e - p_k/q_k| < 1/(q_k q_{k+1})
        for k in 0..11 {
            let lo = &c[k];
            let e_approx = std::f64::consts::E;
            let pk = crate::num::rat::to_f64(&lo.to_rational().unwrap());
            let bound = 1.0 / (crate::num::rat::to_f64(&BigRational::from_integer(lo.q() * c[k + 1].q())));
            assert!((e_approx - pk).abs() < bound + 1e-15);
        }
    }

    #[test]
    fn compare_with_rationals() {
        let g = ContinuedFraction::golden();
        assert_eq!(g.cmp_slope(&Slope::from_ints(8, 5)), Ordering::Greater);
        assert_eq!(g.cmp_slope(&Slope::from_ints(5, 3)), Ordering::Less);
        assert_eq!(g.cmp_slope(&Slope::from_ints(1, 1)), Ordering::Greater);
        assert_eq!(g.cmp_slope(&Slope::from_ints(2, 1)), Ordering::Less);
        assert_eq!(g.cmp_slope(&Slope::infinity()), Ordering::Less);
        assert_eq!(g.cmp_slope(&Slope::from_ints(-7, 1)), Ordering::Greater);
        let e = ContinuedFraction::generated(Generator::E);
        assert_eq!(e.cmp_slope(&Slope::from_ints(27183, 10000)), Ordering::Less);
        assert_eq!(e.cmp_slope(&Slope::from_ints(27182, 10000)), Ordering::Greater);
    }

    #[test]
    fn compare_values() {
        let g = ContinuedFraction::golden();
        let s = ContinuedFraction::periodic_i64(&[1, 1], &[1]).unwrap();
        assert_eq!(g.cmp_value(&s), Ordering::Equal);
        let t = ContinuedFraction::periodic_i64(&[1, 2], &[1]).unwrap();
        // [1;2,...] < [1;1,...]
        assert_eq!(t.cmp_value(&g), Ordering::Less);
    }

    #[test]
    fn homographic_shift_of_golden() {
        // phi + 1 = [2; 1, 1, ...]
        let g = ContinuedFraction::golden();
        let h = g.homographic(ints(&[1, 1, 0, 1]).try_into().unwrap()).unwrap();
        assert_eq!(h.terms(6).unwrap(), ints(&[2, 1, 1, 1, 1, 1]));
        // 1/phi = [0; 1, 1, ...]
        let h = g.homographic(ints(&[0, 1, 1, 0]).try_into().unwrap()).unwrap();
        assert_eq!(h.terms(4).unwrap(), ints(&[0, 1, 1, 1]));
        // -phi = [-2; 2, 1, 1, ...]
        let h = g.homographic(ints(&[-1, 0, 0, 1]).try_into().unwrap()).unwrap();
        assert_eq!(h.terms(5).unwrap(), ints(&[-2, 2, 1, 1, 1]));
    }

    #[test]
    fn json_roundtrip_forms() {
        let cf = ContinuedFraction::periodic_i64(&[0], &[3]).unwrap();
        let v = cf.to_json();
        assert_eq!(v, serde_json::json!({"kind":"periodic","preperiod":[0],"period":[3]}));
        assert_eq!(ContinuedFraction::from_json(&v).unwrap(), cf);
        let f = ContinuedFraction::finite_i64(&[1, 2, 2]).unwrap();
        assert_eq!(ContinuedFraction::from_json(&f.to_json()).unwrap(), f);
        let e = ContinuedFraction::generated(Generator::E);
        assert_eq!(ContinuedFraction::from_json(&e.to_json()).unwrap(), e);
        assert!(ContinuedFraction::from_json(&serde_json::json!([1, 0])).is_err());
    }

    #[test]
    fn generator_terms() {
        let e = ContinuedFraction::generated(Generator::E);
        assert_eq!(e.terms(9).unwrap(), ints(&[2, 1, 2, 1, 1, 4, 1, 1, 6]));
        let f = ContinuedFraction::generated(Generator::Factorial);
        assert_eq!(f.terms(5).unwrap(), ints(&[0, 1, 2, 6, 24]));
    }

    #[test]
    fn slope_order_matches_deep_convergent() {
        use super::*;
        let xs = [
            ContinuedFraction::golden(),
            ContinuedFraction::periodic_i64(&[0], &[3]).unwrap(),
            ContinuedFraction::periodic_i64(&[-2, 1], &[1, 4]).unwrap(),
            "e".parse().unwrap(),
        ];
        for x in &xs {
            // error below 1/q_60^2, far under any gap to p/q with q <= 30
            let c = x.convergents(60).unwrap().pop().unwrap().to_rational().unwrap();
            for q in 1..=30i64 {
                for p in -90..=90i64 {
                    let s = Slope::from_ints(p, q);
                    assert_eq!(x.cmp_slope(&s), c.cmp(&s.to_rational().unwrap()), "{x} vs {s}");
                }
            }
        }
    }
}
