//! Bounded-complexity algebraic numbers: the sets `A_i` of complex numbers
//! whose minimal polynomial has degree and length at most `i`, with
//! certified isolating discs and certified evaluation of trace polynomials.

mod certify;
mod intpoly;
mod roots;

pub use certify::{
    certified_eval, certify_not_pm2, gap_at_least, gap_lower_bound, verify_gap, GapCheck, liouville_lower_bound, min_gap, value_ball, GapResult,
    Pm2Verdict, MAX_LEVEL,
};
pub use intpoly::{bounded_polynomials, IntPoly};
pub use roots::{disc_contains, Disc};

use std::fmt;
use std::path::{Path, PathBuf};
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::num::rat::{format_rational, parse_rational, to_f64};
use crate::num::{ComplexBall, GaussRat};
use crate::FORMAT_VERSION;

/// Largest `i` accepted by [`enumerate_a`] by default.
pub const MAX_INDEX: usize = 6;

/// Environment variable naming the directory for cached `A_i` sets.
pub const CACHE_ENV: &str = "PIVOTLAB_CACHE";

/// Fractional bits of the isolating disc at refinement level `k`.
pub fn level_bits(level: usize) -> u64 {
    roots::BASE_BITS << level
}

/// A root of an irreducible integer polynomial, pinned down by a disc that
/// contains no other root. Refinements are memoized per level and shared
/// between clones; every level's disc lies inside the previous one.
#[derive(Clone)]
pub struct AlgebraicNumber {
    minpoly: IntPoly,
    levels: Arc<RwLock<Vec<Disc>>>,
}

impl fmt::Debug for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (re, im) = self.approx();
        write!(f, "AlgebraicNumber({} ~ {re:.6}{im:+.6}i)", self.minpoly)
    }
}

impl fmt::Display for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.exact_value() {
            Some(z) => write!(f, "{z}"),
            None => {
                let (re, im) = self.approx();
                write!(f, "root of {} near {re:.6}{im:+.6}i", self.minpoly)
            }
        }
    }
}

impl AlgebraicNumber {
    fn from_disc(minpoly: IntPoly, disc: Disc) -> Self {
        AlgebraicNumber { minpoly, levels: Arc::new(RwLock::new(vec![disc])) }
    }

    fn check_minpoly(f: &IntPoly) -> Result<()> {
        if f.degree() == 0 || !f.leading().is_positive() || !f.is_primitive() || !f.is_irreducible() {
            return Err(Error::InvalidInput(format!(
                "{f} is not a primitive irreducible polynomial with positive leading coefficient"
            )));
        }
        Ok(())
    }

    pub fn from_rational(r: &BigRational) -> Self {
        let f = IntPoly::new(vec![-r.numer(), r.denom().clone()]);
        AlgebraicNumber::from_disc(f, (GaussRat::real(r.clone()), BigRational::zero()))
    }

    pub fn from_int(n: i64) -> Self {
        AlgebraicNumber::from_rational(&BigRational::from_integer(BigInt::from(n)))
    }

    /// The root of `minpoly` closest to `near`.
    pub fn from_minpoly_near(minpoly: IntPoly, near: (f64, f64)) -> Result<Self> {
        AlgebraicNumber::check_minpoly(&minpoly)?;
        let discs = roots::isolate(&minpoly)?;
        let dist = |d: &Disc| {
            let (x, y) = (to_f64(&d.0.re) - near.0, to_f64(&d.0.im) - near.1);
            x * x + y * y
        };
        let best = discs
            .into_iter()
            .min_by(|a, b| dist(a).partial_cmp(&dist(b)).unwrap_or(std::cmp::Ordering::Equal))
            .expect("at least one root");
        Ok(AlgebraicNumber::from_disc(minpoly, best))
    }

    /// Parses `"p/q"`, `"n"`, `"i"`, `"-i"`, or `"root:c0,c1,...@re,im"`
    /// (coefficients low to high, approximate location).
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "i" => return AlgebraicNumber::from_minpoly_near(IntPoly::from_i64(&[1, 0, 1]), (0.0, 1.0)),
            "-i" => return AlgebraicNumber::from_minpoly_near(IntPoly::from_i64(&[1, 0, 1]), (0.0, -1.0)),
            _ => {}
        }
        if let Some(rest) = s.strip_prefix("root:") {
            let (coeffs, at) = rest.split_once('@').ok_or_else(|| Error::Parse(format!("missing '@' in {s:?}")))?;
            let c = coeffs
                .split(',')
                .map(|t| t.trim().parse::<BigInt>().map_err(|_| Error::Parse(format!("bad coefficient {t:?}"))))
                .collect::<Result<Vec<_>>>()?;
            let (re, im) = at.split_once(',').ok_or_else(|| Error::Parse(format!("bad location in {s:?}")))?;
            let re: f64 = re.trim().parse().map_err(|_| Error::Parse(format!("bad location in {s:?}")))?;
            let im: f64 = im.trim().parse().map_err(|_| Error::Parse(format!("bad location in {s:?}")))?;
            return AlgebraicNumber::from_minpoly_near(IntPoly::new(c), (re, im));
        }
        Ok(AlgebraicNumber::from_rational(&parse_rational(s)?))
    }

    pub fn minpoly(&self) -> &IntPoly {
        &self.minpoly
    }

    pub fn degree(&self) -> usize {
        self.minpoly.degree()
    }

    pub fn length(&self) -> BigInt {
        self.minpoly.length()
    }

    /// Smallest `i` with this number in `A_i`.
    pub fn min_index(&self) -> usize {
        let l: usize = self.length().try_into().unwrap_or(usize::MAX);
        l.max(self.degree())
    }

    pub fn is_exact(&self) -> bool {
        self.disc(0).1.is_zero()
    }

    /// The value itself when it is a Gaussian rational.
    pub fn exact_value(&self) -> Option<GaussRat> {
        let d = self.disc(0);
        d.1.is_zero().then_some(d.0)
    }

    /// Isolating disc at refinement level `level` (about `64 * 2^level` bits).
    pub fn disc(&self, level: usize) -> Disc {
        {
            let l = self.levels.read().expect("refinement lock");
            if let Some(d) = l.get(level) {
                return d.clone();
            }
        }
        let mut l = self.levels.write().expect("refinement lock");
        while l.len() <= level {
            let k = l.len();
            let prev = l[k - 1].clone();
            let next = roots::refine(&self.minpoly, &prev, level_bits(k)).unwrap_or(prev);
            l.push(next);
        }
        l[level].clone()
    }

    /// The level-`level` disc as a ball on the `prec`-bit grid.
    pub fn ball(&self, level: usize, prec: u32) -> ComplexBall {
        let (c, r) = self.disc(level);
        ComplexBall::from_center_radius(&c, &r, prec)
    }

    pub fn approx(&self) -> (f64, f64) {
        let (c, _) = self.disc(0);
        (to_f64(&c.re), to_f64(&c.im))
    }

    /// Same minimal polynomial and the same root (certified by nesting of
    /// refined discs).
    pub fn same_number(&self, other: &AlgebraicNumber) -> bool {
        if self.minpoly != other.minpoly {
            return false;
        }
        let (a, b) = (self.disc(0), other.disc(0));
        if a == b {
            return true;
        }
        for level in 0..=6 {
            if disc_contains(&a, &other.disc(level)) || disc_contains(&b, &self.disc(level)) {
                return true;
            }
        }
        false
    }

    pub fn to_json(&self) -> Value {
        let (c, r) = self.disc(0);
        json!({
            "minpoly": self.minpoly.to_json(),
            "center": c.to_strings(),
            "radius": format_rational(&r),
        })
    }

    /// Reads a member without checking isolation; see [`AlgebraicSet::from_json`].
    fn from_json_unchecked(v: &Value) -> Result<Self> {
        let f = IntPoly::from_json(v.get("minpoly").ok_or_else(|| Error::Parse("member needs minpoly".into()))?)?;
        let c = v.get("center").and_then(Value::as_array).filter(|c| c.len() == 2);
        let c = c.ok_or_else(|| Error::Parse("member needs center [re, im]".into()))?;
        let s = |x: &Value| x.as_str().map(str::to_owned).ok_or_else(|| Error::Parse("center parts must be strings".into()));
        let center = GaussRat::from_strings(&s(&c[0])?, &s(&c[1])?)?;
        let radius = parse_rational(v.get("radius").and_then(Value::as_str).unwrap_or("bad"))?;
        Ok(AlgebraicNumber::from_disc(f, (center, radius)))
    }
}

/// The finite set `A_i`.
#[derive(Clone, Debug)]
pub struct AlgebraicSet {
    pub index: usize,
    pub members: Vec<AlgebraicNumber>,
}

impl AlgebraicSet {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn position(&self, a: &AlgebraicNumber) -> Option<usize> {
        if a.min_index() > self.index {
            return None;
        }
        self.members.iter().position(|m| m.same_number(a))
    }

    pub fn contains(&self, a: &AlgebraicNumber) -> bool {
        self.position(a).is_some()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "format": FORMAT_VERSION,
            "i": self.index,
            "members": self.members.iter().map(|m| m.to_json()).collect::<Vec<_>>(),
        })
    }

    /// Reads a stored set and re-verifies it: the minimal polynomials must be
    /// exactly those of `A_i`, and each must carry `degree` pairwise disjoint
    /// discs that each contain a root.
    pub fn from_json(v: &Value) -> Result<Self> {
        let index = v.get("i").and_then(Value::as_u64).ok_or_else(|| Error::Parse("set needs \"i\"".into()))? as usize;
        let members = v
            .get("members")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("set needs \"members\"".into()))?
            .iter()
            .map(AlgebraicNumber::from_json_unchecked)
            .collect::<Result<Vec<_>>>()?;
        let set = AlgebraicSet { index, members };
        set.verify()?;
        Ok(set)
    }

    fn verify(&self) -> Result<()> {
        let polys = minimal_polynomials(self.index);
        let mut k = 0;
        for f in &polys {
            let d = f.degree();
            let group = self.members.get(k..k + d).ok_or_else(|| Error::Certification("set is incomplete".into()))?;
            let df = f.derivative();
            for (j, m) in group.iter().enumerate() {
                if &m.minpoly != f {
                    return Err(Error::Certification(format!("expected a root of {f}, found {}", m.minpoly)));
                }
                let (c, r) = m.disc(0);
                let incl = roots::inclusion_radius(f, &df, &c, level_bits(0) * 4)
                    .ok_or_else(|| Error::Certification("degenerate disc".into()))?;
                if incl > r {
                    return Err(Error::Certification(format!("disc for {f} does not certify a root")));
                }
                for other in &group[j + 1..] {
                    if !roots::discs_disjoint(&(c.clone(), r.clone()), &other.disc(0)) {
                        return Err(Error::Certification(format!("discs for {f} overlap")));
                    }
                }
            }
            k += d;
        }
        if k != self.members.len() {
            return Err(Error::Certification("set has extra members".into()));
        }
        Ok(())
    }
}

/// Minimal polynomials of `A_i`, in enumeration order (degree, then
/// coefficients from the leading one down).
pub fn minimal_polynomials(i: usize) -> Vec<IntPoly> {
    bounded_polynomials(i, i as i64).into_iter().filter(|f| f.is_irreducible()).collect()
}

fn enumerate_fresh(i: usize) -> Result<AlgebraicSet> {
    let polys = minimal_polynomials(i);
    let groups: Vec<Vec<AlgebraicNumber>> = polys
        .into_par_iter()
        .map(|f| {
            let discs = roots::isolate(&f)?;
            Ok(discs.into_iter().map(|d| AlgebraicNumber::from_disc(f.clone(), d)).collect())
        })
        .collect::<Result<_>>()?;
    Ok(AlgebraicSet { index: i, members: groups.into_iter().flatten().collect() })
}

fn check_index(i: usize, max_index: usize) -> Result<()> {
    if i == 0 {
        return Err(Error::InvalidInput("A_0 is empty: no polynomial has length 0".into()));
    }
    if i > max_index {
        return Err(Error::BudgetExceeded(format!("A_{i} exceeds the configured limit A_{max_index}")));
    }
    Ok(())
}

/// `A_i`, using the cache directory from `PIVOTLAB_CACHE` when set.
pub fn enumerate_a(i: usize) -> Result<AlgebraicSet> {
    let dir = std::env::var_os(CACHE_ENV).map(PathBuf::from);
    enumerate_a_cached(i, dir.as_deref(), MAX_INDEX)
}

/// Cache file for `A_i` in `dir`; the name hashes the format version.
pub fn cache_file(dir: &Path, i: usize) -> PathBuf {
    let mut h = Sha256::new();
    h.update(FORMAT_VERSION.as_bytes());
    h.update(format!("|algset|{i}").as_bytes());
    let hex: String = h.finalize().iter().take(8).map(|b| format!("{b:02x}")).collect();
    dir.join(format!("algset-{i}-{hex}.json"))
}

pub fn enumerate_a_cached(i: usize, cache_dir: Option<&Path>, max_index: usize) -> Result<AlgebraicSet> {
    check_index(i, max_index)?;
    let Some(dir) = cache_dir else {
        return enumerate_fresh(i);
    };
    let path = cache_file(dir, i);
    if let Ok(text) = std::fs::read_to_string(&path) {
        let loaded = serde_json::from_str::<Value>(&text).map_err(Error::from).and_then(|v| {
            if v.get("format").and_then(Value::as_str) != Some(FORMAT_VERSION) {
                return Err(Error::Parse("cache format mismatch".into()));
            }
            AlgebraicSet::from_json(&v)
        });
        if let Ok(set) = loaded {
            if set.index == i {
                return Ok(set);
            }
        }
    }
    let set = enumerate_fresh(i)?;
    std::fs::create_dir_all(dir)?;
    let tmp = path.with_extension(format!("tmp{}", std::process::id()));
    std::fs::write(&tmp, serde_json::to_string(&set.to_json())?)?;
    std::fs::rename(&tmp, &path)?;
    Ok(set)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::rat::rat;

    #[test]
    fn first_two_sets() {
        assert!(enumerate_a(0).is_err());
        let a1 = enumerate_a_cached(1, None, MAX_INDEX).unwrap();
        assert_eq!(a1.len(), 1);
        assert_eq!(a1.members[0].exact_value(), Some(GaussRat::zero()));
        let a2 = enumerate_a_cached(2, None, MAX_INDEX).unwrap();
        let mut vals: Vec<String> = a2.members.iter().map(|m| m.exact_value().unwrap().to_string()).collect();
        vals.sort();
        let mut expect: Vec<String> = [
            GaussRat::from_int(0),
            GaussRat::from_int(1),
            GaussRat::from_int(-1),
            GaussRat::i(),
            GaussRat::new(rat(0, 1), rat(-1, 1)),
        ]
        .iter()
        .map(|z| z.to_string())
        .collect();
        expect.sort();
        assert_eq!(vals, expect);
    }

    #[test]
    fn two_first_appears_in_a3() {
        let two = AlgebraicNumber::from_int(2);
        assert_eq!(two.min_index(), 3);
        assert!(!enumerate_a_cached(2, None, MAX_INDEX).unwrap().contains(&two));
        assert!(enumerate_a_cached(3, None, MAX_INDEX).unwrap().contains(&two));
    }

    #[test]
    fn parse_forms() {
        assert_eq!(AlgebraicNumber::parse("-3/6").unwrap().exact_value(), Some(GaussRat::real(rat(-1, 2))));
        assert_eq!(AlgebraicNumber::parse("i").unwrap().exact_value(), Some(GaussRat::i()));
        let phi = AlgebraicNumber::parse("root:-1,-1,1@1.6,0").unwrap();
        assert!((phi.approx().0 - 1.618_033_988_749_895).abs() < 1e-12);
        assert!(AlgebraicNumber::parse("root:-1,0,1@1,0").is_err());
    }

    #[test]
    fn refinement_is_nested_and_shared() {
        let phi = AlgebraicNumber::parse("root:-1,-1,1@1.6,0").unwrap();
        let copy = phi.clone();
        let d3 = phi.disc(3);
        assert_eq!(copy.disc(3), d3);
        for k in 1..=3 {
            assert!(disc_contains(&phi.disc(k - 1), &phi.disc(k)));
        }
    }

    #[test]
    fn cache_roundtrip_and_tamper_detection() {
        let dir = tempfile::tempdir().unwrap();
        let a = enumerate_a_cached(3, Some(dir.path()), MAX_INDEX).unwrap();
        let b = enumerate_a_cached(3, Some(dir.path()), MAX_INDEX).unwrap();
        assert_eq!(a.to_json(), b.to_json());
        let mut v = a.to_json();
        v["members"].as_array_mut().unwrap().pop();
        assert!(AlgebraicSet::from_json(&v).is_err());
        let mut v = a.to_json();
        v["members"][10]["radius"] = json!("0/1");
        if !a.members[10].is_exact() {
            assert!(AlgebraicSet::from_json(&v).is_err());
        }
    }
}
