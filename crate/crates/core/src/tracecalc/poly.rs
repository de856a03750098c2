use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::num::TraceRing;

/// Exponents of `(X, Y, Z)`.
pub type Monomial = (u32, u32, u32);

/// A polynomial in `Z[X, Y, Z]` with `X, Y, Z` standing for the traces
/// `a_0, a_1, b_1` of the base triangle. Stored sparsely with no zero terms.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct TracePolynomial {
    terms: BTreeMap<Monomial, BigInt>,
}

impl TracePolynomial {
    pub fn zero() -> Self {
        TracePolynomial::default()
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        TracePolynomial::monomial((0, 0, 0), c)
    }

    pub fn monomial(m: Monomial, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        TracePolynomial { terms }
    }

    pub fn x() -> Self {
        TracePolynomial::monomial((1, 0, 0), 1)
    }

    pub fn y() -> Self {
        TracePolynomial::monomial((0, 1, 0), 1)
    }

    pub fn z() -> Self {
        TracePolynomial::monomial((0, 0, 1), 1)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: Monomial) -> BigInt {
        self.terms.get(&m).cloned().unwrap_or_default()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|(a, b, c)| a + b + c).max().unwrap_or(0)
    }

    /// Sum of absolute values of the coefficients.
    pub fn length(&self) -> Result<BigInt> {
        if self.is_zero() {
            return Err(Error::InvalidInput("length of the zero polynomial".into()));
        }
        Ok(self.terms.values().map(|c| c.abs()).sum())
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                if !c.is_zero() {
                    v.insert(c);
                }
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Product, failing when the result would exceed `max_terms` monomials.
    pub fn checked_mul(&self, o: &Self, max_terms: usize) -> Result<Self> {
        let mut out = TracePolynomial::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                out.add_term((ma.0 + mb.0, ma.1 + mb.1, ma.2 + mb.2), ca * cb);
            }
            if out.terms.len() > max_terms {
                break;
            }
        }
        if out.terms.len() > max_terms {
            return Err(Error::BudgetExceeded(format!("trace polynomial exceeds {max_terms} monomials")));
        }
        Ok(out)
    }

    pub fn eval<R: TraceRing>(&self, x: &R, y: &R, z: &R) -> R {
        // Horner-free power tables; degrees here are modest
        let deg = |f: fn(&Monomial) -> u32| self.terms.keys().map(f).max().unwrap_or(0) as usize;
        let powers = |v: &R, n: usize| {
            let mut p = vec![v.from_integer(&BigInt::one())];
            for k in 1..=n {
                let next = p[k - 1].mul(v);
                p.push(next);
            }
            p
        };
        let (px, py, pz) = (powers(x, deg(|m| m.0)), powers(y, deg(|m| m.1)), powers(z, deg(|m| m.2)));
        let mut acc = x.from_integer(&BigInt::zero());
        for ((a, b, c), coeff) in &self.terms {
            let t = px[*a as usize].mul(&py[*b as usize]).mul(&pz[*c as usize]);
            acc = acc.add(&t.mul(&x.from_integer(coeff)));
        }
        acc
    }

    /// `[[ex, ey, ez, "coeff"], ...]` in monomial order.
    pub fn to_json(&self) -> Value {
        Value::Array(self.terms.iter().map(|((a, b, c), k)| json!([a, b, c, k.to_string()])).collect())
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let arr = v.as_array().ok_or_else(|| Error::Parse("polynomial must be an array".into()))?;
        let mut p = TracePolynomial::zero();
        for t in arr {
            let t = t.as_array().filter(|t| t.len() == 4).ok_or_else(|| Error::Parse("term must be [ex,ey,ez,coeff]".into()))?;
            let e = |i: usize| -> Result<u32> {
                t[i].as_u64().and_then(|v| u32::try_from(v).ok()).ok_or_else(|| Error::Parse("bad exponent".into()))
            };
            let c = crate::farey::json_int(&t[3])?;
            p.add_term((e(0)?, e(1)?, e(2)?), c);
        }
        Ok(p)
    }
}

impl fmt::Display for TracePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // highest total degree first
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| (b.0 + b.1 + b.2).cmp(&(a.0 + a.1 + a.2)).then(b.cmp(a)));
        for (i, ((ex, ey, ez), c)) in terms.into_iter().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let mag = c.abs();
            let constant = *ex == 0 && *ey == 0 && *ez == 0;
            if !mag.is_one() || constant {
                write!(f, "{mag}")?;
            }
            for (v, e) in [('X', ex), ('Y', ey), ('Z', ez)] {
                match e {
                    0 => {}
                    1 => write!(f, "{v}")?,
                    _ => write!(f, "{v}^{e}")?,
                }
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a TracePolynomial> for &'a TracePolynomial {
    type Output = TracePolynomial;
    fn add(self, o: &TracePolynomial) -> TracePolynomial {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a TracePolynomial> for &'a TracePolynomial {
    type Output = TracePolynomial;
    fn sub(self, o: &TracePolynomial) -> TracePolynomial {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(*m, -c);
        }
        out
    }
}

impl<'a> Mul<&'a TracePolynomial> for &'a TracePolynomial {
    type Output = TracePolynomial;
    fn mul(self, o: &TracePolynomial) -> TracePolynomial {
        self.checked_mul(o, usize::MAX).expect("unbounded")
    }
}

impl Neg for &TracePolynomial {
    type Output = TracePolynomial;
    fn neg(self) -> TracePolynomial {
        TracePolynomial { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
}

impl TraceRing for TracePolynomial {
    fn from_integer(&self, n: &BigInt) -> Self {
        TracePolynomial::constant(n.clone())
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
}
