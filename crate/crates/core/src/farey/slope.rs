use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A vertex of the Farey triangulation: a reduced fraction `p/q` with
/// `q >= 0`, or `1/0` for infinity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Slope {
    p: BigInt,
    q: BigInt,
}

impl Slope {
    /// Reduces `p/q`; the sign is carried by `p`. Fails on `0/0`.
    pub fn new(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<Slope> {
        let (mut p, mut q) = (p.into(), q.into());
        if p.is_zero() && q.is_zero() {
            return Err(Error::InvalidInput("0/0 is not a slope".into()));
        }
        if q.is_zero() {
            return Ok(Slope::infinity());
        }
        if q.is_negative() {
            p = -p;
            q = -q;
        }
        let g = p.gcd(&q);
        Ok(Slope { p: p / &g, q: q / g })
    }

    pub fn from_ints(p: i64, q: i64) -> Slope {
        Slope::new(p, q).expect("valid slope")
    }

    pub fn infinity() -> Slope {
        Slope { p: BigInt::one(), q: BigInt::zero() }
    }

    pub fn integer(n: impl Into<BigInt>) -> Slope {
        Slope { p: n.into(), q: BigInt::one() }
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }

    pub fn is_infinity(&self) -> bool {
        self.q.is_zero()
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        if self.is_infinity() {
            None
        } else {
            Some(BigRational::new(self.p.clone(), self.q.clone()))
        }
    }

    pub fn from_rational(r: &BigRational) -> Slope {
        Slope { p: r.numer().clone(), q: r.denom().clone() }
    }

    /// The primitive homology vector `(p, q)`.
    pub fn vector(&self) -> (BigInt, BigInt) {
        (self.p.clone(), self.q.clone())
    }

    /// Slope of a nonzero integer vector (sign ignored).
    pub fn from_vector(v: &(BigInt, BigInt)) -> Slope {
        Slope::new(v.0.clone(), v.1.clone()).expect("nonzero vector")
    }

    /// `|p_a q_b - q_a p_b|`.
    pub fn intersection_number(&self, other: &Slope) -> BigInt {
        (&self.p * &other.q - &self.q * &other.p).abs()
    }

    pub fn is_neighbor(&self, other: &Slope) -> bool {
        self.intersection_number(other).is_one()
    }

    pub fn mediant(&self, other: &Slope) -> Slope {
        Slope::new(&self.p + &other.p, &self.q + &other.q).expect("mediant of distinct slopes")
    }

    /// Order on the extended line with infinity as the largest element.
    pub fn line_cmp(&self, other: &Slope) -> Ordering {
        match (self.is_infinity(), other.is_infinity()) {
            (true, true) => Ordering::Equal,
            (true, false) => Ordering::Greater,
            (false, true) => Ordering::Less,
            (false, false) => (&self.p * &other.q).cmp(&(&other.p * &self.q)),
        }
    }
}

pub fn are_neighbors(a: &Slope, b: &Slope) -> bool {
    a.is_neighbor(b)
}

pub fn intersection_number(a: &Slope, b: &Slope) -> BigInt {
    a.intersection_number(b)
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

impl FromStr for Slope {
    type Err = Error;

    fn from_str(s: &str) -> Result<Slope> {
        let s = s.trim();
        if s == "inf" || s == "∞" {
            return Ok(Slope::infinity());
        }
        let (p, q) = match s.split_once('/') {
            Some((p, q)) => (p.trim(), q.trim()),
            None => (s, "1"),
        };
        let p: BigInt = p.parse().map_err(|_| Error::Parse(format!("bad slope {s:?}")))?;
        let q: BigInt = q.parse().map_err(|_| Error::Parse(format!("bad slope {s:?}")))?;
        Slope::new(p, q).map_err(|_| Error::Parse(format!("bad slope {s:?}")))
    }
}

impl Serialize for Slope {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Slope {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Slope, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
