use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::num::TraceRing;

/// A coordinate of a trace triple.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Position {
    First,
    Second,
    Third,
}

impl Position {
    pub const ALL: [Position; 3] = [Position::First, Position::Second, Position::Third];

    pub fn index(self) -> usize {
        match self {
            Position::First => 0,
            Position::Second => 1,
            Position::Third => 2,
        }
    }

    pub fn from_index(i: usize) -> Result<Position> {
        Position::ALL.get(i).copied().ok_or_else(|| Error::InvalidInput(format!("no triple position {i}")))
    }
}

/// A trace triple `(x, y, z)` over any trace ring.
pub type Triple<R> = [R; 3];

/// `x^2 + y^2 + z^2 - xyz`.
pub fn markoff_defect<R: TraceRing>(t: &Triple<R>) -> R {
    let [x, y, z] = t;
    let sq = x.mul(x).add(&y.mul(y)).add(&z.mul(z));
    sq.sub(&x.mul(y).mul(z))
}

/// Replaces the chosen coordinate `c` by `(product of the other two) - c`.
pub fn flip<R: TraceRing>(t: &Triple<R>, pos: Position) -> Triple<R> {
    let i = pos.index();
    let (a, b) = (&t[(i + 1) % 3], &t[(i + 2) % 3]);
    let mut out = t.clone();
    out[i] = a.mul(b).sub(&t[i]);
    out
}

/// A sequence of flips, written as a string over `1`, `2`, `3`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FlipPath(pub Vec<Position>);

impl FlipPath {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn apply<R: TraceRing>(&self, t: &Triple<R>) -> Triple<R> {
        self.0.iter().fold(t.clone(), |acc, p| flip(&acc, *p))
    }
}

impl fmt::Display for FlipPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in &self.0 {
            write!(f, "{}", p.index() + 1)?;
        }
        Ok(())
    }
}

impl FromStr for FlipPath {
    type Err = Error;
    fn from_str(s: &str) -> Result<FlipPath> {
        s.chars()
            .map(|c| match c {
                '1' => Ok(Position::First),
                '2' => Ok(Position::Second),
                '3' => Ok(Position::Third),
                _ => Err(Error::Parse(format!("bad flip instruction {c:?}"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(FlipPath)
    }
}

impl Serialize for FlipPath {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for FlipPath {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<FlipPath, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// Convenience for building integer triples in any ring.
pub fn int_triple<R: TraceRing>(ctx: &R, v: [i64; 3]) -> Triple<R> {
    v.map(|k| ctx.from_integer(&BigInt::from(k)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::GaussRat;
    use crate::tracecalc::TracePolynomial;

    fn g(v: [i64; 3]) -> Triple<GaussRat> {
        v.map(GaussRat::from_int)
    }

    #[test]
    fn defect_examples() {
        assert_eq!(markoff_defect(&g([3, 3, 3])), GaussRat::from_int(0));
        assert_eq!(markoff_defect(&g([0, 0, 0])), GaussRat::from_int(0));
        assert_eq!(markoff_defect(&g([2, 2, 2])), GaussRat::from_int(4));
    }

    #[test]
    fn flip_examples() {
        let t = flip(&g([3, 3, 3]), Position::Third);
        assert_eq!(t, g([3, 3, 6]));
        assert_eq!(markoff_defect(&t), GaussRat::from_int(0));
        let t0 = g([5, -2, 7]);
        for p in Position::ALL {
            assert_eq!(flip(&flip(&t0, p), p), t0);
        }
    }

    #[test]
    fn symbolic_flip_of_base_gives_b2() {
        // (a1, b1, a0) flipped at the third slot is (a1, b1, a1 b1 - a0)
        let t = [TracePolynomial::y(), TracePolynomial::z(), TracePolynomial::x()];
        let f = flip(&t, Position::Third);
        assert_eq!(f[2].to_string(), "YZ - X");
    }

    #[test]
    fn defect_is_flip_invariant_as_polynomial() {
        let t = [TracePolynomial::x(), TracePolynomial::y(), TracePolynomial::z()];
        let d = markoff_defect(&t);
        for p in Position::ALL {
            assert!((&markoff_defect(&flip(&t, p)) - &d).is_zero());
        }
    }

    #[test]
    fn path_string_roundtrip() {
        let p: FlipPath = "1323".parse().unwrap();
        assert_eq!(p.to_string(), "1323");
        assert!("14".parse::<FlipPath>().is_err());
        assert_eq!(serde_json::to_string(&p).unwrap(), "\"1323\"");
    }
}
