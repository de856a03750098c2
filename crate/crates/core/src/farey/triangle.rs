use num_bigint::BigInt;
use num_traits::Signed;
use serde_json::{json, Value};

use super::slope::Slope;
use crate::error::{Error, Result};

/// A base Farey triangle `(alpha_0, alpha_1, beta_1)`. `beta_1` is the
/// first non-pivot vertex, adjacent to `alpha_0`; it fixes the side of
/// the edge `[alpha_0, alpha_1]` on which the pivot walk runs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangle {
    pub alpha0: Slope,
    pub alpha1: Slope,
    pub beta1: Slope,
}

impl Triangle {
    pub fn new(alpha0: Slope, alpha1: Slope, beta1: Slope) -> Result<Triangle> {
        let t = Triangle { alpha0, alpha1, beta1 };
        let v = t.vertices();
        for i in 0..3 {
            if !v[i].is_neighbor(v[(i + 1) % 3]) {
                return Err(Error::InvalidInput(format!("{} and {} are not Farey neighbors", v[i], v[(i + 1) % 3])));
            }
        }
        Ok(t)
    }

    /// `(0/1, 1/0, 1/1)`.
    pub fn standard() -> Triangle {
        Triangle { alpha0: Slope::from_ints(0, 1), alpha1: Slope::infinity(), beta1: Slope::from_ints(1, 1) }
    }

    pub fn vertices(&self) -> [&Slope; 3] {
        [&self.alpha0, &self.alpha1, &self.beta1]
    }

    /// Signed vectors `(alpha_0, alpha_1)` with `alpha_0 + alpha_1 = beta_1`.
    fn signed_base(&self) -> ((BigInt, BigInt), (BigInt, BigInt)) {
        let (p0, q0) = self.alpha0.vector();
        let (p1, q1) = self.alpha1.vector();
        let sum = Slope::new(&p0 + &p1, &q0 + &q1);
        if sum.as_ref() == Ok(&self.beta1) {
            ((p0, q0), (p1, q1))
        } else {
            ((-p0, -q0), (p1, q1))
        }
    }

    /// Pivots `alpha_0, alpha_1, ..., alpha_{len+1}` determined by widths
    /// through `alpha_{n+1} = alpha_{n-1} + w(n) alpha_n`.
    pub fn pivots_from_widths(&self, widths: &[BigInt]) -> Result<Vec<Slope>> {
        if widths.iter().any(|w| !w.is_positive()) {
            return Err(Error::InvalidInput("widths must be positive".into()));
        }
        let (mut prev, mut cur) = self.signed_base();
        let mut out = vec![self.alpha0.clone(), self.alpha1.clone()];
        for w in widths {
            let next = (&prev.0 + w * &cur.0, &prev.1 + w * &cur.1);
            out.push(Slope::from_vector(&next));
            prev = std::mem::replace(&mut cur, next);
        }
        Ok(out)
    }

    pub fn to_json(&self) -> Value {
        json!({"alpha0": self.alpha0.to_string(), "alpha1": self.alpha1.to_string(), "beta1": self.beta1.to_string()})
    }

    pub fn from_json(v: &Value) -> Result<Triangle> {
        let get = |k: &str| -> Result<Slope> {
            v.get(k).and_then(Value::as_str).ok_or_else(|| Error::Parse(format!("base triangle needs {k:?}")))?.parse()
        };
        Triangle::new(get("alpha0")?, get("alpha1")?, get("beta1")?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_pivots() {
        let w: Vec<BigInt> = [3, 1, 2].iter().map(|&x| BigInt::from(x)).collect();
        let p = Triangle::standard().pivots_from_widths(&w).unwrap();
        let s: Vec<String> = p.iter().map(|s| s.to_string()).collect();
        assert_eq!(s, ["0/1", "1/0", "3/1", "4/1", "11/3"]);
    }

    #[test]
    fn rejects_non_triangles() {
        assert!(Triangle::new(Slope::from_ints(0, 1), Slope::infinity(), Slope::from_ints(2, 1)).is_err());
        assert!(Triangle::new(Slope::from_ints(0, 1), Slope::infinity(), Slope::from_ints(-1, 1)).is_ok());
    }
}
