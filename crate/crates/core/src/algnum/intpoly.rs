//! Univariate integer polynomials: exact evaluation, division over the
//! rationals, and Kronecker's irreducibility test.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::num::{ComplexBall, GaussRat};

/// Coefficients low to high, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntPoly {
    c: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut c: Vec<BigInt>) -> IntPoly {
        while c.last().map(|x| x.is_zero()).unwrap_or(false) {
            c.pop();
        }
        IntPoly { c }
    }

    pub fn from_i64(c: &[i64]) -> IntPoly {
        IntPoly::new(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.c.len().saturating_sub(1)
    }

    pub fn leading(&self) -> BigInt {
        self.c.last().cloned().unwrap_or_default()
    }

    pub fn length(&self) -> BigInt {
        self.c.iter().map(|x| x.abs()).sum()
    }

    pub fn content(&self) -> BigInt {
        self.c.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
    }

    pub fn is_primitive(&self) -> bool {
        self.content().is_one()
    }

    pub fn derivative(&self) -> IntPoly {
        IntPoly::new(self.c.iter().enumerate().skip(1).map(|(k, a)| a * BigInt::from(k)).collect())
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        self.c.iter().rev().fold(BigInt::zero(), |acc, a| acc * x + a)
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        self.c.iter().rev().fold(BigRational::zero(), |acc, a| acc * x + BigRational::from_integer(a.clone()))
    }

    pub fn eval_gauss(&self, z: &GaussRat) -> GaussRat {
        self.c.iter().rev().fold(GaussRat::zero(), |acc, a| &(&acc * z) + &GaussRat::real(BigRational::from_integer(a.clone())))
    }

    pub fn eval_ball(&self, z: &ComplexBall) -> ComplexBall {
        let prec = z.prec();
        self.c.iter().rev().fold(ComplexBall::zero(prec), |acc, a| acc.mul(z).add(&ComplexBall::exact_int(a, prec)))
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.c.iter().map(|a| a.to_f64().unwrap_or(f64::NAN)).collect()
    }

    /// Whether `g` divides `self` in `Q[X]`.
    pub fn divisible_by(&self, g: &IntPoly) -> bool {
        if g.is_zero() {
            return false;
        }
        let mut r: Vec<BigRational> = self.c.iter().map(|a| BigRational::from_integer(a.clone())).collect();
        let gl = BigRational::from_integer(g.leading());
        let dg = g.degree();
        while r.len() > dg && !r.is_empty() {
            let top = r.last().cloned().expect("nonempty") / &gl;
            let shift = r.len() - 1 - dg;
            for (k, gk) in g.c.iter().enumerate() {
                r[shift + k] -= &top * BigRational::from_integer(gk.clone());
            }
            r.pop();
            while r.last().map(|x| x.is_zero()).unwrap_or(false) {
                r.pop();
            }
        }
        r.iter().all(|x| x.is_zero())
    }

    /// Irreducible over `Q` with degree at least 1 (Kronecker's method).
    pub fn is_irreducible(&self) -> bool {
        let d = self.degree();
        if self.is_zero() || d == 0 {
            return false;
        }
        if d == 1 {
            return true;
        }
        if self.c[0].is_zero() {
            return false;
        }
        for k in 1..=d / 2 {
            if self.has_factor_of_degree(k) {
                return false;
            }
        }
        true
    }

    fn has_factor_of_degree(&self, k: usize) -> bool {
        // k + 1 integer nodes where f does not vanish
        let mut nodes = Vec::new();
        let mut values = Vec::new();
        let mut t: i64 = 0;
        while nodes.len() < k + 1 {
            let x = BigInt::from(t);
            let v = self.eval_int(&x);
            if v.is_zero() {
                return true;
            }
            nodes.push(x);
            values.push(v);
            t = if t <= 0 { 1 - t } else { -t };
        }
        let divisors: Vec<Vec<BigInt>> = values.iter().map(signed_divisors).collect();
        let mut choice = vec![0usize; k + 1];
        loop {
            // fix the sign of the first value to skip g ~ -g
            if divisors[0][choice[0]].is_positive() {
                let vals: Vec<BigInt> = choice.iter().zip(&divisors).map(|(&i, d)| d[i].clone()).collect();
                if let Some(g) = interpolate_integer(&nodes, &vals) {
                    if g.degree() >= 1 && g.degree() < self.degree() && self.divisible_by(&g) {
                        return true;
                    }
                }
            }
            // odometer
            let mut pos = 0;
            loop {
                if pos == choice.len() {
                    return false;
                }
                choice[pos] += 1;
                if choice[pos] < divisors[pos].len() {
                    break;
                }
                choice[pos] = 0;
                pos += 1;
            }
        }
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.c
                .iter()
                .map(|a| match a.to_i64() {
                    Some(v) => Value::from(v),
                    None => Value::from(a.to_string()),
                })
                .collect(),
        )
    }

    pub fn from_json(v: &Value) -> Result<IntPoly> {
        let a = v.as_array().ok_or_else(|| Error::Parse("polynomial must be an array".into()))?;
        Ok(IntPoly::new(a.iter().map(crate::farey::json_int).collect::<Result<_>>()?))
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, a) in self.c.iter().enumerate().rev() {
            if a.is_zero() {
                continue;
            }
            let mag = a.abs();
            if first {
                if a.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if a.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            if !mag.is_one() || k == 0 {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "X")?,
                _ => write!(f, "X^{k}")?,
            }
        }
        Ok(())
    }
}

fn signed_divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut out = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            out.push(d.clone());
            let e = &n / &d;
            if e != d {
                out.push(e);
            }
        }
        d += 1;
    }
    out.sort();
    let mut signed: Vec<BigInt> = out.iter().map(|d| -d).collect();
    signed.extend(out);
    signed
}

/// The polynomial of degree `<= nodes.len() - 1` through the points, if its
/// coefficients are integers.
fn interpolate_integer(nodes: &[BigInt], vals: &[BigInt]) -> Option<IntPoly> {
    let n = nodes.len();
    let mut acc = vec![BigRational::zero(); n];
    for j in 0..n {
        // basis polynomial prod_{m != j} (X - x_m) / (x_j - x_m)
        let mut basis = vec![BigRational::one()];
        let mut denom = BigInt::one();
        for m in 0..n {
            if m == j {
                continue;
            }
            let mut next = vec![BigRational::zero(); basis.len() + 1];
            for (k, b) in basis.iter().enumerate() {
                next[k + 1] += b;
                next[k] -= b * BigRational::from_integer(nodes[m].clone());
            }
            basis = next;
            denom *= &nodes[j] - &nodes[m];
        }
        let scale = BigRational::new(vals[j].clone(), denom);
        for (k, b) in basis.iter().enumerate() {
            acc[k] += b * &scale;
        }
    }
    if acc.iter().any(|a| !a.is_integer()) {
        return None;
    }
    Some(IntPoly::new(acc.into_iter().map(|a| a.to_integer()).collect()))
}

/// Every primitive polynomial with positive leading coefficient, degree in
/// `1..=max_degree` and length at most `max_length`, by degree and then
/// coefficient vector.
pub fn bounded_polynomials(max_degree: usize, max_length: i64) -> Vec<IntPoly> {
    let mut out = Vec::new();
    for d in 1..=max_degree {
        let mut coeffs = vec![0i64; d + 1];
        fill(&mut coeffs, d, max_length, &mut out);
    }
    out
}

fn fill(coeffs: &mut Vec<i64>, k: usize, budget: i64, out: &mut Vec<IntPoly>) {
    let top = coeffs.len() - 1;
    let range: Vec<i64> = if k == top { (1..=budget).collect() } else { (-budget..=budget).collect() };
    for a in range {
        coeffs[k] = a;
        let rest = budget - a.abs();
        if k == 0 {
            let p = IntPoly::from_i64(coeffs);
            if p.is_primitive() {
                out.push(p);
            }
        } else {
            fill(coeffs, k - 1, rest, out);
        }
    }
    coeffs[k] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    #[test]
    fn irreducibility() {
        assert!(p(&[0, 1]).is_irreducible());
        assert!(p(&[1, 0, 1]).is_irreducible());
        assert!(!p(&[-1, 0, 1]).is_irreducible());
        assert!(p(&[-1, -1, 1]).is_irreducible());
        assert!(!p(&[1, 0, 0, 1]).is_irreducible()); // (X+1)(X^2-X+1)
        assert!(!p(&[1, 0, 2, 0, 1]).is_irreducible()); // (X^2+1)^2
        assert!(!p(&[4, 0, 0, 0, 1]).is_irreducible()); // (X^2+2X+2)(X^2-2X+2)
        assert!(p(&[1, 1, 0, 1]).is_irreducible());
        assert!(p(&[-2, 0, 0, 0, 1]).is_irreducible());
        assert!(!p(&[0, 1, 1]).is_irreducible());
    }

    #[test]
    fn display_and_length() {
        assert_eq!(p(&[-1, 0, 3]).to_string(), "3X^2 - 1");
        assert_eq!(p(&[2, -1]).to_string(), "-X + 2");
        assert_eq!(p(&[1, -3, 0, 1]).length(), BigInt::from(5));
    }

    #[test]
    fn small_enumerations() {
        let a1 = bounded_polynomials(1, 1);
        assert_eq!(a1, vec![p(&[0, 1])]);
        let a2: Vec<IntPoly> = bounded_polynomials(2, 2).into_iter().filter(|f| f.is_irreducible()).collect();
        assert_eq!(a2, vec![p(&[-1, 1]), p(&[0, 1]), p(&[1, 1]), p(&[1, 0, 1])]);
    }

    #[test]
    fn division() {
        assert!(p(&[-1, 0, 1]).divisible_by(&p(&[1, 1])));
        assert!(!p(&[1, 0, 1]).divisible_by(&p(&[1, 1])));
        assert!(p(&[2, 0, 2]).divisible_by(&p(&[1, 0, 1])));
    }
}
