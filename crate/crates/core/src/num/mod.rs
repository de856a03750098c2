//! Number types: exact Gaussian rationals, certified complex balls and
//! arbitrary-precision complex floats.

pub mod ball;
pub mod bigcomplex;
pub mod gauss;
pub mod rat;

pub use ball::ComplexBall;
pub use bigcomplex::BigComplex;
pub use gauss::GaussRat;

use num_bigint::BigInt;

/// The commutative-ring operations needed to evaluate trace polynomials and
/// run the flip recursion. `from_integer` takes `self` as a context so that
/// precision-carrying types can build constants at a matching precision.
pub trait TraceRing: Clone {
    #[allow(clippy::wrong_self_convention)]
    fn from_integer(&self, n: &BigInt) -> Self;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
}
