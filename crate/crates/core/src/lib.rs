//! Combinatorial, symbolic and certified-numeric machinery for
//! punctured-torus pivot sequences.
//!
//! * [`farey`]: slopes, continued fractions, pivot and width sequences.
//! * [`tracecalc`]: the Markoff flip recursion, numeric and symbolic.
//! * [`algnum`]: bounded-complexity algebraic numbers and certified gaps.
//! * [`construct`]: the width-sequence diagonalization and its transcript.
//! * [`kleinian`]: matrix realizations and complex translation lengths.
//! * [`reference`]: brute-force reference implementations used as oracles.

pub mod algnum;
pub mod construct;
pub mod error;
pub mod farey;
pub mod kleinian;
pub mod num;
pub mod reference;
pub mod tracecalc;

pub use error::{Error, Result};
pub use farey::{ContinuedFraction, Endpoint, PivotSequence, Slope};
pub use num::{ComplexBall, GaussRat};
pub use tracecalc::{FlipPath, TracePolynomial};

/// Version tag embedded in every serialized artifact.
pub const FORMAT_VERSION: &str = "pivotlab/1";
