//! Farey triangulation combinatorics: slopes, continued fractions, and pivot
//! sequences.

mod cf;
mod pivot;
mod slope;
mod triangle;

pub use cf::{ContinuedFraction, Generator};
pub use pivot::{pivot_sequence, widths_to_cf, Endpoint, Pivot, PivotSequence, WIDTH_CF_OFFSET};
pub use slope::{are_neighbors, intersection_number, Slope};
pub use triangle::Triangle;

pub(crate) use cf::json_int;

use crate::error::Result;

pub fn cf_of_rational(s: &Slope) -> Result<ContinuedFraction> {
    ContinuedFraction::of_rational(s)
}

pub fn cf_convergents(cf: &ContinuedFraction, k: usize) -> Result<Vec<Slope>> {
    cf.convergents(k)
}
