//! Exact field, polynomial, rational-function, and truncated-series
//! arithmetic underlying every computation in this crate.
//!
//! All values are immutable after construction and every operation is a pure
//! function, so everything here is safe to share across threads.

mod poly;
mod ratfunc;
mod scalar;
mod series;

pub use poly::{Poly, RootMultiset};
pub use ratfunc::RatFunc;
pub use scalar::Scalar;
pub use series::{SeriesInf, SeriesZero};
