//! Exact-arithmetic computation of the scalar data attached to affine and
//! cyclotomic Brauer and Kauffman categories: bubble generating functions,
//! admissibility checks, hat-polynomial closures, and the classification of
//! cyclotomic quotients via explicit gcd formulas, together with brute-force
//! oracles that cross-validate the closed formulas.
//!
//! The ground field is fixed to the rational numbers; there is no floating
//! point anywhere, and truncation of power series is the only approximation.

pub mod brauer;
pub mod error;
pub mod exactmath;
pub mod kauffman;

pub use error::{MathError, Result};
