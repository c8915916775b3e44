//! Exact computational exterior algebra: progressive and regressive
//! products, Plücker coordinates, blade factorization, affine and projective
//! incidence, and scalar products with the Hodge star.
//!
//! All arithmetic is exact, over the rationals or a prime field.

pub mod error;
pub mod exterior;
pub mod duality;
pub mod affine;
pub mod field;
pub mod harness;
pub mod metric;
pub mod parse;
pub mod projective;
pub mod random;
pub mod worked;

pub use error::{Error, Result};
pub use exterior::{Matrix, MultiIndex, Multivector, Vector};
pub use field::{FieldElement, FieldSpec};
