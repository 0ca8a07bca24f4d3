//! Finite fields and the cyclotomic coefficient field.

pub mod cyclotomic;
pub mod field;

pub use cyclotomic::{constants, Cyclotomic, Rational, DEFAULT_ORDER};
pub use field::{FieldElement, FiniteField};
