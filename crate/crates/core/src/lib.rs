//! Exact weight enumerators, Jacobi polynomials and colored designs of
//! linear codes over small finite fields.

pub mod algebra;
pub mod catalog;
pub mod codes;
pub mod designs;
pub mod enumerators;
pub mod error;
pub mod fixtures;
pub mod invariants;
pub mod polyring;
pub mod verify;

pub use error::{Error, Result};
