//! Exact computer algebra for symmetric determinantal and Pfaffian rings:
//! closed-form F-singularity invariants, Gröbner-basis ideal operations,
//! and machine-checked Fedder-type F-purity certificates.

pub mod error;
pub mod fedder;
pub mod gbengine;
pub mod invariants;
pub mod matgen;
pub mod polycore;

pub use error::{Error, Result};
