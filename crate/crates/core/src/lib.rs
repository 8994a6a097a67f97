//! Exact computation of E-polynomials, conjectural mixed Hodge polynomials
//! and pure parts of `PGL(n, C)` character varieties of genus `g` curves,
//! with a finite-group point-count oracle.

pub mod arith;
pub mod error;
pub mod invariants;
pub mod oracle;
pub mod partitions;
pub mod series;

pub use error::{Error, Result};
