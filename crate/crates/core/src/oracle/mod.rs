//! Finite-group point counts: enumerated 2x2 matrix groups over prime
//! fields, brute-force commutator counts and exact character tables.

mod characters;
mod classes;
mod counting;
mod cyclotomic;
mod field;
mod group;

use thiserror::Error;

pub use characters::{character_table, CharacterTable};
pub use classes::{commutator_distribution, conjugacy_classes, tuple_count, tuple_counts, Class, ConjugacyData};
pub use counting::{compare_counts, frobenius_sums, gl_bridge, BridgeReport, FrobeniusSums};
pub use cyclotomic::{cyclotomic_polynomial, CyclotomicValue};
pub use field::PrimeField;
pub use group::{build_group, build_group_bounded, Family, Mat2, MatrixGroup, DEFAULT_BOUND};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("group of order {order} exceeds the bound {bound}")]
    GroupTooLarge { order: u64, bound: usize },
    #[error("central element of order {n} unavailable over F_{q}")]
    CentralElementUnavailable { n: u64, q: u32 },
    #[error("element {0} is not central")]
    NotCentral(usize),
    #[error("commutator count differs inside class {class} (element {element})")]
    NotClassFunction { class: usize, element: usize },
    #[error("character lift failed: {0}")]
    LiftFailure(String),
    #[error("character count is not a non-negative integer: {0}")]
    NonIntegralCount(String),
    #[error("{0}")]
    Invalid(String),
}
