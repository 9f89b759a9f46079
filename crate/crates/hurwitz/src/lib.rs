//! Exact arithmetic and machine verification for the Euclidean Hurwitz
//! algebras: the reals, complexes, quaternions and octonions, plus the
//! 16-dimensional doubling where the composition law ‖xy‖ = ‖x‖·‖y‖ breaks
//! down.
//!
//! The multiplication tables are not hard-coded. They are grown one doubling
//! at a time from a small set of rewrite rules — each rule a consequence of
//! the composition law together with bilinearity, the unit, and scalar
//! homogeneity — so the tables for dimensions 1, 2, 4, 8 and 16 are
//! *derived*, and the verifier can then check exactly which laws survive at
//! each dimension:
//!
//! * dimensions 1 and 2 are commutative and associative,
//! * dimension 4 (quaternions) loses commutativity,
//! * dimension 8 (octonions) loses associativity,
//! * dimension 16 loses the composition law itself: the table contains zero
//!   divisors such as (e₃+e₁₂)·(e₅+e₁₀), so no norm-multiplicative product
//!   exists there.
//!
//! All coefficients are exact rationals ([`Rational`]), so every identity is
//! decided by equality, not tolerance. The [`verify`] module re-checks the
//! tables against the geometric propositions they were built from, hunts for
//! zero divisors, and probes the two-dimensional ♥ product — a commutative,
//! norm-multiplicative multiplication with no unit, showing the unit axiom
//! is not redundant.

pub mod element;
pub mod heart;
pub mod ops;
pub mod poly;
pub mod scalar;
pub mod table;
pub mod verify;

pub use element::Element;
pub use scalar::Rational;
pub use table::{Rule, Sign, SignedBasisRef, StructureTable};

use thiserror::Error;

/// Errors surfaced by dimension-checked and partial operations.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("unsupported dimension {0}: tables exist for 1, 2, 4, 8, 16")]
    UnsupportedDimension(usize),

    #[error("unsupported dimension {0}: the proposition suite runs at 2, 4, 8")]
    SuiteDimension(usize),

    #[error("the zero element has no inverse")]
    ZeroInverse,

    #[error(
        "inverses are only defined for dimensions 1, 2, 4, 8; dimension {0} has zero divisors"
    )]
    InverseUndefined(usize),

    #[error("the zero quaternion does not define a rotation")]
    ZeroRotation,
}

pub(crate) fn check_same_dim(left: usize, right: usize) -> Result<(), Error> {
    if left == right {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { left, right })
    }
}
