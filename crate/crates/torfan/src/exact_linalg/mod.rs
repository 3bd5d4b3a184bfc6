//! Exact integer matrix algebra: Smith and Hermite normal forms, homology of
//! chain complexes, and arithmetic of finitely generated abelian groups.
//!
//! Everything here works over arbitrary-precision integers.  Intermediate
//! entries in a Smith reduction can explode even on 10x10 inputs, so
//! fixed-width arithmetic would be a correctness bug, not a performance
//! tradeoff.

mod groups;
mod matrix;
mod presented;
mod smith;

pub use groups::{homology_at, tensor_and_tor1, AbelianGroupInv, GradedGroups, GroupParseError};
pub use matrix::IntMatrix;
pub use presented::{
    cokernel_invariants, complex_cohomology, kernel_presentation, morphism_defined,
    morphisms_equal, Presentation,
};
pub use smith::{inverse_unimodular, kernel_basis, row_hnf, smith_normal_form, solve, SmithForm};

use thiserror::Error;

/// Errors raised by homology computations on explicit differentials.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    /// The two differentials do not compose to zero, so they are not
    /// consecutive maps of a chain complex.
    #[error("differentials do not compose to zero: d_out * d_in != 0")]
    CompositionNonzero,
    /// The domain of the outgoing map does not match the codomain of the
    /// incoming map.
    #[error("dimension mismatch: d_out has {out_cols} columns but d_in has {in_rows} rows")]
    DimensionMismatch { out_cols: usize, in_rows: usize },
}
