//! Floating-point cross-check: irreps built from gamma matrices, the product
//! with the 14 split numerically, and the result compared against the exact
//! coupling matrix.

mod compare;
mod decompose;
mod rep;

pub use compare::{compare, compare_with, BlockReport, ComparisonReport};
pub use decompose::{casimir_ratio, numeric_decompose, NumericBlock, NumericDecomposition};
pub use rep::{
    bracket_residual, build_irrep, gamma5, spinor_generators, vector_generators, CMat, CVec, RepMatrices, PAIRS,
};

use crate::labels::IrrepLabel;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum OracleError {
    #[error("dimension {dim} of {label} exceeds the cap {cap}")]
    DimensionCap { label: IrrepLabel, dim: u64, cap: u64 },
    #[error("degenerate basis: {0}")]
    DegenerateBasis(String),
    #[error("eigen failure: {0}")]
    EigenFailure(String),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleConfig {
    /// Largest irrep dimension the oracle will build.
    pub cap: u64,
    pub eigen_tol: f64,
    pub tol: f64,
    pub projector_tol: f64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self { cap: 64, eigen_tol: 1e-10, tol: 1e-9, projector_tol: 1e-8 }
    }
}

#[cfg(test)]
mod tests;
