//! Error types shared across the crate.

use thiserror::Error;

/// Errors raised by algebra construction and analysis.
///
/// Validation of a *candidate* hypercomplex structure never errors; it
/// returns a list of violations as data (see `hyper::validate_hypercomplex`).
/// The variants here are hard rejections: dimension mismatches, malformed
/// construction data, and operations applied outside their hypotheses.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HyperlieError {
    #[error("vector has length {got}, expected {expected}")]
    VectorLength { expected: usize, got: usize },

    #[error("ambient dimension mismatch: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },

    #[error("matrix has shape {rows}x{cols}, expected {expected_rows}x{expected_cols}")]
    MatrixShape {
        rows: usize,
        cols: usize,
        expected_rows: usize,
        expected_cols: usize,
    },

    #[error("structure constants violate antisymmetry at (i={i}, j={j}, k={k})")]
    Antisymmetry { i: usize, j: usize, k: usize },

    #[error("hypercomplex structure is invalid: {0}")]
    InvalidHypercomplex(String),

    #[error("algebra is not 2-step nilpotent")]
    NotTwoStep,

    #[error("y = ({0}, {1}, {2}) does not lie on the unit sphere")]
    NotUnitSphere(String, String, String),

    #[error("fiber dimension {0} is not a positive multiple of 4")]
    FiberDimension(usize),

    #[error("cocycle does not vanish on the commutator ideal (basis vector {index})")]
    CocycleKernel { index: usize },

    #[error("cocycle integrability fails for alpha={alpha} at pair (e{i}, e{j})")]
    CocycleIntegrability { alpha: usize, i: usize, j: usize },

    #[error("rho is not a homomorphism at pair (e{i}, e{j})")]
    RhoHomomorphism { i: usize, j: usize },

    #[error("rho(e{i}) does not commute with the fiber structure I_{alpha}")]
    RhoQuaternionic { i: usize, alpha: usize },

    #[error("J_alpha applied to the commutator ideal leaves the center (alpha={0})")]
    CommutatorNotCentralized(usize),

    #[error("unknown catalog entry '{0}'")]
    UnknownCatalog(String),

    #[error("{0}")]
    Unsupported(String),
}
