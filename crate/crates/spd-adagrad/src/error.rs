//! Error type shared across the crate.

use thiserror::Error;

/// Errors produced by geometry kernels, solvers, bound evaluators and persistence.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed input: dimension mismatch, non-finite entries, invalid parameter ranges.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A matrix function requiring a positive spectrum met an eigenvalue at or below
    /// the positivity threshold. Carries the offending (smallest) eigenvalue.
    #[error("non-positive eigenvalue {min_eigenvalue:e} in a positivity-requiring matrix function")]
    NonPositiveEigenvalue { min_eigenvalue: f64 },

    /// The matrix exponential would overflow; carries the offending eigenvalue magnitude.
    #[error("matrix exponential overflow: eigenvalue magnitude {magnitude:e} exceeds the safe range")]
    NumericalOverflow { magnitude: f64 },

    /// Armijo backtracking failed to find an acceptable step after the halving cap.
    /// Signals a gradient/value inconsistency or numerical failure.
    #[error("Armijo backtracking exhausted after {halvings} halvings")]
    BacktrackExhausted { halvings: u32 },

    /// A bound evaluator was asked for a quantity whose inputs were not supplied.
    #[error("missing theory input: {0}")]
    InputMissing(&'static str),

    /// Supplied theory inputs violate a precondition of the bound being evaluated.
    #[error("inconsistent theory inputs: {0}")]
    InconsistentInputs(String),

    /// Not enough usable data points (e.g. all sample pairs coincident).
    #[error("insufficient data: {0}")]
    InsufficientData(String),

    /// A solver-specific audit was applied to a trace from a different solver.
    #[error("wrong solver for this audit: expected {expected}, trace is from {found}")]
    WrongSolver { expected: String, found: String },

    /// No (problem, solver) pair succeeded; a performance profile cannot be built.
    #[error("empty profile: no successful runs")]
    EmptyProfile,

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    /// A persisted file could not be parsed back.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
