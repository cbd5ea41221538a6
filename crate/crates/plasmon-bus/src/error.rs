use thiserror::Error;

/// Errors produced across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("overflow: {0}")]
    Overflow(String),

    #[error("no propagating mode: target frequency {target:.6e} rad/s is at or above the m={m} asymptote {asymptote:.6e} rad/s")]
    NoRoot { target: f64, asymptote: f64, m: u32 },

    #[error("configuration error: {0}")]
    Config(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },

    #[error("integrator did not converge: {0}")]
    Integrator(String),

    #[error("invariant violation: {0}")]
    Invariant(String),

    #[error("eigensolver failed to converge")]
    EigNoConvergence,

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("validation error for field `{field}`: {msg}")]
    Validation { field: String, msg: String },

    #[error("qubit index error: {0}")]
    QubitIndex(String),

    #[error("transceiver pair is not in the expected EPR state (overlap {overlap})")]
    NotEpr { overlap: f64 },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}
