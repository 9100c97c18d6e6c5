//! Error types shared across the crate.

use thiserror::Error;

/// Errors produced by the simulation kernel.
#[derive(Debug, Error)]
pub enum Error {
    /// Fock-space dimension too small to mean anything.
    #[error("invalid Fock dimension {0}: need dim >= 2")]
    InvalidDimension(usize),

    /// A parameter is outside its admissible range.
    #[error("invalid parameter {name}: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    /// The pulse detuning leaves the near-resonance regime (requires
    /// epsilon/omega << 1, enforced as epsilon < omega/10).
    #[error("regime violation: epsilon = {epsilon} with omega = {omega}; detuning must satisfy epsilon/omega << 1 (epsilon < omega/10)")]
    RegimeViolation { epsilon: f64, omega: f64 },

    /// A requested computation exceeds the configured size caps.
    #[error("capacity exceeded: {0}")]
    Capacity(String),

    /// The post-selected branch has numerically vanished.
    #[error("cascade extinction at projection {projection}: step success probability {step_success:e} below threshold {threshold:e}")]
    Extinction {
        projection: usize,
        step_success: f64,
        threshold: f64,
    },

    /// A phase-estimation outcome was requested whose probability is zero.
    #[error("impossible outcome: probability {0:e} below threshold")]
    ImpossibleOutcome(f64),

    /// Generic validation failure (malformed grids, mismatched labels, ...).
    #[error("validation error: {0}")]
    Validation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
