//! Simulation kernel for measurement-based cooling of a spin ensemble and a
//! mechanical oscillator through a dispersively coupled probe spin, plus the
//! companion GKP phase-estimation encoder.
//!
//! The crate is generic over the real scalar type (see [`scalar::Real`]);
//! `f64` aliases are exported at the root.

pub mod error;
pub mod linalg;
pub mod scalar;

pub use error::{Error, Result};
pub use scalar::{Real, C};
