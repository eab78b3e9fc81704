//! Strong-perturbation quantum dynamics.
//!
//! The evolution of a system H = H0 + V with a dominant perturbation V is
//! expanded around the adiabatic propagator generated by V alone.  Corrections
//! come from nested time integrals of the conjugated operator U†H0U, and the
//! diagonal level shifts <n;t|H0|n;t> that would otherwise grow secularly are
//! absorbed into the leading order by a level-shift resummation.
//!
//! Module map:
//! - [`linalg`]: complex dense vectors/matrices, Hermitian eigendecomposition,
//!   exact matrix-exponential action.
//! - [`bessel`]: first-kind Bessel functions (stable for integer orders).
//! - [`adiabatic`]: spectral-path tracking of the eigensystem of V(t) with
//!   parallel-transport gauge fixing and phase accumulation.
//! - [`dyson`]: the correction series through second order, raw or resummed.
//! - [`secular`]: polynomial growth fits and secularity classification.
//! - [`oracle`]: exact Schrödinger propagation for validation.
//! - [`models`]: the two worked scenarios (two-level constant coupling,
//!   driven particle on a truncated momentum lattice).
//! - [`scenario`] / [`config`] / [`report`]: batch-run plumbing and the
//!   machine-readable outputs behind the `strongpert` CLI.

pub mod adiabatic;
pub mod bessel;
pub mod config;
pub mod dyson;
pub mod error;
pub mod linalg;
pub mod models;
pub mod oracle;
pub mod report;
pub mod scenario;
pub mod secular;

#[cfg(test)]
pub(crate) mod testutil;

pub use error::{Error, Result};
pub use linalg::{CMatrix, CVector, C64};

/// Library version string, shared by the CLI `version` subcommand and the
/// run metadata files.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
