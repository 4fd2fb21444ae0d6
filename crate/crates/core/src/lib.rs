//! Numerics for the two-parameter family of normalized holomorphic function
//! classes `A(s, t) = { f : Re[(s-1) f(z)/z + f'(z)] ≥ s t }`.
//!
//! The crate works entirely in parameter space:
//!
//! * [`specfun`] evaluates `₂F₁(1, s; s+1; z)` and the functions ξ₀…ξ₃ built
//!   from its value at `z = -1`, plus the auxiliary ψ₁, ψ₂.
//! * [`quadrature`] is the numeric engine (adaptive Gauss-Kronrod, Brent root
//!   finding, argument-principle zero counting).
//! * [`curves`] computes the forward and backward extremal curves and the
//!   curve of infinitesimally sharp inclusions through a base point.
//! * [`order`] decides inclusion between two classes, checks filtrations and
//!   computes quasi-suprema and quasi-infima.
//! * [`verify`] bundles the numerical checks of the analytic claims into
//!   structured reports.

pub mod config;
pub mod curves;
pub mod error;
pub mod order;
pub mod quadrature;
pub mod specfun;
pub mod verify;

pub use config::EvalConfig;
pub use curves::{CurveKind, CurveSamples, ParamPoint, Spacing};
pub use error::{Error, Result};
pub use order::{FiltrationReport, InclusionRelation, QuasiExtremaResult, Relation};
pub use specfun::SParam;
