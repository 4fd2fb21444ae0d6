use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Tolerances and budgets for series and quadrature evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EvalConfig {
    /// Absolute error target for adaptive quadrature.
    pub quad_tol: f64,
    /// Truncation target for the hypergeometric series tail.
    pub series_tol: f64,
    pub max_terms: usize,
    /// Maximum bisection depth of any quadrature subinterval.
    pub max_depth: u32,
}

impl Default for EvalConfig {
    fn default() -> Self {
        EvalConfig {
            quad_tol: 1e-12,
            series_tol: 1e-15,
            max_terms: 100_000,
            max_depth: 60,
        }
    }
}

impl EvalConfig {
    pub fn validate(&self) -> Result<()> {
        let positive = |v: f64| v.is_finite() && v > 0.0;
        if !positive(self.quad_tol) {
            return Err(Error::domain(format!("quad_tol must be positive, got {}", self.quad_tol)));
        }
        if !positive(self.series_tol) {
            return Err(Error::domain(format!(
                "series_tol must be positive, got {}",
                self.series_tol
            )));
        }
        if self.max_terms == 0 || self.max_depth == 0 {
            return Err(Error::domain("max_terms and max_depth must be positive"));
        }
        Ok(())
    }

    pub fn with_quad_tol(mut self, quad_tol: f64) -> Self {
        self.quad_tol = quad_tol;
        self
    }

    pub fn with_series_tol(mut self, series_tol: f64) -> Self {
        self.series_tol = series_tol;
        self
    }
}
