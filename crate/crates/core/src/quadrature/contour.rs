//! Zero counting with the logarithmic residue `(1/2πi) ∮ f'/f dz` on the
//! boundary of an axis-aligned rectangle.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};

/// Panels per edge of the first trapezoid pass.
pub const DEFAULT_PANELS: usize = 256;
/// Panels per edge after which refinement gives up.
pub const MAX_PANELS: usize = 65_536;

/// Successive estimates must agree to this before the count is accepted.
const STEP_TOL: f64 = 0.05;
/// Accepted distance of the final estimate from an integer.
const INTEGER_TOL: f64 = 0.25;
/// Minimum admissible `|f|` on the contour.
const BOUNDARY_FLOOR: f64 = 1e-8;

/// `{x + iy : x0 ≤ x ≤ x1, |y| ≤ y_half}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Rectangle {
    pub x0: f64,
    pub x1: f64,
    pub y_half: f64,
}

impl Rectangle {
    pub fn new(x0: f64, x1: f64, y_half: f64) -> Result<Self> {
        if !(x0.is_finite() && x1.is_finite() && y_half.is_finite() && x0 < x1 && y_half > 0.0) {
            return Err(Error::domain(format!("degenerate rectangle [{x0}, {x1}] x ±{y_half}")));
        }
        Ok(Rectangle { x0, x1, y_half })
    }

    /// Corners in counter-clockwise order starting at the lower left.
    fn corners(&self) -> [Complex64; 4] {
        [
            Complex64::new(self.x0, -self.y_half),
            Complex64::new(self.x1, -self.y_half),
            Complex64::new(self.x1, self.y_half),
            Complex64::new(self.x0, self.y_half),
        ]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LogResidue {
    /// `(1/2πi) ∮ f'/f dz` at the finest resolution used.
    pub value: Complex64,
    /// `value.re` rounded to the nearest integer.
    pub count: i64,
    pub panels_per_edge: usize,
    /// Smallest `|f|` seen among all boundary samples.
    pub boundary_min_abs: f64,
}

struct Edge {
    start: Complex64,
    end: Complex64,
    panels: usize,
    /// Trapezoid sum of f'/f over the edge (without the step factor).
    sum: Complex64,
}

/// Counts zeros of an analytic `f` inside `rect` via the argument principle.
///
/// Each edge is integrated with the composite trapezoid rule, starting from
/// `n_panels` panels and doubling (reusing previous nodes) until two
/// successive estimates differ by less than 0.05 and the latest lies within
/// 0.25 of an integer.
pub fn contour_log_residue<F, D>(f: F, df: D, rect: Rectangle, n_panels: usize) -> Result<LogResidue>
where
    F: Fn(Complex64) -> Result<Complex64>,
    D: Fn(Complex64) -> Result<Complex64>,
{
    if n_panels == 0 || n_panels > MAX_PANELS {
        return Err(Error::domain(format!("panel count must lie in 1..={MAX_PANELS}, got {n_panels}")));
    }
    let mut boundary_min = f64::INFINITY;
    let mut quotient = |z: Complex64| -> Result<Complex64> {
        let fz = f(z)?;
        let m = fz.norm();
        if !m.is_finite() {
            return Err(Error::NonFinite(z.re));
        }
        boundary_min = boundary_min.min(m);
        if m < BOUNDARY_FLOOR {
            return Err(Error::domain(format!(
                "|f| = {m:.3e} at {z} on the contour; zero counting needs f bounded away from 0"
            )));
        }
        Ok(df(z)? / fz)
    };

    let corners = rect.corners();
    let mut edges = Vec::with_capacity(4);
    for k in 0..4 {
        let (start, end) = (corners[k], corners[(k + 1) % 4]);
        let h = (end - start) / n_panels as f64;
        let mut sum = 0.5 * (quotient(start)? + quotient(end)?);
        for j in 1..n_panels {
            sum += quotient(start + h * j as f64)?;
        }
        edges.push(Edge { start, end, panels: n_panels, sum });
    }

    let estimate = |edges: &[Edge]| -> Complex64 {
        let total = edges
            .iter()
            .fold(Complex64::new(0.0, 0.0), |acc, e| acc + e.sum * (e.end - e.start) / e.panels as f64);
        total / Complex64::new(0.0, 2.0 * PI)
    };

    let mut previous = estimate(&edges);
    let mut panels = n_panels;
    while panels < MAX_PANELS {
        for edge in edges.iter_mut() {
            let h = (edge.end - edge.start) / edge.panels as f64;
            for j in 0..edge.panels {
                edge.sum += quotient(edge.start + h * (j as f64 + 0.5))?;
            }
            edge.panels *= 2;
        }
        panels *= 2;
        let current = estimate(&edges);
        let rounded = current.re.round();
        if (current - previous).norm() < STEP_TOL && (current - Complex64::new(rounded, 0.0)).norm() < INTEGER_TOL
        {
            return Ok(LogResidue {
                value: current,
                count: rounded as i64,
                panels_per_edge: panels,
                boundary_min_abs: boundary_min,
            });
        }
        previous = current;
    }
    Err(Error::convergence(format!(
        "logarithmic residue not settled at {MAX_PANELS} panels per edge (last estimate {previous})"
    )))
}
