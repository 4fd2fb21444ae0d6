//! Extremal curves through a base point `(s₀, t₀)`:
//!
//! * forward, `t₀ + (1-t₀)(1 - s₀/s) ξ₀(s₀)` for `s ≥ s₀`;
//! * backward, the inverse of the forward map, `(t₀ - c(s))/(1 - c(s))` with
//!   `c(s) = (1 - s/s₀) ξ₀(s)`, for `s ≤ s₀`, clamped at 0 left of `s*`;
//! * sharp, `1 - (1-t₀) exp(-∫_{s₀}^s ξ₀(σ)/σ dσ)`, defined on both sides.

use serde::Serialize;

use crate::config::EvalConfig;
use crate::error::{Error, Result};
use crate::quadrature::{find_root, try_integrate, Bracket, Integrand, DEFAULT_ROOT_TOL};
use crate::specfun::{xi0, xi0_finite, xi2_finite, SParam};

/// A point `(s, t)` of the closed parameter region `[0, ∞] × [0, 1]`.
///
/// `s = 0` or `t = 1` is the degenerate class containing only the identity.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ParamPoint {
    pub s: SParam,
    pub t: f64,
}

impl ParamPoint {
    pub fn new(s: f64, t: f64) -> Result<Self> {
        let s = SParam::new(s)?;
        if !(0.0..=1.0).contains(&t) {
            return Err(Error::domain(format!("t must lie in [0, 1], got {t}")));
        }
        Ok(ParamPoint { s, t })
    }

    pub fn is_degenerate(&self) -> bool {
        self.s.is_zero() || self.t == 1.0
    }

    /// `(s₀, t₀)` for use as a curve base: finite positive `s₀`, `t₀ < 1`.
    fn base(&self) -> Result<(f64, f64)> {
        let s0 = self.s.value();
        if !(s0 > 0.0 && s0.is_finite()) {
            return Err(Error::domain(format!("curve base needs finite positive s, got {s0}")));
        }
        if self.t >= 1.0 {
            return Err(Error::domain("curve base needs t < 1"));
        }
        Ok((s0, self.t))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CurveKind {
    Forward,
    Backward,
    Sharp,
    QuasiSup,
    QuasiInf,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Spacing {
    #[default]
    Even,
    Log,
}

/// Ordered samples of one curve, with what produced them.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CurveSamples {
    pub kind: CurveKind,
    pub base: Vec<ParamPoint>,
    pub spacing: Spacing,
    /// `(s, t)` pairs, nondecreasing in `s`.
    pub samples: Vec<(f64, f64)>,
    /// Left end of the unclamped backward curve (backward only).
    pub s_star: Option<f64>,
    /// Whether any backward value was clamped to 0.
    pub clamped: bool,
    pub cfg: EvalConfig,
}

/// The forward extremal curve. `s = +∞` returns the limit `t₀ + (1-t₀) ξ₀(s₀)`.
pub fn t_forward(p: ParamPoint, s: f64, cfg: &EvalConfig) -> Result<f64> {
    let (s0, t0) = p.base()?;
    if s.is_nan() || s < s0 {
        return Err(Error::domain(format!("forward curve from s0 = {s0} needs s >= s0, got {s}")));
    }
    let x0 = xi0_finite(s0, cfg)?;
    let lever = if s.is_infinite() { 1.0 } else { 1.0 - s0 / s };
    Ok(t0 + (1.0 - t0) * lever * x0)
}

fn check_backward_domain(s0: f64, s: f64) -> Result<()> {
    if !(s > 0.0 && s <= s0) {
        return Err(Error::domain(format!("backward curve from s0 = {s0} needs 0 < s <= s0, got {s}")));
    }
    Ok(())
}

/// `c(s) = (1 - s/s₀) ξ₀(s)`, decreasing from 1 at `s = 0` to 0 at `s = s₀`.
fn backward_lever(s0: f64, s: f64, cfg: &EvalConfig) -> Result<f64> {
    Ok((1.0 - s / s0) * xi0(SParam::new(s)?, cfg)?)
}

/// The backward curve without the clamp; negative left of `s*`.
pub fn t_backward_unclamped(p: ParamPoint, s: f64, cfg: &EvalConfig) -> Result<f64> {
    let (s0, t0) = p.base()?;
    check_backward_domain(s0, s)?;
    let c = backward_lever(s0, s, cfg)?;
    Ok((t0 - c) / (1.0 - c))
}

/// The backward extremal curve, `max(0, ·)` of [`t_backward_unclamped`].
pub fn t_backward(p: ParamPoint, s: f64, cfg: &EvalConfig) -> Result<f64> {
    Ok(t_backward_unclamped(p, s, cfg)?.max(0.0))
}

/// The root of `c(s) = t₀` in `(0, s₀)`; `s₀` itself when `t₀ = 0`.
pub fn s_star(p: ParamPoint, cfg: &EvalConfig) -> Result<f64> {
    let (s0, t0) = p.base()?;
    if t0 == 0.0 {
        return Ok(s0);
    }
    let g = |s: f64| Ok(backward_lever(s0, s, cfg)? - t0);
    // c → 1 > t₀ as s → 0; walk left until the sign is right.
    let mut lo = 0.5 * s0;
    let mut g_lo = g(lo)?;
    while g_lo <= 0.0 {
        lo *= 1e-3;
        if lo < f64::MIN_POSITIVE {
            return Err(Error::convergence(format!("no left bracket for s* at t0 = {t0}")));
        }
        g_lo = g(lo)?;
    }
    let bracket = Bracket::new(lo, s0, g_lo, -t0)?;
    find_root(g, bracket, DEFAULT_ROOT_TOL * s0.min(1.0))
}

/// `∫_a^b ξ₀(σ)/σ dσ` for `0 < a ≤ b < ∞`, integrated in `ln σ`.
fn log_xi0_integral(a: f64, b: f64, cfg: &EvalConfig) -> Result<f64> {
    if a == b {
        return Ok(0.0);
    }
    try_integrate(Integrand::regular(|v: f64| xi0_finite(v.exp(), cfg), a.ln(), b.ln()), cfg)
}

/// `∫_{s₀}^∞ ξ₀(σ)/σ dσ = (1/(2s₀)) ∫_0^1 ξ₂(s₀/u) du`.
fn log_xi0_tail(s0: f64, cfg: &EvalConfig) -> Result<f64> {
    let f = |u: f64| {
        let sigma = s0 / u;
        if sigma.is_finite() {
            xi2_finite(sigma, cfg)
        } else {
            Ok(1.0)
        }
    };
    Ok(try_integrate(Integrand::regular(f, 0.0, 1.0), cfg)? / (2.0 * s0))
}

/// The curve of infinitesimally sharp inclusions through `p`.
///
/// Left of `s₀` the formula is returned as is; it drops below 0 where the
/// curve leaves the parameter region.
pub fn t_sharp(p: ParamPoint, s: f64, cfg: &EvalConfig) -> Result<f64> {
    let (s0, t0) = p.base()?;
    if s.is_nan() || s <= 0.0 {
        return Err(Error::domain(format!("sharp curve needs s > 0, got {s}")));
    }
    if s == s0 {
        return Ok(t0);
    }
    let integral = if s.is_infinite() {
        log_xi0_tail(s0, cfg)?
    } else if s >= s0 {
        log_xi0_integral(s0, s, cfg)?
    } else {
        -log_xi0_integral(s, s0, cfg)?
    };
    Ok(1.0 - (1.0 - t0) * (-integral).exp())
}

/// Sharp-curve values on a nondecreasing grid, accumulating the integral
/// between neighbours outward from `s₀` instead of restarting at `s₀`.
fn sharp_on_grid(p: ParamPoint, grid: &[f64], cfg: &EvalConfig) -> Result<Vec<f64>> {
    let (s0, t0) = p.base()?;
    if let Some(&bad) = grid.iter().find(|s| !(**s > 0.0 && s.is_finite())) {
        return Err(Error::domain(format!("sharp curve needs finite s > 0, got {bad}")));
    }
    let mut integral = vec![0.0; grid.len()];
    let split = grid.partition_point(|&s| s < s0);
    let (mut acc, mut prev) = (0.0, s0);
    for j in split..grid.len() {
        acc += log_xi0_integral(prev, grid[j], cfg)?;
        integral[j] = acc;
        prev = grid[j];
    }
    let (mut acc, mut prev) = (0.0, s0);
    for j in (0..split).rev() {
        acc -= log_xi0_integral(grid[j], prev, cfg)?;
        integral[j] = acc;
        prev = grid[j];
    }
    Ok(integral
        .into_iter()
        .zip(grid)
        .map(|(i, &s)| if s == s0 { t0 } else { 1.0 - (1.0 - t0) * (-i).exp() })
        .collect())
}

/// `n` grid points from `smin` to `smax`, both included.
pub fn grid(smin: f64, smax: f64, n: usize, spacing: Spacing) -> Result<Vec<f64>> {
    if !(smin.is_finite() && smax.is_finite() && smin <= smax) {
        return Err(Error::domain(format!("sample range [{smin}, {smax}] is not finite and ordered")));
    }
    if n == 0 || (n == 1 && smin != smax) {
        return Err(Error::domain(format!("{n} samples cannot span [{smin}, {smax}]")));
    }
    if spacing == Spacing::Log && smin <= 0.0 {
        return Err(Error::domain("log spacing needs smin > 0"));
    }
    if smin == smax {
        return Ok(vec![smin; n]);
    }
    let last = (n - 1) as f64;
    let mut pts: Vec<f64> = (0..n)
        .map(|j| {
            let f = j as f64 / last;
            match spacing {
                Spacing::Even => smin + (smax - smin) * f,
                Spacing::Log => (smin.ln() + (smax.ln() - smin.ln()) * f).exp(),
            }
        })
        .collect();
    pts[0] = smin;
    pts[n - 1] = smax;
    Ok(pts)
}

/// Orders two points by `s`, then `t`.
pub(crate) fn canonical(p1: ParamPoint, p2: ParamPoint) -> (ParamPoint, ParamPoint) {
    let key = |p: &ParamPoint| (p.s.value(), p.t);
    if key(&p1).partial_cmp(&key(&p2)) == Some(std::cmp::Ordering::Greater) {
        (p2, p1)
    } else {
        (p1, p2)
    }
}

/// Samples one curve on `[smin, smax]`.
///
/// Forward, backward and sharp curves take one base point; the quasi-extremal
/// curves take two and sample `min` of the forward curves (on `s ≥ s₂`) or
/// `max` of the clamped backward curves (on `s ≤ s₁`).
pub fn sample_curve(
    kind: CurveKind,
    base: &[ParamPoint],
    smin: f64,
    smax: f64,
    n: usize,
    spacing: Spacing,
    cfg: &EvalConfig,
) -> Result<CurveSamples> {
    cfg.validate()?;
    let want = match kind {
        CurveKind::QuasiSup | CurveKind::QuasiInf => 2,
        _ => 1,
    };
    if base.len() != want {
        return Err(Error::domain(format!("{kind:?} curve takes {want} base point(s), got {}", base.len())));
    }
    let pts = grid(smin, smax, n, spacing)?;
    let mut s_star_meta = None;
    let mut clamped = false;
    let mut base_out = base.to_vec();

    let ts: Vec<f64> = match kind {
        CurveKind::Forward => pts.iter().map(|&s| t_forward(base[0], s, cfg)).collect::<Result<_>>()?,
        CurveKind::Sharp => sharp_on_grid(base[0], &pts, cfg)?,
        CurveKind::Backward => {
            s_star_meta = Some(s_star(base[0], cfg)?);
            let raw: Vec<f64> =
                pts.iter().map(|&s| t_backward_unclamped(base[0], s, cfg)).collect::<Result<_>>()?;
            clamped = raw.iter().any(|&t| t < 0.0);
            raw.into_iter().map(|t| t.max(0.0)).collect()
        }
        CurveKind::QuasiSup => {
            let (p1, p2) = canonical(base[0], base[1]);
            base_out = vec![p1, p2];
            if smin < p2.s.value() {
                return Err(Error::domain(format!("quasi-supremum curve lives on s >= {}", p2.s.value())));
            }
            pts.iter()
                .map(|&s| Ok(t_forward(p1, s, cfg)?.min(t_forward(p2, s, cfg)?)))
                .collect::<Result<_>>()?
        }
        CurveKind::QuasiInf => {
            let (p1, p2) = canonical(base[0], base[1]);
            base_out = vec![p1, p2];
            if smax > p1.s.value() {
                return Err(Error::domain(format!("quasi-infimum curve lives on s <= {}", p1.s.value())));
            }
            pts.iter()
                .map(|&s| {
                    let a = t_backward_unclamped(p1, s, cfg)?;
                    let b = t_backward_unclamped(p2, s, cfg)?;
                    clamped |= a.max(b) < 0.0;
                    Ok(a.max(b).max(0.0))
                })
                .collect::<Result<_>>()?
        }
    };

    Ok(CurveSamples {
        kind,
        base: base_out,
        spacing,
        samples: pts.into_iter().zip(ts).collect(),
        s_star: s_star_meta,
        clamped,
        cfg: *cfg,
    })
}
