//! Numeric engine: adaptive quadrature, bracketed root finding and
//! argument-principle zero counting.

mod contour;
mod kronrod;
mod roots;

pub use contour::{contour_log_residue, LogResidue, Rectangle, DEFAULT_PANELS, MAX_PANELS};
pub use kronrod::{adaptive, adaptive_with_breaks, Estimate, QuadValue};
pub use roots::{find_root, Bracket, DEFAULT_ROOT_TOL};

use crate::config::EvalConfig;
use crate::error::{Error, Result};

/// Declared behavior of an integrand at the left endpoint.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Endpoint {
    /// Integrate `f` over `[a, b]` as given.
    Regular,
    /// Integrate `s x^(s-1) f(x)` over `[0, 1]`.
    ///
    /// The weight is removed exactly by `u = x^s`; with `u = e^(-τ)` the rule
    /// then sees `e^(-τ) f(e^(-τ/s))` on `[0, POWER_WEIGHT_CUTOFF]`. The
    /// `x^(s-1)` singularity never reaches it, and neither does the
    /// `u^(1/s)` endpoint behavior a plain `u` variable would leave behind.
    PowerWeight { s: f64 },
    /// As `PowerWeight`, but `f` is handed `y = -ln x ∈ (0, ∞)` instead of
    /// `x`, so integrands can form `1 - x` as `-expm1(-y)` without cancellation.
    PowerWeightLog { s: f64 },
}

/// Truncation point in `τ = -s ln x`; the dropped tail is `e^(-64) sup|f|`.
pub const POWER_WEIGHT_CUTOFF: f64 = 64.0;

/// A function together with its interval and endpoint behavior.
#[derive(Debug, Clone, Copy)]
pub struct Integrand<F> {
    pub f: F,
    pub a: f64,
    pub b: f64,
    pub endpoint: Endpoint,
}

impl<F> Integrand<F> {
    pub fn regular(f: F, a: f64, b: f64) -> Self {
        Integrand { f, a, b, endpoint: Endpoint::Regular }
    }

    /// `∫_0^1 s x^(s-1) f(x) dx`.
    pub fn power_weighted(s: f64, f: F) -> Self {
        Integrand { f, a: 0.0, b: 1.0, endpoint: Endpoint::PowerWeight { s } }
    }

    /// `∫_0^1 s x^(s-1) f(-ln x) dx`.
    pub fn power_weighted_log(s: f64, f: F) -> Self {
        Integrand { f, a: 0.0, b: 1.0, endpoint: Endpoint::PowerWeightLog { s } }
    }
}

/// Integrates an infallible integrand to `cfg.quad_tol` absolute error.
pub fn integrate<V, F>(integrand: Integrand<F>, cfg: &EvalConfig) -> Result<V>
where
    V: QuadValue,
    F: FnMut(f64) -> V,
{
    let Integrand { mut f, a, b, endpoint } = integrand;
    try_integrate(Integrand { f: move |x| Ok(f(x)), a, b, endpoint }, cfg)
}

/// Like [`integrate`], for integrands that can fail (e.g. nested quadrature).
pub fn try_integrate<V, F>(integrand: Integrand<F>, cfg: &EvalConfig) -> Result<V>
where
    V: QuadValue,
    F: FnMut(f64) -> Result<V>,
{
    cfg.validate()?;
    let Integrand { mut f, a, b, endpoint } = integrand;
    match endpoint {
        Endpoint::Regular => Ok(adaptive(f, a, b, cfg.quad_tol, cfg.max_depth)?.value),
        Endpoint::PowerWeight { s } => {
            check_power_weight(s, a, b)?;
            let inv = s.recip();
            let g = move |tau: f64| Ok(f((-tau * inv).exp())? * (-tau).exp());
            Ok(adaptive_with_breaks(g, &tau_breaks(s), cfg.quad_tol, cfg.max_depth)?.value)
        }
        Endpoint::PowerWeightLog { s } => {
            check_power_weight(s, a, b)?;
            let inv = s.recip();
            let g = move |tau: f64| Ok(f(tau * inv)? * (-tau).exp());
            Ok(adaptive_with_breaks(g, &tau_breaks(s), cfg.quad_tol, cfg.max_depth)?.value)
        }
    }
}

/// Halving breakpoints from the cutoff down past `min(s, 1)/64`: `f(e^(-τ/s))`
/// varies on the scale `τ ~ s`, the weight on `τ ~ 1`.
fn tau_breaks(s: f64) -> Vec<f64> {
    let floor = s.min(1.0) / 64.0;
    let mut pts = vec![0.0];
    let mut p = POWER_WEIGHT_CUTOFF;
    while p > floor {
        pts.push(p);
        p *= 0.5;
    }
    pts.push(p);
    pts.sort_by(f64::total_cmp);
    pts
}

fn check_power_weight(s: f64, a: f64, b: f64) -> Result<()> {
    if !(s.is_finite() && s > 0.0) {
        return Err(Error::domain(format!("power weight exponent must be positive, got {s}")));
    }
    if a != 0.0 || b != 1.0 {
        return Err(Error::domain("power-weighted integrands live on [0, 1]"));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::f64::consts::LN_2;

    fn cfg() -> EvalConfig {
        EvalConfig::default()
    }

    #[test]
    fn weight_integrates_to_one() {
        let v: f64 = integrate(Integrand::power_weighted(0.3, |_x: f64| 1.0), &cfg()).unwrap();
        assert!((v - 1.0).abs() < 1e-12);
    }

    #[test]
    fn log_coordinate_matches_plain_weight() {
        for &s in &[0.01, 0.7, 3.0, 250.0] {
            let plain: f64 = integrate(Integrand::power_weighted(s, |x: f64| x * x), &cfg()).unwrap();
            let logc: f64 =
                integrate(Integrand::power_weighted_log(s, |y: f64| (-2.0 * y).exp()), &cfg()).unwrap();
            let exact = s / (s + 2.0);
            assert!((plain - exact).abs() < 1e-12 && (logc - exact).abs() < 1e-12, "s={s}");
        }
    }

    #[test]
    fn closed_form_xi0_at_one() {
        let v: f64 =
            integrate(Integrand::regular(|x: f64| (1.0 - x) / (1.0 + x), 0.0, 1.0), &cfg()).unwrap();
        assert!((v - (2.0 * LN_2 - 1.0)).abs() < 1e-12);
    }

    #[test]
    fn derivative_integral_matches_central_difference() {
        // ∫_0^1 2x ln x/(1+x)^2 dx against a central difference of
        // s ↦ ∫_0^1 (1-x)/(1+x) s x^(s-1) dx evaluated by direct quadrature.
        let c = cfg();
        let direct: f64 = integrate(
            Integrand::regular(|x: f64| 2.0 * x * x.ln() / ((1.0 + x) * (1.0 + x)), 0.0, 1.0),
            &c,
        )
        .unwrap();
        let xi0 = |s: f64| -> f64 {
            integrate(
                Integrand::regular(move |x: f64| (1.0 - x) / (1.0 + x) * s * x.powf(s - 1.0), 0.0, 1.0),
                &c,
            )
            .unwrap()
        };
        let h = 1e-5;
        let fd = (xi0(1.0 + h) - xi0(1.0 - h)) / (2.0 * h);
        assert!((direct - fd).abs() < 1e-8, "{direct} vs {fd}");
    }

    #[test]
    fn power_weight_rejects_bad_exponent_and_interval() {
        let bad = Integrand { f: |_x: f64| 1.0, a: 0.0, b: 2.0, endpoint: Endpoint::PowerWeight { s: 1.0 } };
        assert!(integrate::<f64, _>(bad, &cfg()).is_err());
        assert!(integrate::<f64, _>(Integrand::power_weighted(0.0, |_x: f64| 1.0), &cfg()).is_err());
        assert!(integrate::<f64, _>(Integrand::power_weighted(-1.0, |_x: f64| 1.0), &cfg()).is_err());
    }

    #[test]
    fn substituted_matches_direct_for_s_at_least_one() {
        let c = cfg();
        for &s in &[1.0, 1.5, 2.0, 3.7, 8.0] {
            let h = |x: f64| (1.0 - x) / (1.0 + x);
            let sub: f64 = integrate(Integrand::power_weighted(s, h), &c).unwrap();
            let direct: f64 =
                integrate(Integrand::regular(move |x: f64| s * x.powf(s - 1.0) * h(x), 0.0, 1.0), &c)
                    .unwrap();
            assert!((sub - direct).abs() < 10.0 * c.quad_tol, "s={s}: {sub} vs {direct}");
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn integrate_is_linear(
            alpha in -3.0f64..3.0,
            beta in -3.0f64..3.0,
            p in 0.1f64..4.0,
            q in -2.0f64..2.0,
            b in 0.5f64..3.0,
        ) {
            let c = cfg();
            let f = move |x: f64| (p * x).sin() + x * x;
            let g = move |x: f64| (q * x).exp() / (1.0 + x);
            let lhs: f64 = integrate(Integrand::regular(move |x| alpha * f(x) + beta * g(x), 0.0, b), &c).unwrap();
            let fi: f64 = integrate(Integrand::regular(f, 0.0, b), &c).unwrap();
            let gi: f64 = integrate(Integrand::regular(g, 0.0, b), &c).unwrap();
            prop_assert!((lhs - (alpha * fi + beta * gi)).abs() < 10.0 * c.quad_tol);
        }
    }
}
