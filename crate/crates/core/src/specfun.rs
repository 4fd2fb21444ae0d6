//! The zero-balanced hypergeometric function `₂F₁(1, s; s+1; z)`, the
//! derived functions ξ₀…ξ₃ of the parameter `s`, and the auxiliary pair
//! ψ₁, ψ₂ whose single crossing controls the monotonicity of ξ₃.
//!
//! Every ξ function is an integral against the probability weight
//! `s x^(s-1)` on `[0, 1]`; those integrals go through
//! [`Endpoint::PowerWeight`](crate::quadrature::Endpoint), so no
//! finite differences or series acceleration is involved.

use std::f64::consts::LN_2;

use num_complex::Complex64;
use serde::{Serialize, Serializer};

use crate::config::EvalConfig;
use crate::error::{Error, Result};
use crate::quadrature::{integrate, Integrand};

/// Above this modulus the hypergeometric series is abandoned for the Euler integral.
pub const SERIES_RADIUS: f64 = 0.95;

/// Below this modulus ψ₁ is evaluated by its Taylor expansion in `w`.
pub const PSI1_SERIES_RADIUS: f64 = 1e-4;

/// A nonnegative value of the parameter `s`, with `+∞` allowed.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct SParam(f64);

impl SParam {
    pub const ZERO: SParam = SParam(0.0);
    pub const INFINITY: SParam = SParam(f64::INFINITY);

    pub fn new(s: f64) -> Result<Self> {
        if s.is_nan() || s < 0.0 {
            return Err(Error::domain(format!("s must be nonnegative, got {s}")));
        }
        Ok(SParam(s))
    }

    pub fn value(self) -> f64 {
        self.0
    }

    pub fn is_infinite(self) -> bool {
        self.0.is_infinite()
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0.0
    }

    /// The finite positive value, or `None` at either endpoint.
    fn interior(self) -> Option<f64> {
        (self.0 > 0.0 && self.0.is_finite()).then_some(self.0)
    }
}

impl TryFrom<f64> for SParam {
    type Error = Error;

    fn try_from(s: f64) -> Result<Self> {
        SParam::new(s)
    }
}

impl Serialize for SParam {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        if self.is_infinite() {
            serializer.serialize_str("inf")
        } else {
            serializer.serialize_f64(self.0)
        }
    }
}

fn require_positive(s: f64) -> Result<()> {
    if s.is_finite() && s > 0.0 {
        Ok(())
    } else {
        Err(Error::domain(format!("s must be finite and positive, got {s}")))
    }
}

/// `₂F₁(1, s; s+1; z) = 1 + Σ_{n≥1} s/(s+n) zⁿ` on the closed unit disk minus `z = 1`.
///
/// Inside `|z| < 0.95` the series is summed until the geometric tail bound
/// `|z|^(n+1)/(1-|z|)` drops below `series_tol`; otherwise the Euler integral
/// `∫_0^1 s x^(s-1)/(1-zx) dx` is used.
pub fn hyp2f1_1s(s: f64, z: Complex64, cfg: &EvalConfig) -> Result<Complex64> {
    require_positive(s)?;
    cfg.validate()?;
    let r = z.norm();
    if !r.is_finite() || r > 1.0 + 8.0 * f64::EPSILON {
        return Err(Error::domain(format!("|z| must not exceed 1, got |{z}| = {r}")));
    }
    if z == Complex64::new(1.0, 0.0) {
        return Err(Error::domain("z = 1 is the branch point of 2F1(1,s;s+1;z)"));
    }

    if r < SERIES_RADIUS {
        let mut sum = Complex64::new(1.0, 0.0);
        let mut power = Complex64::new(1.0, 0.0);
        let mut tail = 1.0 / (1.0 - r);
        for n in 1..=cfg.max_terms {
            power *= z;
            sum += power * (s / (s + n as f64));
            tail *= r;
            if tail * r < cfg.series_tol {
                return Ok(sum);
            }
        }
        Err(Error::convergence(format!(
            "hypergeometric series did not reach {:.1e} within {} terms at z = {z}",
            cfg.series_tol, cfg.max_terms
        )))
    } else {
        let one_minus_z = Complex64::new(1.0, 0.0) - z;
        // 1 - zx rewritten as (1 - x) + x(1 - z) keeps precision near z = 1, x = 1.
        integrate(
            Integrand::power_weighted(s, move |x: f64| 1.0 / ((1.0 - x) + one_minus_z * x)),
            cfg,
        )
    }
}

/// `F(s) = ₂F₁(1, s; s+1; -1)`, evaluated along the Euler-integral path.
pub fn hyp2f1_at_minus_one(s: f64, cfg: &EvalConfig) -> Result<f64> {
    Ok(hyp2f1_1s(s, Complex64::new(-1.0, 0.0), cfg)?.re)
}

/// `ξ₀(s) = ∫_0^1 (1-x)/(1+x) s x^(s-1) dx`, continuously extended by
/// `ξ₀(0) = 1` and `ξ₀(∞) = 0`.
pub fn xi0(s: SParam, cfg: &EvalConfig) -> Result<f64> {
    if s.is_zero() {
        return Ok(1.0);
    }
    if s.is_infinite() {
        return Ok(0.0);
    }
    xi0_finite(s.value(), cfg)
}

pub(crate) fn xi0_finite(s: f64, cfg: &EvalConfig) -> Result<f64> {
    require_positive(s)?;
    // (1-x)/(1+x) = tanh(y/2) with x = e^(-y)
    integrate(Integrand::power_weighted_log(s, |y: f64| (0.5 * y).tanh()), cfg)
}

/// `s² ξ₀'(s) = ∫_0^1 2 s² xˢ ln x/(1+x)² dx`.
///
/// Integrated in this scaled form so that the absolute quadrature tolerance
/// stays meaningful for large `s`, where `ξ₀'` itself is `O(1/s²)`.
pub fn s2_xi0_prime(s: f64, cfg: &EvalConfig) -> Result<f64> {
    require_positive(s)?;
    integrate(
        // 2s x ln x/(1+x)² = -s y/(2 cosh²(y/2)); cosh overflows to ∞ harmlessly.
        Integrand::power_weighted_log(s, move |y: f64| {
            let c = (0.5 * y).cosh();
            -s * y / (2.0 * c * c)
        }),
        cfg,
    )
}

/// `ξ₀'(s) = ∫_0^1 2 xˢ ln x/(1+x)² dx`.
pub fn xi0_prime(s: f64, cfg: &EvalConfig) -> Result<f64> {
    Ok(s2_xi0_prime(s, cfg)? / (s * s))
}

/// `ξ₁(s) = (1 - ξ₀(s))/(2s)`; `ξ₁(0) = ln 2`, `ξ₁(∞) = 0`.
pub fn xi1(s: SParam, cfg: &EvalConfig) -> Result<f64> {
    match s.interior() {
        None if s.is_zero() => Ok(LN_2),
        None => Ok(0.0),
        Some(v) => Ok((1.0 - xi0_finite(v, cfg)?) / (2.0 * v)),
    }
}

/// `ξ₁(s) = ∫_0^1 xˢ/(1+x) dx`, an independent route to ξ₁.
pub fn xi1_direct(s: f64, cfg: &EvalConfig) -> Result<f64> {
    require_positive(s)?;
    integrate(Integrand::power_weighted(s, move |x: f64| x / (s * (1.0 + x))), cfg)
}

/// `ξ₂(s) = 2s ξ₀(s)`; `ξ₂(0) = 0`, `ξ₂(∞) = 1`.
pub fn xi2(s: SParam, cfg: &EvalConfig) -> Result<f64> {
    match s.interior() {
        None if s.is_zero() => Ok(0.0),
        None => Ok(1.0),
        Some(v) => xi2_finite(v, cfg),
    }
}

/// Above `s = 1` the product `2s ξ₀` is integrated directly, so the absolute
/// tolerance applies to an `O(1)` quantity rather than to `ξ₀ ~ 1/(2s)`.
pub(crate) fn xi2_finite(s: f64, cfg: &EvalConfig) -> Result<f64> {
    if s <= 1.0 {
        return Ok(2.0 * s * xi0_finite(s, cfg)?);
    }
    integrate(Integrand::power_weighted_log(s, move |y: f64| 2.0 * s * (0.5 * y).tanh()), cfg)
}

/// `ξ₃(s) = (1 - ξ₀(s))/(2s ξ₀(s))`; `ξ₃(0) = ln 2`, `ξ₃(∞) = 1`.
pub fn xi3(s: SParam, cfg: &EvalConfig) -> Result<f64> {
    match s.interior() {
        None if s.is_zero() => Ok(LN_2),
        None => Ok(1.0),
        Some(v) => {
            let x0 = xi0_finite(v, cfg)?;
            Ok((1.0 - x0) / (2.0 * v * x0))
        }
    }
}

/// `(1 - ξ₀)ξ₀ + s ξ₀'`.
///
/// Since `ξ₃' = -g/(2 s² ξ₀²)`, this is negative exactly where ξ₃ increases.
pub fn xi3_slope_numerator(s: f64, cfg: &EvalConfig) -> Result<f64> {
    let x0 = xi0_finite(s, cfg)?;
    let sp = s2_xi0_prime(s, cfg)? / s;
    Ok((1.0 - x0) * x0 + sp)
}

/// `log(1 + w)` without cancellation for small `|w|`.
fn clog1p(w: Complex64) -> Complex64 {
    if w.norm() < 0.5 {
        let (a, b) = (w.re, w.im);
        let re = 0.5 * (2.0 * a + a * a + b * b).ln_1p();
        let im = b.atan2(1.0 + a);
        Complex64::new(re, im)
    } else {
        (1.0 + w).ln()
    }
}

fn psi_domain(x: Complex64) -> Result<()> {
    if !(x.re.is_finite() && x.im.is_finite()) {
        return Err(Error::domain(format!("ψ argument must be finite, got {x}")));
    }
    if x.re < 0.0 {
        return Err(Error::domain(format!("ψ is defined for Re x ≥ 0, got {x}")));
    }
    Ok(())
}

/// `w = x²/(4(1+x))`, after checking that the principal logarithms used by
/// ψ₁ and ψ₂ stay off their branch cut.
fn psi_w(x: Complex64) -> Result<Complex64> {
    psi_domain(x)?;
    let one_plus_x = 1.0 + x;
    if one_plus_x.re <= 0.0 {
        return Err(Error::domain(format!("Re(1 + x) ≤ 0 at x = {x}")));
    }
    let w = x * x / (4.0 * one_plus_x);
    if (1.0 + w).re <= 0.0 {
        return Err(Error::domain(format!("Re(1 + x²/(4(1+x))) ≤ 0 at x = {x}")));
    }
    Ok(w)
}

/// `ψ₁(x) = (2(1+x)/x²) log(1 + x²/(4(1+x)))`, with `ψ₁(0) = 1/2`.
///
/// Rewritten as `log(1+w)/(2w)`; near the origin the quotient is replaced by
/// six terms of its Taylor series.
pub fn psi1(x: Complex64) -> Result<Complex64> {
    let w = psi_w(x)?;
    if x.norm() < PSI1_SERIES_RADIUS {
        // log(1+w)/w = 1 - w/2 + w²/3 - w³/4 + w⁴/5 - w⁵/6
        let mut acc = Complex64::new(0.0, 0.0);
        for k in (0..6).rev() {
            let c = if k % 2 == 0 { 1.0 } else { -1.0 } / (k as f64 + 1.0);
            acc = acc * w + c;
        }
        return Ok(0.5 * acc);
    }
    Ok(clog1p(w) / (2.0 * w))
}

/// `ψ₂(x) = (2 + x + (1+x) log(1+x))/(2+x)²`.
pub fn psi2(x: Complex64) -> Result<Complex64> {
    psi_w(x)?;
    let two_x = 2.0 + x;
    Ok((two_x + (1.0 + x) * clog1p(x)) / (two_x * two_x))
}

/// Hand-differentiated `ψ₁'`.
pub fn psi1_prime(x: Complex64) -> Result<Complex64> {
    let w = psi_w(x)?;
    let one_plus_x = 1.0 + x;
    let dw_dx = x * (2.0 + x) / (4.0 * one_plus_x * one_plus_x);
    // d/dw [log(1+w)/w]
    let dl_dw = if w.norm() < 1e-3 {
        // Σ_{k≥1} (-1)^k k w^(k-1)/(k+1)
        let mut acc = Complex64::new(0.0, 0.0);
        for k in (1..=10).rev() {
            let c = if k % 2 == 0 { 1.0 } else { -1.0 } * k as f64 / (k as f64 + 1.0);
            acc = acc * w + c;
        }
        acc
    } else {
        (w / (1.0 + w) - clog1p(w)) / (w * w)
    };
    Ok(0.5 * dl_dw * dw_dx)
}

/// Hand-differentiated `ψ₂'`.
pub fn psi2_prime(x: Complex64) -> Result<Complex64> {
    psi_w(x)?;
    let two_x = 2.0 + x;
    let log = clog1p(x);
    let n = two_x + (1.0 + x) * log;
    let dn = 2.0 + log;
    Ok((dn * two_x - 2.0 * n) / (two_x * two_x * two_x))
}

/// `φ(x) = 6 - 10x + 2x² - 24x³ - x⁴`, the sign certificate on `(0, 0.4]`.
pub fn phi_poly(x: f64) -> f64 {
    (((-x - 24.0) * x + 2.0) * x - 10.0) * x + 6.0
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn cfg() -> EvalConfig {
        EvalConfig::default()
    }

    fn sp(s: f64) -> SParam {
        SParam::new(s).unwrap()
    }

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn sparam_validation() {
        assert!(SParam::new(-1e-300).is_err());
        assert!(SParam::new(f64::NAN).is_err());
        assert!(SParam::new(0.0).unwrap().is_zero());
        assert!(SParam::INFINITY.is_infinite());
        assert_ne!(SParam::INFINITY, sp(1e308));
    }

    #[test]
    fn hyp_closed_forms() {
        let v = hyp2f1_1s(1.0, c(-1.0, 0.0), &cfg()).unwrap();
        assert!((v.re - LN_2).abs() < 1e-13 && v.im.abs() < 1e-15);
        assert_eq!(hyp2f1_1s(2.0, c(0.0, 0.0), &cfg()).unwrap(), c(1.0, 0.0));
        // ₂F₁(1,1;2;z) = -ln(1-z)/z, on the series and the integral sides of the switch.
        for z in [c(0.5, 0.3), c(-0.9, 0.1), c(0.0, 0.97), c(0.6, -0.78), c(0.0, 1.0)] {
            let v = hyp2f1_1s(1.0, z, &cfg()).unwrap();
            let exact = -(1.0 - z).ln() / z;
            assert!((v - exact).norm() < 1e-12, "z={z}: {v} vs {exact}");
        }
    }

    #[test]
    fn series_and_integral_agree_across_the_switch() {
        let series_cfg = cfg();
        for &s in &[0.3, 1.7, 12.0] {
            for z in [c(0.94, 0.0), c(-0.6, 0.74), c(0.1, -0.93)] {
                let series = hyp2f1_1s(s, z, &series_cfg).unwrap();
                let euler: Complex64 = integrate(
                    Integrand::power_weighted(s, move |x: f64| 1.0 / (1.0 - z * x)),
                    &series_cfg,
                )
                .unwrap();
                assert!((series - euler).norm() < 1e-11, "s={s} z={z}");
            }
        }
    }

    #[test]
    fn hyp_domain_and_convergence_errors() {
        let cf = cfg();
        assert!(matches!(hyp2f1_1s(1.0, c(1.0, 0.0), &cf), Err(Error::Domain(_))));
        assert!(matches!(hyp2f1_1s(1.0, c(0.8, 0.8), &cf), Err(Error::Domain(_))));
        assert!(matches!(hyp2f1_1s(0.0, c(0.5, 0.0), &cf), Err(Error::Domain(_))));
        assert!(matches!(hyp2f1_1s(-2.0, c(0.5, 0.0), &cf), Err(Error::Domain(_))));
        let tight = EvalConfig { max_terms: 5, ..cf };
        assert!(matches!(hyp2f1_1s(1.0, c(0.9, 0.0), &tight), Err(Error::Convergence(_))));
        let shallow = EvalConfig { max_depth: 2, ..cf };
        let near_one = Complex64::from_polar(1.0, 1e-3);
        assert!(matches!(hyp2f1_1s(1.0, near_one, &shallow), Err(Error::Convergence(_))));
    }

    #[test]
    fn f_closed_forms_and_bounds() {
        let cf = cfg();
        assert!((hyp2f1_at_minus_one(1.0, &cf).unwrap() - LN_2).abs() < 1e-12);
        assert!((hyp2f1_at_minus_one(2.0, &cf).unwrap() - (2.0 - 2.0 * LN_2)).abs() < 1e-12);
        for s in [0.1, 1.0, 10.0, 100.0] {
            let f = hyp2f1_at_minus_one(s, &cf).unwrap();
            assert!(f > 0.5 && f < 1.0, "F({s}) = {f}");
        }
    }

    #[test]
    fn xi0_closed_forms_and_endpoints() {
        let cf = cfg();
        assert!((xi0(sp(1.0), &cf).unwrap() - (2.0 * LN_2 - 1.0)).abs() < 1e-12);
        assert!((xi0(sp(2.0), &cf).unwrap() - (3.0 - 4.0 * LN_2)).abs() < 1e-12);
        assert_eq!(xi0(SParam::ZERO, &cf).unwrap(), 1.0);
        assert_eq!(xi0(SParam::INFINITY, &cf).unwrap(), 0.0);
    }

    #[test]
    fn xi0_half_matches_hypergeometric_route() {
        let cf = cfg();
        let f = hyp2f1_1s(0.5, c(-1.0, 0.0), &cf).unwrap().re;
        let x = xi0(sp(0.5), &cf).unwrap();
        assert!((f - (x + 1.0) / 2.0).abs() < 1e-10);
    }

    #[test]
    fn xi0_prime_sign_fd_and_scaling() {
        let cf = cfg();
        let d1 = xi0_prime(1.0, &cf).unwrap();
        let h = 1e-5;
        let fd = (xi0(sp(1.0 + h), &cf).unwrap() - xi0(sp(1.0 - h), &cf).unwrap()) / (2.0 * h);
        assert!((d1 - fd).abs() < 1e-8, "{d1} vs {fd}");
        for s in [1e-3, 0.2, 1.0, 7.0, 300.0] {
            assert!(xi0_prime(s, &cf).unwrap() < 0.0);
        }
        assert!(xi0_prime(1.0, &cf).unwrap() > 4.0 * xi0_prime(2.0, &cf).unwrap());
    }

    #[test]
    fn xi_family_closed_forms() {
        let cf = cfg();
        assert!((xi1(sp(1.0), &cf).unwrap() - (1.0 - LN_2)).abs() < 1e-12);
        assert!((xi2(sp(2.0), &cf).unwrap() - (12.0 - 16.0 * LN_2)).abs() < 1e-11);
        let x3 = xi3(sp(1.0), &cf).unwrap();
        assert!((x3 - (1.0 - LN_2) / (2.0 * LN_2 - 1.0)).abs() < 1e-11);
        assert!(x3 > LN_2 && x3 < 1.0);
        assert_eq!(xi1(SParam::ZERO, &cf).unwrap(), LN_2);
        assert_eq!(xi1(SParam::INFINITY, &cf).unwrap(), 0.0);
        assert_eq!(xi2(SParam::ZERO, &cf).unwrap(), 0.0);
        assert_eq!(xi2(SParam::INFINITY, &cf).unwrap(), 1.0);
        assert_eq!(xi3(SParam::ZERO, &cf).unwrap(), LN_2);
        assert_eq!(xi3(SParam::INFINITY, &cf).unwrap(), 1.0);
    }

    #[test]
    fn xi1_routes_agree() {
        let cf = cfg();
        for s in [1e-2, 0.1, 0.5, 1.0, 3.0, 40.0, 1e3] {
            let a = xi1(sp(s), &cf).unwrap();
            let b = xi1_direct(s, &cf).unwrap();
            assert!((a - b).abs() < 10.0 * cf.quad_tol, "s={s}: {a} vs {b}");
        }
    }

    #[test]
    fn slope_numerator_is_negative() {
        let cf = cfg();
        for s in [0.01, 1.0, 100.0] {
            assert!(xi3_slope_numerator(s, &cf).unwrap() < 0.0, "s={s}");
        }
        // Closed form at s = 1 built from ξ₀(1) = 2 ln 2 - 1.
        let x0 = 2.0 * LN_2 - 1.0;
        let expected = (1.0 - x0) * x0 + xi0_prime(1.0, &cf).unwrap();
        assert!((xi3_slope_numerator(1.0, &cf).unwrap() - expected).abs() < 1e-12);
    }

    #[test]
    fn psi_values() {
        assert_eq!(psi1(c(0.0, 0.0)).unwrap(), c(0.5, 0.0));
        assert_eq!(psi2(c(0.0, 0.0)).unwrap(), c(0.5, 0.0));
        let p1 = psi1(c(10.0, 0.0)).unwrap().re;
        let p2 = psi2(c(10.0, 0.0)).unwrap().re;
        assert!(p1 < 0.261 && p2 > 0.266, "{p1} {p2}");
        // The ratio tends to 2 only logarithmically: 1.6779 at 1e6, 1.9033 at 1e21.
        let ratio = |x: f64| psi1(c(x, 0.0)).unwrap().re / psi2(c(x, 0.0)).unwrap().re;
        assert!((ratio(1e6) - 1.677_872_279_496_281).abs() < 1e-12);
        let mut prev = ratio(1e6);
        for e in [9, 12, 15, 18, 21] {
            let r = ratio(10f64.powi(e));
            assert!(r > prev && r < 2.0, "{e}: {r}");
            prev = r;
        }
        assert!((prev - 1.903_299_408_888_294).abs() < 1e-12);
        assert!((prev - 2.0).abs() < 0.1);
    }

    #[test]
    fn psi1_series_and_closed_form_agree_at_the_crossover() {
        for x in [0.99e-4f64, 1.01e-4] {
            let w = x * x / (4.0 * (1.0 + x));
            let exact = w.ln_1p() / (2.0 * w);
            let v = psi1(c(x, 0.0)).unwrap().re;
            assert!((v - exact).abs() < 1e-15);
        }
    }

    #[test]
    fn psi_domain_errors() {
        assert!(matches!(psi1(c(-1.0, 0.0)), Err(Error::Domain(_))));
        assert!(matches!(psi2(c(-1e-9, 3.0)), Err(Error::Domain(_))));
        assert!(psi1_prime(c(-0.5, 0.0)).is_err());
        assert!(psi1(c(0.0, 2.0)).is_ok());
    }

    #[test]
    fn psi_derivatives_match_complex_central_differences() {
        let h = 1e-6;
        for x in [c(0.4, -2.0), c(3.0, 1.0), c(10.0, 2.0), c(0.01, 0.0), c(1e-3, 1e-3), c(50.0, -7.0)] {
            for (f, df) in [
                (psi1 as fn(Complex64) -> Result<Complex64>, psi1_prime as fn(Complex64) -> Result<Complex64>),
                (psi2, psi2_prime),
            ] {
                let fd = (f(x + h).unwrap() - f(x - h).unwrap()) / (2.0 * h);
                let an = df(x).unwrap();
                assert!((fd - an).norm() < 1e-7 * (1.0 + an.norm()), "x={x}: {an} vs {fd}");
            }
        }
    }

    #[test]
    fn phi_values() {
        assert_eq!(phi_poly(0.0), 6.0);
        assert!((phi_poly(0.4) - 0.7584).abs() < 1e-14);
        assert_eq!(phi_poly(1.0), -27.0);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn psi_conjugate_symmetry(re in 0.0f64..20.0, im in -5.0f64..5.0) {
            let x = c(re, im);
            for f in [psi1 as fn(Complex64) -> Result<Complex64>, psi2] {
                let a = f(x.conj()).unwrap();
                let b = f(x).unwrap().conj();
                prop_assert!((a - b).norm() <= 1e-15 * (1.0 + a.norm()));
            }
        }

        #[test]
        fn xi_monotone_on_random_pairs(lo in -2.5f64..2.5, gap in 0.01f64..1.0) {
            let cf = cfg();
            let s1 = 10f64.powf(lo);
            let s2 = s1 * (1.0 + gap);
            prop_assert!(xi0(sp(s1), &cf).unwrap() > xi0(sp(s2), &cf).unwrap());
            prop_assert!(xi1(sp(s1), &cf).unwrap() > xi1(sp(s2), &cf).unwrap());
            prop_assert!(xi2(sp(s1), &cf).unwrap() < xi2(sp(s2), &cf).unwrap());
            prop_assert!(xi3(sp(s1), &cf).unwrap() < xi3(sp(s2), &cf).unwrap());
            prop_assert!(s2_xi0_prime(s1, &cf).unwrap() > s2_xi0_prime(s2, &cf).unwrap());
        }

        #[test]
        fn xi_identity(lo in -3.0f64..3.0) {
            let cf = cfg();
            let s = sp(10f64.powf(lo));
            let lhs = xi3(s, &cf).unwrap() * xi2(s, &cf).unwrap();
            let rhs = 1.0 - xi0(s, &cf).unwrap();
            prop_assert!((lhs - rhs).abs() < 10.0 * cf.quad_tol);
        }
    }
}
