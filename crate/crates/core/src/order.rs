//! Inclusion between classes, filtration checks along a parameter path, and
//! quasi-suprema / quasi-infima of incomparable pairs.
//!
//! For `s₁ < s₂` the smaller-`s` class can only be the subset, and it is one
//! exactly when `t₂` does not exceed the forward extremal curve from
//! `(s₁, t₁)` at `s₂`. At equal `s` the larger `t` is the subset.

use serde::Serialize;

use crate::config::EvalConfig;
use crate::curves::{canonical, sample_curve, t_forward, CurveKind, CurveSamples, ParamPoint, Spacing};
use crate::error::{Error, Result};

/// Default slack on the inclusion margin; a pair whose margin is at least
/// `-DEFAULT_INCLUSION_TOL` counts as included.
pub const DEFAULT_INCLUSION_TOL: f64 = 1e-11;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Relation {
    Equal,
    /// First ⊂ second.
    Subset,
    /// First ⊃ second.
    Superset,
    Incomparable,
}

impl Relation {
    pub fn name(self) -> &'static str {
        match self {
            Relation::Equal => "Equal",
            Relation::Subset => "Subset",
            Relation::Superset => "Superset",
            Relation::Incomparable => "Incomparable",
        }
    }

    /// The relation with the arguments swapped.
    pub fn flip(self) -> Relation {
        match self {
            Relation::Subset => Relation::Superset,
            Relation::Superset => Relation::Subset,
            r => r,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct InclusionRelation {
    pub relation: Relation,
    /// Threshold minus the `t` of the larger-`s` point (nonnegative means
    /// included); `t₁ - t₂` at equal `s`; 0 for equal or degenerate pairs.
    pub margin: f64,
    /// True when `|margin| ≤ tol`, i.e. the decision sits on the threshold.
    pub boundary: bool,
    pub tol: f64,
}

fn decided(relation: Relation, margin: f64, tol: f64) -> InclusionRelation {
    InclusionRelation { relation, margin, boundary: margin.abs() <= tol, tol }
}

/// [`includes_with_tol`] at [`DEFAULT_INCLUSION_TOL`].
pub fn includes(p1: ParamPoint, p2: ParamPoint, cfg: &EvalConfig) -> Result<InclusionRelation> {
    includes_with_tol(p1, p2, DEFAULT_INCLUSION_TOL, cfg)
}

/// Decides how the class of `p1` sits relative to the class of `p2`.
pub fn includes_with_tol(p1: ParamPoint, p2: ParamPoint, tol: f64, cfg: &EvalConfig) -> Result<InclusionRelation> {
    if !(tol.is_finite() && tol >= 0.0) {
        return Err(Error::domain(format!("inclusion tolerance must be finite and nonnegative, got {tol}")));
    }
    if p1.s.is_infinite() || p2.s.is_infinite() {
        return Err(Error::domain("s = inf is a limit only and takes no part in order decisions"));
    }
    if p1 == p2 {
        return Ok(decided(Relation::Equal, 0.0, tol));
    }
    // The degenerate class {identity} sits inside every class.
    match (p1.is_degenerate(), p2.is_degenerate()) {
        (true, true) => return Ok(decided(Relation::Equal, 0.0, tol)),
        (true, false) => return Ok(decided(Relation::Subset, 0.0, tol)),
        (false, true) => return Ok(decided(Relation::Superset, 0.0, tol)),
        (false, false) => {}
    }

    let (s1, s2) = (p1.s.value(), p2.s.value());
    if s1 == s2 {
        let margin = p1.t - p2.t;
        let relation = if margin >= 0.0 { Relation::Subset } else { Relation::Superset };
        return Ok(decided(relation, margin, tol));
    }
    let (low, high, forward) = if s1 < s2 { (p1, p2, true) } else { (p2, p1, false) };
    let margin = t_forward(low, high.s.value(), cfg)? - high.t;
    let relation = match (margin >= -tol, forward) {
        (false, _) => Relation::Incomparable,
        (true, true) => Relation::Subset,
        (true, false) => Relation::Superset,
    };
    Ok(decided(relation, margin, tol))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Violation {
    /// Index `j` of the pair `(j, j+1)`.
    pub index: usize,
    pub s: f64,
    pub s_next: f64,
    pub t_next: f64,
    /// `t_forward((s_j, t_j), s_{j+1})`, the largest admissible `t_{j+1}`.
    pub threshold: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FiltrationReport {
    pub is_filtration: bool,
    pub first_violation: Option<Violation>,
    pub n_pairs_checked: usize,
}

/// Checks that each class on the path contains its predecessor.
///
/// Checking stops at the first violating pair.
pub fn filtration_check(path: &[(f64, f64)], tol: f64, cfg: &EvalConfig) -> Result<FiltrationReport> {
    if path.is_empty() {
        return Err(Error::Malformed("empty path".into()));
    }
    if !(tol.is_finite() && tol >= 0.0) {
        return Err(Error::domain(format!("filtration tolerance must be finite and nonnegative, got {tol}")));
    }
    for (j, &(s, t)) in path.iter().enumerate() {
        if !(s.is_finite() && s > 0.0 && (0.0..1.0).contains(&t)) {
            return Err(Error::Malformed(format!("row {j}: ({s}, {t}) is outside (0, inf) x [0, 1)")));
        }
    }
    if let Some(j) = path.windows(2).position(|w| w[0].0 >= w[1].0) {
        return Err(Error::Malformed(format!("s is not strictly increasing at row {}", j + 1)));
    }

    let mut checked = 0;
    for (j, w) in path.windows(2).enumerate() {
        let (s, t) = w[0];
        let (s_next, t_next) = w[1];
        let threshold = t_forward(ParamPoint::new(s, t)?, s_next, cfg)?;
        checked += 1;
        if t_next > threshold + tol {
            return Ok(FiltrationReport {
                is_filtration: false,
                first_violation: Some(Violation { index: j, s, s_next, t_next, threshold }),
                n_pairs_checked: checked,
            });
        }
    }
    Ok(FiltrationReport { is_filtration: true, first_violation: None, n_pairs_checked: checked })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct QuasiExtremaResult {
    pub kind: CurveKind,
    pub comparable: bool,
    /// The supremum or infimum of a comparable pair.
    pub extremum: Option<ParamPoint>,
    /// The τ curve of an incomparable pair.
    pub curve: Option<CurveSamples>,
}

/// Quasi-supremum (`kind = QuasiSup`) or quasi-infimum (`QuasiInf`) of two classes.
///
/// Comparable pairs have a genuine supremum and infimum, returned as a point.
/// Otherwise `τ₁` is sampled on `[max(s₂, smin), smax]` or `τ₂` on
/// `[smin, min(s₁, smax)]`, with `s₁ ≤ s₂` after canonical reordering.
#[allow(clippy::too_many_arguments, clippy::neg_cmp_op_on_partial_ord)]
pub fn quasi_extrema(
    p1: ParamPoint,
    p2: ParamPoint,
    kind: CurveKind,
    smin: f64,
    smax: f64,
    n: usize,
    spacing: Spacing,
    cfg: &EvalConfig,
) -> Result<QuasiExtremaResult> {
    if !matches!(kind, CurveKind::QuasiSup | CurveKind::QuasiInf) {
        return Err(Error::domain(format!("{kind:?} is not a quasi-extremum kind")));
    }
    let (lo, hi) = canonical(p1, p2);
    let rel = includes(lo, hi, cfg)?;
    let sup = kind == CurveKind::QuasiSup;
    let extremum = match rel.relation {
        Relation::Equal => Some(lo),
        Relation::Subset => Some(if sup { hi } else { lo }),
        Relation::Superset => Some(if sup { lo } else { hi }),
        Relation::Incomparable => None,
    };
    if extremum.is_some() {
        return Ok(QuasiExtremaResult { kind, comparable: true, extremum, curve: None });
    }

    let (a, b) = if sup {
        (smin.max(hi.s.value()), smax)
    } else {
        (smin, smax.min(lo.s.value()))
    };
    if !(a <= b) {
        return Err(Error::domain(format!("requested range [{smin}, {smax}] misses the {kind:?} domain")));
    }
    let curve = sample_curve(kind, &[lo, hi], a, b, n, spacing, cfg)?;
    Ok(QuasiExtremaResult { kind, comparable: false, extremum: None, curve: Some(curve) })
}
