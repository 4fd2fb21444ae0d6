//! Globally adaptive 21-point Gauss-Kronrod integration.
//!
//! The rule and the error heuristics follow QUADPACK's `qk21`/`qag`: each
//! panel is estimated with the Kronrod rule, the embedded 10-point Gauss rule
//! supplies the error estimate, and the panel with the largest estimated error
//! is bisected until the summed estimate meets the absolute tolerance.

use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::ops::{Add, Mul, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Kronrod abscissae on [0, 1]; odd indices are the Gauss nodes.
#[allow(clippy::excessive_precision)]
const XGK: [f64; 11] = [
    0.995_657_163_025_808_080_735_527_280_689_003,
    0.973_906_528_517_171_720_077_964_012_084_452,
    0.930_157_491_355_708_226_001_207_180_059_508,
    0.865_063_366_688_984_510_732_096_688_423_493,
    0.780_817_726_586_416_897_063_717_578_345_042,
    0.679_409_568_299_024_406_234_327_365_114_874,
    0.562_757_134_668_604_683_339_000_099_272_694,
    0.433_395_394_129_247_190_799_265_943_165_784,
    0.294_392_862_701_460_198_131_126_603_103_866,
    0.148_874_338_981_631_210_884_826_001_129_720,
    0.0,
];

#[allow(clippy::excessive_precision)]
const WGK: [f64; 11] = [
    0.011_694_638_867_371_874_278_064_396_062_192,
    0.032_558_162_307_964_727_478_818_972_459_390,
    0.054_755_896_574_351_996_031_381_300_244_580,
    0.075_039_674_810_919_952_767_043_140_916_190,
    0.093_125_454_583_697_605_535_065_465_083_366,
    0.109_387_158_802_297_641_899_210_590_325_805,
    0.123_491_976_262_065_851_077_600_525_832_484,
    0.134_709_217_311_473_325_928_054_001_771_707,
    0.142_775_938_577_060_080_797_094_273_138_717,
    0.147_739_104_901_338_491_374_841_515_972_068,
    0.149_445_554_002_916_905_664_936_468_389_821,
];

#[allow(clippy::excessive_precision)]
const WG: [f64; 5] = [
    0.066_671_344_308_688_137_593_568_809_893_332,
    0.149_451_349_150_580_593_145_776_339_657_697,
    0.219_086_362_515_982_043_995_534_934_228_163,
    0.269_266_719_309_996_355_091_226_921_569_469,
    0.295_524_224_714_752_870_173_892_994_651_338,
];

/// Hard cap on live panels, independent of the depth cap.
const MAX_SEGMENTS: usize = 50_000;

/// Values an integrand may return: real or complex.
pub trait QuadValue:
    Copy + Default + Add<Output = Self> + Sub<Output = Self> + Mul<f64, Output = Self>
{
    fn magnitude(&self) -> f64;
    fn is_finite_value(&self) -> bool;
}

impl QuadValue for f64 {
    fn magnitude(&self) -> f64 {
        self.abs()
    }
    fn is_finite_value(&self) -> bool {
        self.is_finite()
    }
}

impl QuadValue for Complex64 {
    fn magnitude(&self) -> f64 {
        self.norm()
    }
    fn is_finite_value(&self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }
}

/// Value and error estimate of a single rule application or of a whole run.
#[derive(Debug, Clone, Copy)]
pub struct Estimate<V> {
    pub value: V,
    pub error: f64,
    /// Number of panels in the final partition.
    pub segments: usize,
}

fn sample<V, F>(f: &mut F, x: f64) -> Result<V>
where
    V: QuadValue,
    F: FnMut(f64) -> Result<V>,
{
    let v = f(x)?;
    if v.is_finite_value() {
        Ok(v)
    } else {
        Err(Error::NonFinite(x))
    }
}

/// Double-precision floor on the achievable absolute error, relative to `∫|f|`.
const ROUNDOFF_FLOOR: f64 = 100.0 * f64::EPSILON;

/// One application of the 21-point rule on `[a, b]`: value, error estimate
/// and `∫|f|` over the panel.
pub(crate) fn gk21<V, F>(f: &mut F, a: f64, b: f64) -> Result<(V, f64, f64)>
where
    V: QuadValue,
    F: FnMut(f64) -> Result<V>,
{
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);

    let mut fv1 = [V::default(); 10];
    let mut fv2 = [V::default(); 10];

    let fc = sample(f, center)?;
    let mut resk = fc * WGK[10];
    let mut resg = V::default();
    let mut resabs = fc.magnitude() * WGK[10];

    for j in 0..10 {
        let dx = half * XGK[j];
        let f1 = sample(f, center - dx)?;
        let f2 = sample(f, center + dx)?;
        fv1[j] = f1;
        fv2[j] = f2;
        let sum = f1 + f2;
        resk = resk + sum * WGK[j];
        resabs += WGK[j] * (f1.magnitude() + f2.magnitude());
        if j % 2 == 1 {
            resg = resg + sum * WG[j / 2];
        }
    }

    let reskh = resk * 0.5;
    let mut resasc = WGK[10] * (fc - reskh).magnitude();
    for j in 0..10 {
        resasc += WGK[j] * ((fv1[j] - reskh).magnitude() + (fv2[j] - reskh).magnitude());
    }

    let value = resk * half;
    let scale = half.abs();
    let resabs = resabs * scale;
    let resasc = resasc * scale;
    let mut err = (resk - resg).magnitude() * scale;

    if resasc != 0.0 && err != 0.0 {
        err = resasc * (200.0 * err / resasc).powf(1.5).min(1.0);
    }
    if resabs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        err = err.max(50.0 * f64::EPSILON * resabs);
    }
    Ok((value, err, resabs))
}

struct Segment<V> {
    a: f64,
    b: f64,
    value: V,
    error: f64,
    abs: f64,
    depth: u32,
}

impl<V> PartialEq for Segment<V> {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl<V> Eq for Segment<V> {}

impl<V> PartialOrd for Segment<V> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<V> Ord for Segment<V> {
    // Largest error first; ties broken by position so the schedule is deterministic.
    fn cmp(&self, other: &Self) -> Ordering {
        self.error
            .total_cmp(&other.error)
            .then_with(|| other.a.total_cmp(&self.a))
    }
}

/// Adaptive integration of `f` over the finite interval `[a, b]`.
///
/// Stops once the summed error estimate is below `tol`, or below
/// `100 ε ∫|f|` when that floor is larger and `tol` is out of reach in
/// double precision.
pub fn adaptive<V, F>(f: F, a: f64, b: f64, tol: f64, max_depth: u32) -> Result<Estimate<V>>
where
    V: QuadValue,
    F: FnMut(f64) -> Result<V>,
{
    adaptive_with_breaks(f, &[a, b], tol, max_depth)
}

/// [`adaptive`] over `[points[0], points[last]]`, seeded with one segment per
/// consecutive pair of the strictly increasing `points`.
///
/// Breakpoints at the scales where `f` has structure keep the first pass from
/// sampling straight past a narrow peak.
pub fn adaptive_with_breaks<V, F>(mut f: F, points: &[f64], tol: f64, max_depth: u32) -> Result<Estimate<V>>
where
    V: QuadValue,
    F: FnMut(f64) -> Result<V>,
{
    let ok = points.len() >= 2
        && points.iter().all(|p| p.is_finite())
        && points.windows(2).all(|w| w[0] < w[1]);
    if !ok {
        return Err(Error::domain(format!("integration breakpoints {points:?} are not a finite increasing list")));
    }

    let mut heap = BinaryHeap::new();
    let mut total_error = 0.0;
    let mut total_abs = 0.0;
    for w in points.windows(2) {
        let (value, error, abs) = gk21(&mut f, w[0], w[1])?;
        heap.push(Segment { a: w[0], b: w[1], value, error, abs, depth: 0 });
        total_error += error;
        total_abs += abs;
    }

    while total_error > tol.max(ROUNDOFF_FLOOR * total_abs) {
        let worst = heap.pop().expect("heap holds at least one segment");
        if worst.depth >= max_depth {
            return Err(Error::convergence(format!(
                "quadrature depth cap {max_depth} reached near [{}, {}] (error estimate {:.3e} > {tol:.3e})",
                worst.a, worst.b, total_error
            )));
        }
        if heap.len() + 2 > MAX_SEGMENTS {
            return Err(Error::convergence(format!(
                "quadrature exceeded {MAX_SEGMENTS} segments (error estimate {total_error:.3e})"
            )));
        }
        let mid = 0.5 * (worst.a + worst.b);
        if !(worst.a < mid && mid < worst.b) {
            return Err(Error::convergence(format!(
                "quadrature segment [{}, {}] cannot be bisected further",
                worst.a, worst.b
            )));
        }
        let (lv, le, la) = gk21(&mut f, worst.a, mid)?;
        let (rv, re, ra) = gk21(&mut f, mid, worst.b)?;
        total_error += le + re - worst.error;
        total_abs += la + ra - worst.abs;
        let depth = worst.depth + 1;
        heap.push(Segment { a: worst.a, b: mid, value: lv, error: le, abs: la, depth });
        heap.push(Segment { a: mid, b: worst.b, value: rv, error: re, abs: ra, depth });

        // Re-sum periodically so cancellation in the running totals cannot stall the loop.
        if heap.len() % 64 == 0 {
            total_error = heap.iter().map(|s| s.error).sum();
            total_abs = heap.iter().map(|s| s.abs).sum();
        }
    }

    let mut segments: Vec<Segment<V>> = heap.into_vec();
    segments.sort_by(|x, y| x.a.total_cmp(&y.a));
    let value = segments.iter().fold(V::default(), |acc, s| acc + s.value);
    let error = segments.iter().map(|s| s.error).sum();
    Ok(Estimate { value, error, segments: segments.len() })
}
