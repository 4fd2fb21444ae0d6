use serde::Serialize;

use crate::error::{Error, Result};

/// Default abscissa tolerance for [`find_root`].
pub const DEFAULT_ROOT_TOL: f64 = 1e-12;

const MAX_ITER: usize = 200;

/// An interval with a certified sign change.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Bracket {
    pub lo: f64,
    pub hi: f64,
    pub f_lo: f64,
    pub f_hi: f64,
}

impl Bracket {
    pub fn new(lo: f64, hi: f64, f_lo: f64, f_hi: f64) -> Result<Self> {
        let ok = lo.is_finite()
            && hi.is_finite()
            && lo < hi
            && f_lo.is_finite()
            && f_hi.is_finite()
            && f_lo.signum() * f_hi.signum() < 0.0
            && f_lo != 0.0
            && f_hi != 0.0;
        if ok {
            Ok(Bracket { lo, hi, f_lo, f_hi })
        } else {
            Err(Error::InvalidBracket { lo, hi, f_lo, f_hi })
        }
    }

    /// Evaluates `f` at both ends and validates the sign change.
    pub fn evaluate<F>(f: &mut F, lo: f64, hi: f64) -> Result<Self>
    where
        F: FnMut(f64) -> Result<f64>,
    {
        let f_lo = f(lo)?;
        let f_hi = f(hi)?;
        Bracket::new(lo, hi, f_lo, f_hi)
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }
}

/// Brent's method: inverse quadratic interpolation and secant steps,
/// safeguarded by bisection. Terminates once the enclosing interval is
/// narrower than `tol` (plus a few ulps of the root).
pub fn find_root<F>(mut f: F, bracket: Bracket, tol: f64) -> Result<f64>
where
    F: FnMut(f64) -> Result<f64>,
{
    if !(tol.is_finite() && tol > 0.0) {
        return Err(Error::domain(format!("root tolerance must be positive, got {tol}")));
    }
    let Bracket { lo, hi, f_lo, f_hi } = Bracket::new(bracket.lo, bracket.hi, bracket.f_lo, bracket.f_hi)?;

    let (mut a, mut b, mut fa, mut fb) = (lo, hi, f_lo, f_hi);
    let (mut c, mut fc) = (a, fa);
    let mut d = b - a;
    let mut e = d;

    for _ in 0..MAX_ITER {
        if (fb > 0.0) == (fc > 0.0) {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
        if fc.abs() < fb.abs() {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }

        let tol1 = 2.0 * f64::EPSILON * b.abs() + 0.5 * tol;
        let xm = 0.5 * (c - b);
        if xm.abs() <= tol1 || fb == 0.0 {
            return Ok(b);
        }

        if e.abs() >= tol1 && fa.abs() > fb.abs() {
            let s = fb / fa;
            let (mut p, mut q);
            if a == c {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                let qq = fa / fc;
                let r = fb / fc;
                p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
                q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if p > 0.0 {
                q = -q;
            }
            p = p.abs();
            let min1 = 3.0 * xm * q - (tol1 * q).abs();
            let min2 = (e * q).abs();
            if 2.0 * p < min1.min(min2) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }

        a = b;
        fa = fb;
        b += if d.abs() > tol1 { d } else { tol1.copysign(xm) };
        fb = f(b)?;
        if !fb.is_finite() {
            return Err(Error::NonFinite(b));
        }
    }
    Err(Error::convergence(format!("root finder did not converge in {MAX_ITER} iterations")))
}
