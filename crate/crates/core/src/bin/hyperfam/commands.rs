use std::fs::File;
use std::io::{self, Read};

use num_complex::Complex64;

use hyperfam::curves::{grid, sample_curve, CurveKind, ParamPoint};
use hyperfam::order::{filtration_check, includes, quasi_extrema};
use hyperfam::specfun::{self, SParam};
use hyperfam::verify;
use hyperfam::{EvalConfig, Error};

use crate::args::{
    CurveArg, CurveArgs, EvalArgs, FiltrationArgs, Format, GridArgs, PairArgs, QuasiArgs, QuasiKind, Suite, VerifyArgs,
    Which,
};
use crate::output::{fmt_num, Out};

#[derive(Debug)]
pub enum CliError {
    Lib(Error),
    Io(io::Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Lib(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Lib(e) if e.is_usage() => 2,
            CliError::Lib(_) => 3,
            CliError::Io(_) => 2,
        }
    }
}

/// Exit status of a command that ran to completion.
pub type Status = Result<u8, CliError>;

fn points(g: &GridArgs) -> Result<Vec<f64>, Error> {
    match (g.s, g.smin, g.smax, g.n) {
        (Some(s), ..) => Ok(vec![s]),
        (None, Some(a), Some(b), Some(n)) => grid(a, b, n, g.spacing.into()),
        _ => Err(Error::Domain("give either --s or all of --smin, --smax, --n".into())),
    }
}

fn eval_one(which: Which, s: f64, z: Complex64, cfg: &EvalConfig) -> Result<Complex64, Error> {
    let real = |v: f64| Complex64::new(v, 0.0);
    Ok(match which {
        Which::Xi0 => real(specfun::xi0(SParam::new(s)?, cfg)?),
        Which::Xi1 => real(specfun::xi1(SParam::new(s)?, cfg)?),
        Which::Xi2 => real(specfun::xi2(SParam::new(s)?, cfg)?),
        Which::Xi3 => real(specfun::xi3(SParam::new(s)?, cfg)?),
        Which::Xi0p => real(specfun::xi0_prime(s, cfg)?),
        Which::F => real(specfun::hyp2f1_at_minus_one(s, cfg)?),
        Which::G => real(specfun::xi3_slope_numerator(s, cfg)?),
        Which::Psi1 => specfun::psi1(real(s))?,
        Which::Psi2 => specfun::psi2(real(s))?,
        Which::Hyp => specfun::hyp2f1_1s(s, z, cfg)?,
    })
}

pub fn eval(a: &EvalArgs, cfg: &EvalConfig, fmt: Format, out: &mut Out) -> Status {
    let z = Complex64::new(a.z_re, a.z_im);
    let xs = points(&a.grid)?;
    let vals: Vec<Complex64> = xs.iter().map(|&s| eval_one(a.which, s, z, cfg)).collect::<Result<_, _>>()?;
    let complex = matches!(a.which, Which::Psi1 | Which::Psi2 | Which::Hyp);
    match fmt {
        Format::Csv => {
            out.line(if complex { "s,re,im" } else { "s,value" })?;
            for (s, v) in xs.iter().zip(&vals) {
                if complex {
                    out.row(&[*s, v.re, v.im])?;
                } else {
                    out.row(&[*s, v.re])?;
                }
            }
        }
        Format::Json => {
            let rows: Vec<serde_json::Value> = xs
                .iter()
                .zip(&vals)
                .map(|(s, v)| {
                    if complex {
                        serde_json::json!({ "s": s, "re": v.re, "im": v.im })
                    } else {
                        serde_json::json!({ "s": s, "value": v.re })
                    }
                })
                .collect();
            out.json(&serde_json::json!({ "which": format!("{:?}", a.which).to_lowercase(), "rows": rows }))?;
        }
    }
    Ok(0)
}

fn write_samples(samples: &[(f64, f64)], out: &mut Out) -> io::Result<()> {
    out.line("s,t")?;
    for &(s, t) in samples {
        out.row(&[s, t])?;
    }
    Ok(())
}

pub fn curve(a: &CurveArgs, cfg: &EvalConfig, fmt: Format, out: &mut Out) -> Status {
    let kind = match a.kind {
        CurveArg::Forward => CurveKind::Forward,
        CurveArg::Backward => CurveKind::Backward,
        CurveArg::Sharp => CurveKind::Sharp,
    };
    let base = ParamPoint::new(a.s0, a.t0)?;
    let c = sample_curve(kind, &[base], a.smin, a.smax, a.n, a.spacing.into(), cfg)?;
    match fmt {
        Format::Csv => {
            if let Some(star) = c.s_star {
                out.line(&format!("# s_star={} clamped={}", fmt_num(star, out.digits), c.clamped))?;
            }
            write_samples(&c.samples, out)?;
        }
        Format::Json => out.json(&c)?,
    }
    Ok(0)
}

fn pair(p: &PairArgs) -> Result<(ParamPoint, ParamPoint), Error> {
    Ok((ParamPoint::new(p.s1, p.t1)?, ParamPoint::new(p.s2, p.t2)?))
}

pub fn include(a: &PairArgs, cfg: &EvalConfig, fmt: Format, out: &mut Out) -> Status {
    let (p1, p2) = pair(a)?;
    let r = includes(p1, p2, cfg)?;
    match fmt {
        Format::Csv => out.line(&format!("{} margin={}", r.relation.name(), fmt_num(r.margin, out.digits)))?,
        Format::Json => out.json(&r)?,
    }
    Ok(0)
}

fn read_path(path: &std::path::Path) -> Result<Vec<(f64, f64)>, CliError> {
    let mut text = String::new();
    if path.as_os_str() == "-" {
        io::stdin().read_to_string(&mut text)?;
    } else {
        File::open(path)?.read_to_string(&mut text)?;
    }
    let malformed = |msg: String| CliError::Lib(Error::Malformed(msg));
    let mut rdr = csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let headers = rdr.headers().map_err(|e| malformed(e.to_string()))?.clone();
    let col = |name: &str| {
        headers.iter().position(|h| h == name).ok_or_else(|| malformed(format!("missing column `{name}`")))
    };
    let (si, ti) = (col("s")?, col("t")?);
    let mut path_pts = Vec::new();
    for (j, rec) in rdr.records().enumerate() {
        let rec = rec.map_err(|e| malformed(e.to_string()))?;
        let num = |i: usize| -> Result<f64, CliError> {
            let cell = rec.get(i).unwrap_or("");
            cell.parse().map_err(|_| malformed(format!("row {}: `{cell}` is not a number", j + 1)))
        };
        path_pts.push((num(si)?, num(ti)?));
    }
    Ok(path_pts)
}

pub fn filtration(a: &FiltrationArgs, cfg: &EvalConfig, fmt: Format, out: &mut Out) -> Status {
    let path = read_path(&a.input)?;
    let rep = filtration_check(&path, a.tol, cfg)?;
    match fmt {
        Format::Csv => {
            out.line("is_filtration,n_pairs_checked,index,s,s_next,t_next,threshold")?;
            let mut cells = vec![rep.is_filtration.to_string(), rep.n_pairs_checked.to_string()];
            match rep.first_violation {
                Some(v) => {
                    cells.push(v.index.to_string());
                    for x in [v.s, v.s_next, v.t_next, v.threshold] {
                        cells.push(fmt_num(x, out.digits));
                    }
                }
                None => cells.extend(std::iter::repeat_n(String::new(), 5)),
            }
            out.line(&cells.join(","))?;
        }
        Format::Json => out.json(&rep)?,
    }
    Ok(if rep.is_filtration { 0 } else { 1 })
}

pub fn quasi(a: &QuasiArgs, cfg: &EvalConfig, fmt: Format, out: &mut Out) -> Status {
    let (p1, p2) = pair(&a.pair)?;
    let kind = match a.kind {
        QuasiKind::Sup => CurveKind::QuasiSup,
        QuasiKind::Inf => CurveKind::QuasiInf,
    };
    let r = quasi_extrema(p1, p2, kind, a.smin, a.smax, a.n, a.spacing.into(), cfg)?;
    match fmt {
        Format::Csv => match (&r.extremum, &r.curve) {
            (Some(p), _) => write_samples(&[(p.s.value(), p.t)], out)?,
            (None, Some(c)) => write_samples(&c.samples, out)?,
            (None, None) => unreachable!("incomparable pairs always carry a curve"),
        },
        Format::Json => out.json(&r)?,
    }
    Ok(0)
}

pub fn verify(a: &VerifyArgs, cfg: &EvalConfig, fmt: Format, out: &mut Out) -> Status {
    let rep = match a.suite {
        Suite::Appendix => verify::appendix_report(cfg)?,
        Suite::Xi => verify::xi_theorem_suite(&verify::default_xi_grid(), cfg)?,
        Suite::Curves => verify::curve_order_suite(&verify::default_curve_points(), cfg)?,
        Suite::Witness => verify::default_witness_suite(cfg)?,
        Suite::All => verify::run_all(cfg)?,
    };
    match fmt {
        Format::Json => out.json(&rep)?,
        Format::Csv => {
            out.line("name,margin,pass")?;
            for c in &rep.checks {
                out.line(&format!("\"{}\",{},{}", c.name.replace('"', "\"\""), fmt_num(c.margin, out.digits), c.pass))?;
            }
        }
    }
    Ok(if rep.pass { 0 } else { 1 })
}
