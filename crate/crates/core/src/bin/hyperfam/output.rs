use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

/// Formats `v` with `digits` significant digits in positional notation.
/// Values whose shortest exact form is no longer than that print as is.
pub fn fmt_num(v: f64, digits: u8) -> String {
    if !v.is_finite() {
        return if v.is_nan() { "nan".into() } else if v > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if v == v.trunc() && v.abs() < 1e15 {
        return format!("{}", v as i64);
    }
    let short = format!("{v}");
    let significant = short.trim_start_matches(['-', '0', '.']).chars().filter(|c| c.is_ascii_digit()).count();
    if significant <= digits as usize {
        return short;
    }
    let exp = v.abs().log10().floor() as i32;
    let decimals = (digits as i32 - 1 - exp).max(0) as usize;
    format!("{v:.decimals$}")
}

pub struct Out {
    inner: Box<dyn Write>,
    pub digits: u8,
}

impl Out {
    pub fn open(path: Option<&Path>, digits: u8) -> io::Result<Out> {
        let inner: Box<dyn Write> = match path {
            Some(p) => Box::new(BufWriter::new(File::create(p)?)),
            None => Box::new(BufWriter::new(io::stdout().lock())),
        };
        Ok(Out { inner, digits })
    }

    pub fn line(&mut self, s: &str) -> io::Result<()> {
        self.inner.write_all(s.as_bytes())?;
        self.inner.write_all(b"\n")
    }

    /// One CSV row of numbers.
    pub fn row(&mut self, vals: &[f64]) -> io::Result<()> {
        let cells: Vec<String> = vals.iter().map(|&v| fmt_num(v, self.digits)).collect();
        self.line(&cells.join(","))
    }

    pub fn json<T: serde::Serialize>(&mut self, value: &T) -> io::Result<()> {
        serde_json::to_writer_pretty(&mut self.inner, value)?;
        self.inner.write_all(b"\n")
    }

    pub fn finish(mut self) -> io::Result<()> {
        self.inner.flush()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn number_format() {
        assert_eq!(fmt_num(1.0, 12), "1");
        assert_eq!(fmt_num(0.0, 12), "0");
        assert_eq!(fmt_num(-3.0, 12), "-3");
        assert_eq!(fmt_num(2.0 * std::f64::consts::LN_2 - 1.0, 12), "0.386294361120");
        assert_eq!(fmt_num(0.19314718055994531, 6), "0.193147");
        assert_eq!(fmt_num(13.324222, 4), "13.32");
        assert_eq!(fmt_num(2.5e-7, 3), "0.00000025");
        assert_eq!(fmt_num(0.19, 12), "0.19");
        assert_eq!(fmt_num(-0.126, 2), "-0.13");
        assert_eq!(fmt_num(1.0 / 3.0, 4), "0.3333");
        assert_eq!(fmt_num(f64::INFINITY, 3), "inf");
    }
}
