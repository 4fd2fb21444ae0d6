mod args;
mod commands;
mod output;

use std::process::ExitCode;

use clap::Parser;

use hyperfam::EvalConfig;

use args::{Cli, Command, Format};
use commands::{CliError, Status};
use output::Out;

fn config(cli: &Cli) -> Result<EvalConfig, CliError> {
    let mut cfg = EvalConfig::default();
    if let Some(q) = cli.quad_tol {
        cfg = cfg.with_quad_tol(q);
    }
    if let Some(s) = cli.series_tol {
        cfg = cfg.with_series_tol(s);
    }
    cfg.validate()?;
    Ok(cfg)
}

fn run(cli: &Cli) -> Status {
    let cfg = config(cli)?;
    let default_fmt = match cli.command {
        Command::Verify(_) => Format::Json,
        _ => Format::Csv,
    };
    let fmt = cli.format.unwrap_or(default_fmt);
    let mut out = Out::open(cli.output.as_deref(), cli.precision)?;
    let code = match &cli.command {
        Command::Eval(a) => commands::eval(a, &cfg, fmt, &mut out)?,
        Command::Curve(a) => commands::curve(a, &cfg, fmt, &mut out)?,
        Command::Include(a) => commands::include(a, &cfg, fmt, &mut out)?,
        Command::Filtration(a) => commands::filtration(a, &cfg, fmt, &mut out)?,
        Command::Quasi(a) => commands::quasi(a, &cfg, fmt, &mut out)?,
        Command::Verify(a) => commands::verify(a, &cfg, fmt, &mut out)?,
    };
    out.finish()?;
    Ok(code)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("hyperfam: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
