//! `pi-ladder`: exact ζ(2k) and β(2k+1) values and their numerical checks.
//!
//! Exit codes: 0 when everything passes, 1 when a verification fails,
//! 2 on a usage error.

mod render;

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use pi_ladder::basel::{basel_values, check_basel_identities};
use pi_ladder::suite::verify_suite;
use pi_ladder::{closed_form, run_ladder, Series, VerificationReport};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
    Latex,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SeriesArg {
    Zeta,
    Phi,
    Lambda,
}

impl From<SeriesArg> for Series {
    fn from(s: SeriesArg) -> Series {
        match s {
            SeriesArg::Zeta => Series::Zeta,
            SeriesArg::Phi => Series::Phi,
            SeriesArg::Lambda => Series::Lambda,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "pi-ladder",
    version,
    about = "Exact zeta(2k) and beta(2k+1) from an integration ladder"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the ladder polynomials for s = 2..=max-s.
    Ladder {
        #[arg(long, allow_negative_numbers = true)]
        max_s: i64,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// Print one exact value as a rational multiple of π^s.
    Value {
        #[arg(value_enum)]
        series: SeriesArg,
        #[arg(long, allow_negative_numbers = true)]
        s: i64,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// Check ladder values against exact oracles, partial sums and Fourier coefficients.
    Verify {
        #[arg(long, allow_negative_numbers = true)]
        max_s: i64,
        #[arg(long, allow_negative_numbers = true)]
        tol: f64,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// Reproduce the integral evaluation of zeta(2) by quadrature.
    Quad {
        #[arg(long, allow_negative_numbers = true)]
        tol: f64,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
}

enum Outcome {
    Passed,
    Failed,
}

struct UsageError(String);

fn ladder_depth(max_s: i64) -> Result<u32, UsageError> {
    u32::try_from(max_s)
        .ok()
        .filter(|s| *s >= 2)
        .ok_or_else(|| UsageError(format!("--max-s must be an integer ≥ 2, got {max_s}")))
}

fn tolerance(tol: f64) -> Result<f64, UsageError> {
    if tol > 0.0 && tol.is_finite() {
        Ok(tol)
    } else {
        Err(UsageError(format!(
            "--tol must be a positive number, got {tol}"
        )))
    }
}

fn report_outcome(reports: &[VerificationReport]) -> Outcome {
    let mut ok = true;
    for r in reports.iter().filter(|r| !r.passed) {
        ok = false;
        eprintln!(
            "FAIL {}: abs_error {:e} exceeds tolerance {:e} (numeric: {})",
            r.subject, r.abs_error, r.tolerance, r.numeric
        );
    }
    if ok {
        Outcome::Passed
    } else {
        Outcome::Failed
    }
}

fn run(command: Command, out: &mut String) -> Result<Outcome, UsageError> {
    match command {
        Command::Ladder { max_s, format } => {
            let rungs = run_ladder(ladder_depth(max_s)?).map_err(|e| UsageError(e.to_string()))?;
            out.push_str(&match format {
                OutputFormat::Text => render::ladder_text(&rungs),
                OutputFormat::Json => render::ladder_json(&rungs),
                OutputFormat::Latex => render::ladder_latex(&rungs),
            });
            Ok(Outcome::Passed)
        }
        Command::Value { series, s, format } => {
            let series = Series::from(series);
            let s = u32::try_from(s)
                .ok()
                .filter(|s| series.accepts(*s))
                .ok_or_else(|| {
                    UsageError(format!(
                        "{series}(s) requires {} s ≥ 2, got {s}",
                        series.parity()
                    ))
                })?;
            let v = closed_form(series, s).map_err(|e| UsageError(e.to_string()))?;
            out.push_str(&match format {
                OutputFormat::Text => render::value_text(&v),
                OutputFormat::Json => render::value_json(&v),
                OutputFormat::Latex => render::value_latex(&v),
            });
            Ok(Outcome::Passed)
        }
        Command::Verify { max_s, tol, format } => {
            let s_max = ladder_depth(max_s)?;
            let tol = tolerance(tol)?;
            let reports = verify_suite(s_max, tol).map_err(|e| UsageError(e.to_string()))?;
            out.push_str(&match format {
                OutputFormat::Text => render::reports_text(&reports),
                OutputFormat::Json => render::reports_json(&reports),
                OutputFormat::Latex => render::reports_latex(&reports),
            });
            Ok(report_outcome(&reports))
        }
        Command::Quad { tol, format } => {
            let tol = tolerance(tol)?;
            let values = basel_values(tol).map_err(|e| UsageError(e.to_string()))?;
            let identities = check_basel_identities(tol).map_err(|e| UsageError(e.to_string()))?;
            out.push_str(&match format {
                OutputFormat::Text => render::quad_text(&values, &identities),
                OutputFormat::Json => render::reports_json(&identities),
                OutputFormat::Latex => {
                    let all: Vec<_> = values.iter().chain(&identities).cloned().collect();
                    render::reports_latex(&all)
                }
            });
            let all: Vec<_> = values.into_iter().chain(identities).collect();
            Ok(report_outcome(&all))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    let code = match run(cli.command, &mut out) {
        Ok(Outcome::Passed) => ExitCode::SUCCESS,
        Ok(Outcome::Failed) => ExitCode::from(1),
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    let mut stdout = std::io::stdout().lock();
    if stdout
        .write_all(out.as_bytes())
        .and_then(|_| stdout.flush())
        .is_err()
    {
        return ExitCode::from(1);
    }
    code
}
