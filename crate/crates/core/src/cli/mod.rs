//! Batch front end: subcommands over the full pipeline with text or JSON
//! output.
//!
//! Exit status is 0 when every check passes, 1 when a check fails and 2 for
//! usage, parse or input errors. JSON output is a single object carrying
//! `"schema": 1`, `"status"` and `"subcommand"`, plus a subcommand payload;
//! every number that can exceed native integer width is a decimal string.

mod expr;

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

pub use expr::parse_ratfunc;

use crate::burmann::{self, AlgebraicEquation};
use crate::exactpoly::{RatFunc, Rational};
use crate::holonomic::{self, ShiftOperator};
use crate::oracle::SequenceOracle;
use crate::series;
use crate::{Error, Result};

pub const SCHEMA_VERSION: u32 = 1;
pub const DEFAULT_SEQ_N_TO: usize = 10;
pub const DEFAULT_VERIFY_ORDER: usize = 30;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Parser, Debug)]
#[command(
    name = "algdiag",
    version,
    about = "Algebraic equations, ODEs and recurrences for [x^n] f(x)^n"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format.
    #[arg(long, value_enum, default_value = "text", global = true)]
    pub format: Format,
    /// Write the report to this file instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// Evaluate recurrence ranges on all cores.
    #[arg(long, global = true)]
    pub parallel: bool,
}

#[derive(Subcommand, Debug, Clone, PartialEq, Eq)]
pub enum Command {
    /// Print [x^n] f(x)^n for n = 0..=N.
    Seq {
        #[arg(long = "f")]
        f: String,
        #[arg(long = "n-to", default_value_t = DEFAULT_SEQ_N_TO)]
        n_to: usize,
    },
    /// Print the algebraic equation P(t, A) = 0.
    AlgEq {
        #[arg(long = "f")]
        f: String,
    },
    /// Check P(t, A_N) = 0 mod t^(N+1) and the parametric form against the
    /// diagonal coefficients.
    VerifySeries {
        #[arg(long = "f")]
        f: String,
        #[arg(long, default_value_t = DEFAULT_VERIFY_ORDER)]
        order: usize,
    },
    /// Print the derived annihilating differential operator.
    Ode {
        #[arg(long = "f")]
        f: String,
    },
    /// Print the recurrence induced by the derived operator.
    Rec {
        #[arg(long = "f")]
        f: String,
    },
    /// Check a recurrence file against [x^n] f(x)^n over a range.
    CheckRec {
        #[arg(long = "f")]
        f: String,
        #[arg(long)]
        rec: PathBuf,
        #[arg(long)]
        from: usize,
        #[arg(long)]
        to: usize,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Seq { .. } => "seq",
            Command::AlgEq { .. } => "alg-eq",
            Command::VerifySeries { .. } => "verify-series",
            Command::Ode { .. } => "ode",
            Command::Rec { .. } => "rec",
            Command::CheckRec { .. } => "check-rec",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub command: Command,
    pub format: Format,
    pub output: Option<PathBuf>,
    pub parallel: bool,
}

impl From<Cli> for RunConfig {
    fn from(c: Cli) -> Self {
        RunConfig {
            command: c.command,
            format: c.format,
            output: c.output,
            parallel: c.parallel,
        }
    }
}

/// What a run produced; the binary forwards it to the process streams.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Report {
    passed: bool,
    text: String,
    payload: Value,
}

pub fn run(config: &RunConfig) -> Outcome {
    let name = config.command.name();
    let report = match execute(config) {
        Ok(r) => r,
        Err(e) => {
            return Outcome {
                exit_code: 2,
                stdout: String::new(),
                stderr: format!("algdiag {name}: {e}\n"),
            }
        }
    };
    let status = if report.passed { "pass" } else { "fail" };
    let body = match config.format {
        Format::Text => report.text,
        Format::Json => {
            let mut obj = json!({ "schema": SCHEMA_VERSION, "status": status, "subcommand": name });
            if let (Value::Object(o), Value::Object(p)) = (&mut obj, report.payload) {
                o.extend(p);
            }
            serde_json::to_string_pretty(&obj).expect("serializable") + "\n"
        }
    };
    let exit_code = if report.passed { 0 } else { 1 };
    let mut stderr = String::new();
    if !report.passed {
        let _ = writeln!(stderr, "algdiag {name}: check failed");
    }
    match &config.output {
        Some(path) => match std::fs::write(path, &body) {
            Ok(()) => Outcome {
                exit_code,
                stdout: String::new(),
                stderr,
            },
            Err(e) => Outcome {
                exit_code: 2,
                stdout: String::new(),
                stderr: format!("algdiag {name}: cannot write {}: {e}\n", path.display()),
            },
        },
        None => Outcome {
            exit_code,
            stdout: body,
            stderr,
        },
    }
}

fn decimal(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

fn equation_for(f: &RatFunc) -> Result<AlgebraicEquation> {
    burmann::eliminate(&burmann::parametric_system(f)?)
}

fn diagonal_oracle(f: &RatFunc) -> SequenceOracle {
    let f = f.clone();
    SequenceOracle::new("[x^n] f^n", move |n| {
        series::diagonal_coeff(&f, n).expect("f validated before use")
    })
}

fn execute(config: &RunConfig) -> Result<Report> {
    match &config.command {
        Command::Seq { f, n_to } => {
            let f = parse_ratfunc(f)?;
            let values: Vec<String> = series::diagonal_series(&f, *n_to)?
                .coeffs()
                .iter()
                .map(decimal)
                .collect();
            Ok(Report {
                passed: true,
                text: values.iter().map(|v| format!("{v}\n")).collect(),
                payload: json!({ "n_to": n_to, "values": values }),
            })
        }
        Command::AlgEq { f } => {
            let eq = equation_for(&parse_ratfunc(f)?)?;
            Ok(Report {
                passed: true,
                text: format!("{eq}\n"),
                payload: json!({
                    "equation": eq.to_canonical(),
                    "text": eq.to_string(),
                    "deg_a": eq.deg_a(),
                    "deg_t": eq.deg_t(),
                }),
            })
        }
        Command::VerifySeries { f, order } => {
            let f = parse_ratfunc(f)?;
            let sys = burmann::parametric_system(&f)?;
            let eq = burmann::eliminate(&sys)?;
            let oracle = diagonal_oracle(&f);
            let algebraic = burmann::verify_algebraic(&eq, &oracle, *order);
            let (parametric, _) = burmann::parametric_series_check(
                &f,
                &sys.numerator(),
                &sys.denominator(),
                &oracle,
                *order,
            )?;
            let line = |name: &str, r: &burmann::SeriesReport| match &r.first_failure {
                None => format!("{name}: pass through t^{order}\n"),
                Some((k, res)) => format!("{name}: FAIL at t^{k} (residual {res})\n"),
            };
            Ok(Report {
                passed: algebraic.passed() && parametric.passed(),
                text: line("algebraic", &algebraic) + &line("parametric", &parametric),
                payload: json!({
                    "order": order,
                    "equation": eq.to_canonical(),
                    "algebraic": algebraic,
                    "parametric": parametric,
                }),
            })
        }
        Command::Ode { f } => {
            let op = holonomic::derive_ode(&equation_for(&parse_ratfunc(f)?)?)?;
            Ok(Report {
                passed: true,
                text: format!("{op}\n"),
                payload: json!({ "operator": op.to_json(), "text": op.to_string() }),
            })
        }
        Command::Rec { f } => {
            let op = holonomic::derive_ode(&equation_for(&parse_ratfunc(f)?)?)?;
            let rec = holonomic::ode_to_recurrence(&op)?;
            Ok(Report {
                passed: true,
                text: format!("{rec}\n"),
                payload: json!({ "recurrence": rec.to_json(), "text": rec.to_string() }),
            })
        }
        Command::CheckRec { f, rec, from, to } => {
            let f = parse_ratfunc(f)?;
            let src = std::fs::read_to_string(rec)
                .map_err(|e| Error::Invalid(format!("cannot read {}: {e}", rec.display())))?;
            let rec = ShiftOperator::from_json_str(&src)?;
            if to < from {
                return Err(Error::Invalid(format!("empty range {from}..{to}")));
            }
            let values = series::diagonal_series(&f, *to)?.coeffs().to_vec();
            let oracle = SequenceOracle::from_values("[x^n] f^n", values);
            let report = if config.parallel {
                holonomic::check_recurrence_par(&rec, &oracle, *from, *to)?
            } else {
                holonomic::check_recurrence(&rec, &oracle, *from, *to)?
            };
            let mut text = match &report.first_failure {
                None => format!("recurrence holds for n = {from}..{to}\n"),
                Some((n, r)) => format!(
                    "recurrence FAILS at n = {n} (residual {r}); {} failing indices\n",
                    report.failures
                ),
            };
            if !report.degenerate.is_empty() {
                let _ = writeln!(
                    text,
                    "leading coefficient vanishes at n = {:?}",
                    report.degenerate
                );
            }
            Ok(Report {
                passed: report.passed(),
                text,
                payload: json!({ "report": report }),
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(command: Command, format: Format) -> RunConfig {
        RunConfig {
            command,
            format,
            output: None,
            parallel: false,
        }
    }

    #[test]
    fn alg_eq_of_constant() {
        let out = run(&cfg(Command::AlgEq { f: "1".into() }, Format::Text));
        assert_eq!(out.exit_code, 0);
        assert_eq!(out.stdout, "A - 1\n");
    }

    #[test]
    fn parse_errors_exit_2() {
        let out = run(&cfg(Command::AlgEq { f: "1/(".into() }, Format::Text));
        assert_eq!(out.exit_code, 2);
        assert!(out.stderr.contains("syntax error"));
        let out = run(&cfg(
            Command::Seq {
                f: "x".into(),
                n_to: 3,
            },
            Format::Json,
        ));
        assert_eq!(out.exit_code, 2);
        assert!(out.stdout.is_empty());
    }

    #[test]
    fn json_envelope() {
        let out = run(&cfg(
            Command::Seq {
                f: "1/(1-x)".into(),
                n_to: 4,
            },
            Format::Json,
        ));
        let v: Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["schema"], 1);
        assert_eq!(v["status"], "pass");
        assert_eq!(v["subcommand"], "seq");
        assert_eq!(v["values"], json!(["1", "1", "3", "10", "35"]));
    }

    #[test]
    fn rational_values_print_as_fractions() {
        let out = run(&cfg(
            Command::Seq {
                f: "1/(2-x)".into(),
                n_to: 2,
            },
            Format::Text,
        ));
        // [x^1] (1/(2-x)) = 1/4
        assert_eq!(out.stdout.lines().nth(1), Some("1/4"));
    }
}
