//! Command-line front end. Exit codes: 0 success, 1 failed check, 2 usage or I/O error.

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::error::Error;
use crate::form::{build_form, render, MatrixFormat, Sign};
use crate::graph::{build_dual_graph, to_dot};
use crate::invariants::{atlas, verify_all_with_fault, verify_main_theorem, AtlasFormat};
use crate::sequence::{parse_sigma, SigmaWord};
use crate::tiling::{poly, MarkSet};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "gss", version, about = "Intersection forms and discriminants of cyclic s/r sequences")]
pub struct Cli {
    /// Write output to this file instead of standard output.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute all invariants of one word and check the identities between them.
    Analyze {
        sigma: String,
        #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
        format: ReportFormat,
    },
    /// Check every word up to the given size.
    Verify {
        #[arg(long = "max-n", value_parser = clap::value_parser!(u32).range(1..))]
        max_n: u32,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// Tabulate every word up to the given size.
    Atlas {
        #[arg(long = "max-n", value_parser = clap::value_parser!(u32).range(1..))]
        max_n: u32,
        #[arg(long, value_enum, default_value_t = AtlasArg::Csv)]
        format: AtlasArg,
    },
    /// Print the intersection form.
    Matrix {
        sigma: String,
        #[arg(long, value_enum, default_value_t = MatrixArg::Json)]
        format: MatrixArg,
        #[arg(long, value_enum, default_value_t = SignArg::Form)]
        sign: SignArg,
    },
    /// Print the dual graph.
    Graph {
        sigma: String,
        /// Shorthand for `--format dot`.
        #[arg(long)]
        dot: bool,
        #[arg(long, value_enum, default_value_t = GraphArg::Json)]
        format: GraphArg,
    },
    /// Print the polynomial of a mark set.
    Poly {
        /// Marked indices, comma separated.
        #[arg(long = "A", value_delimiter = ',', num_args = 0..)]
        marks: Vec<usize>,
        /// Number of variables.
        #[arg(long = "N")]
        modulus: usize,
        #[arg(long, value_enum, default_value_t = PolyArg::Text)]
        format: PolyArg,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AtlasArg {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MatrixArg {
    Json,
    Csv,
    Latex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SignArg {
    Form,
    Surface,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GraphArg {
    Json,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PolyArg {
    Text,
    Json,
}

enum Failure {
    Usage(String),
    Check,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(stderr, "{e}");
                EXIT_USAGE
            } else {
                let _ = write!(stdout, "{e}");
                EXIT_OK
            };
            return code;
        }
    };
    match execute(&cli, stdout) {
        Ok(()) => EXIT_OK,
        Err(Failure::Check) => EXIT_CHECK_FAILED,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn word(text: &str) -> Result<SigmaWord, Failure> {
    parse_sigma(text).map_err(|e| Failure::Usage(format!("{text:?}: {e}")))
}

fn execute(cli: &Cli, stdout: &mut dyn Write) -> Result<(), Failure> {
    match &cli.output {
        Some(path) => {
            let file = File::create(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            let mut out = BufWriter::new(file);
            let result = dispatch(&cli.command, &mut out);
            out.flush().map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            result
        }
        None => dispatch(&cli.command, stdout),
    }
}

fn dispatch(command: &Command, out: &mut dyn Write) -> Result<(), Failure> {
    match command {
        Command::Analyze { sigma, format } => {
            let report = verify_main_theorem(&word(sigma)?);
            match format {
                ReportFormat::Json => writeln!(out, "{}", report.to_json())?,
                ReportFormat::Text => write!(out, "{}", report.to_text())?,
            }
            if !report.passed() {
                return Err(Failure::Check);
            }
        }
        Command::Verify { max_n, format, inject_fault } => {
            let summary = verify_all_with_fault(*max_n as usize, *inject_fault);
            match format {
                ReportFormat::Text => {
                    for (w, failed) in &summary.failures {
                        writeln!(out, "FAIL {w}: {}", failed.join(", "))?;
                    }
                    writeln!(
                        out,
                        "{} words checked, {} reductions, {} failures",
                        summary.words,
                        summary.reductions,
                        summary.failures.len()
                    )?;
                }
                ReportFormat::Json => {
                    let failures: Vec<serde_json::Value> = summary
                        .failures
                        .iter()
                        .map(|(w, f)| serde_json::json!({ "word": w.to_string(), "checks": f }))
                        .collect();
                    let value = serde_json::json!({
                        "words": summary.words,
                        "reductions": summary.reductions,
                        "failures": failures,
                    });
                    writeln!(out, "{value}")?;
                }
            }
            if !summary.passed() {
                return Err(Failure::Check);
            }
        }
        Command::Atlas { max_n, format } => {
            let format = match format {
                AtlasArg::Csv => AtlasFormat::Csv,
                AtlasArg::Json => AtlasFormat::JsonLines,
            };
            atlas(*max_n as usize, format, out)?;
        }
        Command::Matrix { sigma, format, sign } => {
            let form = build_form(&word(sigma)?);
            let format = match format {
                MatrixArg::Json => MatrixFormat::Json,
                MatrixArg::Csv => MatrixFormat::Csv,
                MatrixArg::Latex => MatrixFormat::Latex,
            };
            let sign = match sign {
                SignArg::Form => Sign::Form,
                SignArg::Surface => Sign::Surface,
            };
            write!(out, "{}", render(&form, format, sign))?;
        }
        Command::Graph { sigma, dot, format } => {
            let graph = build_dual_graph(&word(sigma)?);
            if *dot || *format == GraphArg::Dot {
                write!(out, "{}", to_dot(&graph))?;
            } else {
                writeln!(out, "{}", graph.to_json())?;
            }
        }
        Command::Poly { marks, modulus, format } => {
            let p = poly(&MarkSet::new(*modulus, marks)?);
            match format {
                PolyArg::Text => writeln!(out, "{p}")?,
                PolyArg::Json => writeln!(out, "{}", p.to_json())?,
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("gss").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn matrix_surface_sign() {
        let (code, out, _) = call(&["matrix", "s1 r1", "--format", "json", "--sign", "surface"]);
        assert_eq!(code, 0);
        assert_eq!(out, "[[-1,1],[1,-2]]\n");
    }

    #[test]
    fn poly_text() {
        assert_eq!(call(&["poly", "--A", "0,1", "--N", "2"]).1, "X0*X1 + X0 + X1\n");
        assert_eq!(call(&["poly", "--N", "3"]).1, "X0*X1*X2 + X0 + X1 + X2\n");
        assert_eq!(call(&["poly", "--A", "3", "--N", "3"]).0, EXIT_USAGE);
    }

    #[test]
    fn analyze_and_errors() {
        let (code, out, _) = call(&["analyze", "s3"]);
        assert_eq!(code, 0);
        assert!(out.contains(r#""det":9"#) && out.contains(r#""index":3"#), "{out}");
        let (code, _, err) = call(&["analyze", "r1 r1"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("adjacent"), "{err}");
        assert_eq!(call(&["bogus"]).0, EXIT_USAGE);
        assert_eq!(call(&["verify", "--max-n", "0"]).0, EXIT_USAGE);
    }

    #[test]
    fn verify_exit_codes() {
        let (code, out, _) = call(&["verify", "--max-n", "1"]);
        assert_eq!(code, 0);
        assert_eq!(out, "2 words checked, 0 reductions, 0 failures\n");
        assert_eq!(call(&["verify", "--max-n", "3", "--inject-fault"]).0, EXIT_CHECK_FAILED);
    }
}
