//! Command-line front end.

mod eval;
mod export;
mod parser;

use std::ffi::OsString;
use std::io::{IsTerminal, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num::BigRational;
use thiserror::Error;

pub use eval::{eval_u, eval_w, parity_label, parse_u, parse_w, EvalError};
pub use export::{AssignmentLabel, BasisLabel, Entry, MatrixExport, Metadata};
pub use parser::{parse, Expr, ParseError};

use crate::induced::verify_induced;
use crate::realization::{
    check_consistency_square, check_relations_on_fock, dyson_check, fock_matrix, verify_realization, FockSpace,
    RealizationMap, SubalgebraMode,
};
use crate::report::{Check, Report};
use crate::scalarfield::Assignment;
use crate::uqgl21::{verify_lemma1, Generator};
use crate::walgebra::{Gl11Realization, WElement};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

pub const NMAX_RANGE: std::ops::RangeInclusive<u32> = 2..=12;
pub const DIM_RANGE: std::ops::RangeInclusive<usize> = 4..=32;
pub const MATRIX_DIM_RANGE: std::ops::RangeInclusive<usize> = 2..=32;

#[derive(Debug, Parser)]
#[command(
    name = "qrealize",
    version,
    about = "Exact q-boson-fermion realization of U_q(gl(2/1))"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the normal-ordered form of an expression over the oscillator algebra.
    NormalOrder {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Run a verification suite.
    Verify {
        suite: Suite,
        #[arg(long)]
        nmax: Option<u32>,
        #[arg(long)]
        dim: Option<usize>,
        #[arg(long, value_enum)]
        mode: Option<FockMode>,
        /// Evaluate Fock entries at the assignment.
        #[arg(long)]
        numeric: bool,
        #[command(flatten)]
        values: Values,
    },
    /// Export the Fock matrix of a generator image or expression as JSON.
    Matrix {
        generator: String,
        #[arg(long)]
        dim: usize,
        #[arg(long, value_enum, default_value_t = FockMode::Trivial)]
        mode: FockMode,
        #[arg(long)]
        numeric: bool,
        #[command(flatten)]
        values: Values,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    RelationsAbstract,
    RelationsTrivial,
    RelationsFermionic,
    Lemma1,
    Induced,
    Fock,
    Dyson,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FockMode {
    Trivial,
    Fermionic,
}

impl Suite {
    /// Lookup by the command-line name, e.g. `relations-abstract`.
    pub fn from_name(name: &str) -> Option<Self> {
        <Self as ValueEnum>::from_str(name, false).ok()
    }
}

impl FockMode {
    pub fn from_name(name: &str) -> Option<Self> {
        <Self as ValueEnum>::from_str(name, false).ok()
    }
}

impl From<FockMode> for SubalgebraMode {
    fn from(m: FockMode) -> Self {
        match m {
            FockMode::Trivial => SubalgebraMode::Trivial,
            FockMode::Fermionic => SubalgebraMode::Fermionic,
        }
    }
}

#[derive(Debug, clap::Args)]
struct Values {
    #[arg(long, value_parser = parse_rational)]
    q: Option<BigRational>,
    #[arg(long, value_parser = parse_rational)]
    p1: Option<BigRational>,
    #[arg(long, value_parser = parse_rational)]
    p2: Option<BigRational>,
    #[arg(long, value_parser = parse_rational)]
    p3: Option<BigRational>,
}

impl Values {
    fn assignment(&self) -> Assignment {
        let d = Assignment::default();
        Assignment::new(
            self.q.clone().unwrap_or(d.q),
            self.p1.clone().unwrap_or(d.p1),
            self.p2.clone().unwrap_or(d.p2),
            self.p3.clone().unwrap_or(d.p3),
        )
    }

    fn any(&self) -> bool {
        self.q.is_some() || self.p1.is_some() || self.p2.is_some() || self.p3.is_some()
    }
}

fn parse_rational(s: &str) -> Result<BigRational, String> {
    s.parse::<BigRational>()
        .map_err(|e| format!("'{s}' is not a rational number: {e}"))
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Eval(_) => EXIT_USAGE,
            CliError::Io(_) => EXIT_FAILED,
        }
    }
}

/// `normal-order`: canonical text of the normal-ordered expression.
pub fn cmd_normal_order(input: &str) -> Result<String, EvalError> {
    Ok(parse_w(input)?.to_string())
}

fn check_range<T: PartialOrd + std::fmt::Display + Copy>(
    name: &str,
    value: T,
    range: &std::ops::RangeInclusive<T>,
) -> Result<T, CliError> {
    if range.contains(&value) {
        Ok(value)
    } else {
        Err(CliError::Usage(format!(
            "--{name} {value} is outside [{}, {}]",
            range.start(),
            range.end()
        )))
    }
}

/// Options for `verify`; `None` selects the suite default.
#[derive(Debug, Clone, Default)]
pub struct VerifyOptions {
    pub nmax: Option<u32>,
    pub dim: Option<usize>,
    pub mode: Option<FockMode>,
    pub assignment: Option<Assignment>,
}

pub fn lemma1_report(nmax: u32) -> Report {
    let mut report = Report::new(format!("straightening identities, n = 0..{nmax}"));
    for c in verify_lemma1(nmax) {
        let detail = if c.passed() {
            String::new()
        } else {
            format!("residual {}", c.residual)
        };
        report.push(
            Check::new(
                format!("{}, n = {}", c.identity.label(), c.n),
                c.residual.terms().count(),
            )
            .with_detail(detail),
        );
    }
    report
}

/// `verify`: the report of one suite.
pub fn cmd_verify(suite: Suite, opts: &VerifyOptions) -> Result<Report, CliError> {
    let nmax = |default| opts.nmax.map_or(Ok(default), |n| check_range("nmax", n, &NMAX_RANGE));
    let dim = |default| opts.dim.map_or(Ok(default), |d| check_range("dim", d, &DIM_RANGE));
    Ok(match suite {
        Suite::RelationsAbstract => verify_realization(SubalgebraMode::Abstract),
        Suite::RelationsTrivial => verify_realization(SubalgebraMode::Trivial),
        Suite::RelationsFermionic => verify_realization(SubalgebraMode::Fermionic),
        Suite::Lemma1 => lemma1_report(nmax(6)?),
        Suite::Induced => verify_induced(nmax(8)?),
        Suite::Fock => {
            let d = dim(8)?;
            let modes = match opts.mode {
                Some(m) => vec![m],
                None => vec![FockMode::Trivial, FockMode::Fermionic],
            };
            let label = match &opts.assignment {
                Some(a) => format!("q={}, p1={}, p2={}, p3={}", a.q, a.p1, a.p2, a.p3),
                None => "symbolic".to_string(),
            };
            let mut report = Report::new(format!("Fock layer, D = {d}, {label}"));
            for m in modes {
                let mode: SubalgebraMode = m.into();
                report.extend_prefixed(mode.name(), check_relations_on_fock(mode, d, opts.assignment.as_ref()));
            }
            report.extend_prefixed("square", check_consistency_square(d));
            report
        }
        Suite::Dyson => dyson_check(dim(6)?),
    })
}

/// Image of a generator name, or an expression with its gl(1/1) factors
/// replaced according to `mode`.
fn export_element(generator: &str, mode: SubalgebraMode) -> Result<WElement, CliError> {
    if let Some(g) = Generator::from_name(generator) {
        let map = RealizationMap::new(mode).map_err(|e| CliError::Usage(e.to_string()))?;
        return Ok(map.image(g));
    }
    let x = parse_w(generator)?;
    let r = match mode {
        SubalgebraMode::Fermionic => Gl11Realization::Fermionic,
        _ => Gl11Realization::Trivial,
    };
    if x.has_gl11() {
        x.substitute_gl11(r).map_err(|e| CliError::Usage(e.to_string()))
    } else {
        Ok(x)
    }
}

/// `matrix`: the export document.
pub fn cmd_matrix(
    generator: &str,
    dim: usize,
    mode: FockMode,
    assignment: Option<&Assignment>,
) -> Result<MatrixExport, CliError> {
    let d = check_range("dim", dim, &MATRIX_DIM_RANGE)?;
    let mode: SubalgebraMode = mode.into();
    let x = export_element(generator, mode)?;
    let m = fock_matrix(&x, FockSpace::for_mode(mode, d), assignment).map_err(|e| CliError::Usage(e.to_string()))?;
    Ok(MatrixExport::new(generator, mode, &m, assignment))
}

fn use_color() -> bool {
    std::env::var_os("NO_COLOR").is_none_or(|v| v.is_empty()) && std::io::stdout().is_terminal()
}

fn execute(cli: Cli, out: &mut impl Write) -> Result<i32, CliError> {
    match cli.command {
        Command::NormalOrder { expr } => {
            writeln!(out, "{}", cmd_normal_order(&expr)?)?;
            Ok(EXIT_OK)
        }
        Command::Verify {
            suite,
            nmax,
            dim,
            mode,
            numeric,
            values,
        } => {
            let opts = VerifyOptions {
                nmax,
                dim,
                mode,
                assignment: (numeric || values.any()).then(|| values.assignment()),
            };
            let report = cmd_verify(suite, &opts)?;
            write!(out, "{}", report.render(use_color()))?;
            Ok(if report.all_passed() { EXIT_OK } else { EXIT_FAILED })
        }
        Command::Matrix {
            generator,
            dim,
            mode,
            numeric,
            values,
            out: path,
        } => {
            let assignment = (numeric || values.any()).then(|| values.assignment());
            let doc = cmd_matrix(&generator, dim, mode, assignment.as_ref())?;
            std::fs::write(&path, doc.to_json())?;
            writeln!(
                out,
                "wrote {}x{} matrix with {} entries to {}",
                doc.dimension,
                doc.dimension,
                doc.entries.len(),
                path.display()
            )?;
            Ok(EXIT_OK)
        }
    }
}

/// Run with the given arguments, writing to stdout and stderr; returns the exit status.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    match execute(cli, &mut lock) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

/// As `run`, capturing standard output.
pub fn run_captured<I, T>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => return (if e.use_stderr() { EXIT_USAGE } else { EXIT_OK }, e.to_string()),
    };
    let mut buf = Vec::new();
    let code = match execute(cli, &mut buf) {
        Ok(code) => code,
        Err(e) => {
            buf.extend_from_slice(format!("error: {e}\n").as_bytes());
            e.exit_code()
        }
    };
    (code, String::from_utf8(buf).expect("utf-8"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normal_order_examples() {
        assert_eq!(cmd_normal_order("b * b+").unwrap(), "1 - b+*b");
        assert_eq!(cmd_normal_order("e23 * b+").unwrap(), "-b+*e23");
        assert!(cmd_normal_order("E12").is_err());
    }

    #[test]
    fn names() {
        assert_eq!(Suite::from_name("relations-fermionic"), Some(Suite::RelationsFermionic));
        assert_eq!(Suite::from_name("lemma"), None);
        assert_eq!(FockMode::from_name("fermionic"), Some(FockMode::Fermionic));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_captured(["qrealize", "normal-order", "a * a+"]).0, EXIT_OK);
        assert_eq!(run_captured(["qrealize", "normal-order", "a * * a+"]).0, EXIT_USAGE);
        assert_eq!(
            run_captured(["qrealize", "verify", "lemma1", "--nmax", "13"]).0,
            EXIT_USAGE
        );
        assert_eq!(
            run_captured(["qrealize", "verify", "dyson", "--dim", "3"]).0,
            EXIT_USAGE
        );
        assert_eq!(run_captured(["qrealize", "bogus"]).0, EXIT_USAGE);
        let (code, text) = run_captured(["qrealize", "verify", "lemma1", "--nmax", "2"]);
        assert_eq!(code, EXIT_OK, "{text}");
        assert!(text.contains("27 of 27 checks passed"));
    }

    #[test]
    fn matrix_document() {
        let doc = cmd_matrix("a", 3, FockMode::Trivial, None).unwrap();
        assert_eq!(doc.dimension, 6);
        assert_eq!(doc.basis[2].n, 1);
        assert_eq!(doc.basis[3].occupations, vec![1]);
        assert!(doc.basis[5].boundary);
        let values: Vec<_> = doc.entries.iter().map(|e| e.value.as_str()).collect();
        assert_eq!(values, ["1", "1", "(q + q^-1)", "(q + q^-1)"]);
        let numeric = cmd_matrix("E23", 4, FockMode::Fermionic, Some(&Assignment::default())).unwrap();
        assert!(numeric.entries.iter().all(|e| e.float.is_some()));
        assert_eq!(numeric.metadata.assignment.as_ref().unwrap().q, "3/2");
    }
}
