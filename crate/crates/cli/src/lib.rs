//! Command-line driver: problem files in, stage bases out.
//!
//! ```text
//! alcom pipeline sl2.gb
//! alcom envgb sl2.gb --json
//! alcom freegb relations.gb --max-deg 6
//! ```
//!
//! Exit codes: 0 success, 2 usage or parse error, 3 mathematical domain
//! error, 4 resource cap or infinite construction.

pub mod expr;
pub mod problem;
mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use alcom::{Error, ErrorClass, Fp, Rational};
use clap::{Args, Parser, Subcommand};

pub use problem::{parse_problem, Bracket, FieldSpec, Mode, ParseError, Problem, ProblemOptions, SUPPORTED_PRIMES};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;
pub const EXIT_RESOURCE: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "alcom",
    version,
    about = "Finite Groebner bases for almost commutative algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Two-sided basis, symbols, lifts and the verified free-algebra basis.
    Pipeline(Common),
    /// Commutative Buchberger on the abelianized ideal.
    Comgb(Common),
    /// Two-sided Groebner basis in the enveloping algebra.
    Envgb(Common),
    /// Degree-bounded completion in the free algebra.
    Freegb(Common),
    /// Diamond-lemma check of the relations as given.
    Check(Common),
}

#[derive(Debug, Args)]
struct Common {
    /// Problem file.
    file: PathBuf,
    /// Print one JSON document instead of text.
    #[arg(long)]
    json: bool,
    /// Skip verification.
    #[arg(long)]
    no_verify: bool,
    #[arg(long)]
    seed: Option<u64>,
    /// Retry once after a random change of Lie basis on an infinite U-set.
    #[arg(long)]
    random_basis_change: bool,
    #[arg(long)]
    max_deg: Option<u32>,
    #[arg(long)]
    term_cap: Option<usize>,
}

/// Which subcommand to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Task {
    Pipeline,
    Comgb,
    Envgb,
    Freegb,
    Check,
}

impl Task {
    pub fn name(self) -> &'static str {
        match self {
            Task::Pipeline => "pipeline",
            Task::Comgb => "comgb",
            Task::Envgb => "envgb",
            Task::Freegb => "freegb",
            Task::Check => "check",
        }
    }
}

/// Settings after merging command-line flags over file options.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Settings {
    pub verify: bool,
    pub seed: u64,
    pub random_basis_change: bool,
    pub max_degree: Option<u32>,
    pub term_cap: usize,
}

impl Settings {
    fn merge(flags: &Common, file: &ProblemOptions) -> Self {
        Settings {
            verify: !flags.no_verify && file.verify.unwrap_or(true),
            seed: flags.seed.or(file.seed).unwrap_or(0),
            random_basis_change: flags.random_basis_change || file.random_basis_change.unwrap_or(false),
            max_degree: flags.max_deg.or(file.max_degree),
            term_cap: flags.term_cap.or(file.term_cap).unwrap_or(200_000),
        }
    }
}

/// A failure attributed to a stage.
#[derive(Debug, thiserror::Error)]
pub enum RunError {
    #[error("{0}")]
    Usage(String),
    #[error("{stage}: {message}")]
    Math {
        stage: &'static str,
        class: ErrorClass,
        message: String,
    },
}

impl RunError {
    pub fn exit_code(&self) -> i32 {
        match self {
            RunError::Usage(_) => EXIT_PARSE,
            RunError::Math {
                class: ErrorClass::Domain,
                ..
            } => EXIT_DOMAIN,
            RunError::Math {
                class: ErrorClass::Resource,
                ..
            } => EXIT_RESOURCE,
        }
    }

    pub(crate) fn math(stage: &'static str, e: Error, vars: &[String]) -> Self {
        let message = match &e {
            Error::InfiniteUSet { monomial, variable } => format!(
                "U-set of leading monomial {} is infinite: no pure power of {} in the colon ideal \
                 (try --random-basis-change)",
                expr::render_exponents(monomial.exps(), vars),
                vars[*variable]
            ),
            Error::JacobiFailure {
                triple: [i, j, k],
                residue,
            } => format!(
                "Jacobi identity fails for ({}, {}, {}): residue {}",
                vars[i - 1],
                vars[j - 1],
                vars[k - 1],
                alcom::error::render_residue(residue, |r| vars[r - 1].clone())
            ),
            other => other.to_string(),
        };
        RunError::Math {
            stage,
            class: e.class(),
            message,
        }
    }
}

/// Runs a parsed problem and returns the rendered output.
pub fn execute(problem: &Problem, task: Task, settings: &Settings, json: bool) -> Result<String, RunError> {
    macro_rules! dispatch {
        ($($p:literal),*) => {
            match problem.field {
                FieldSpec::Rationals => report::build::<Rational>(problem, task, settings),
                $(FieldSpec::Prime($p) => report::build::<Fp<$p>>(problem, task, settings),)*
                FieldSpec::Prime(p) => Err(RunError::Usage(format!("unsupported characteristic {p}"))),
            }
        };
    }
    let report = dispatch!(
        2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 1009,
        10007, 32003, 65521, 2147483647
    )?;
    Ok(if json { report.to_json() } else { report.to_text() })
}

/// Entry point shared by the binary and the tests. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    let (task, flags) = match &cli.command {
        Command::Pipeline(c) => (Task::Pipeline, c),
        Command::Comgb(c) => (Task::Comgb, c),
        Command::Envgb(c) => (Task::Envgb, c),
        Command::Freegb(c) => (Task::Freegb, c),
        Command::Check(c) => (Task::Check, c),
    };
    let text = match std::fs::read_to_string(&flags.file) {
        Ok(t) => t,
        Err(e) => {
            let _ = writeln!(err, "error: cannot read {}: {e}", flags.file.display());
            return EXIT_PARSE;
        }
    };
    let problem = match parse_problem(&text) {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: {}: {e}", flags.file.display());
            return EXIT_PARSE;
        }
    };
    let settings = Settings::merge(flags, &problem.options);
    match execute(&problem, task, &settings, flags.json) {
        Ok(rendered) => {
            let _ = write!(out, "{rendered}");
            EXIT_OK
        }
        Err(e) => {
            let _ = writeln!(err, "error in {}: {e}", task.name());
            e.exit_code()
        }
    }
}
