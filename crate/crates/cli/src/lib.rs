//! Command-line front end for `hypertopo-core`.
//!
//! Inputs are JSON model documents (see [`doc`]) or inline flags; every
//! command prints a deterministic text report, or JSON with `--json`.
//! Exit status: 0 on success, 1 when a mathematical precondition fails,
//! 2 for usage, file and schema errors.

pub mod commands;
pub mod doc;
pub mod report;

use std::path::PathBuf;

use clap::{Parser, Subcommand};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("schema violation: {0}")]
    Schema(String),
    #[error(transparent)]
    Domain(#[from] hypertopo_core::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Domain(_) => 1,
            CliError::Usage(_) | CliError::Schema(_) => 2,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "hypertopo",
    version,
    about = "Exact homology and Lefschetz computations for hyperbolic dynamics models"
)]
pub struct Cli {
    /// Emit JSON instead of the text report.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Smith normal form of a matrix or of every boundary map of a chain pair.
    Snf {
        file: Option<PathBuf>,
        #[arg(long)]
        matrix: Option<String>,
    },
    /// Characteristic polynomial and spectral predicates of an integer matrix.
    Charpoly {
        file: Option<PathBuf>,
        #[arg(long)]
        matrix: Option<String>,
    },
    /// Integral homology of a chain pair or a standard space.
    Homology {
        file: Option<PathBuf>,
        /// circle, surface, torus, rp2, klein_bottle, solid_torus, handlebody, t2xi
        #[arg(long)]
        space: Option<String>,
        #[arg(long)]
        genus: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        /// Homology relative to the subcomplex.
        #[arg(long)]
        relative: bool,
    },
    /// Rank bookkeeping for an exact sequence.
    Les { file: PathBuf },
    /// Lefschetz number of an iterate.
    Lefschetz {
        file: Option<PathBuf>,
        #[arg(long)]
        matrix: Option<String>,
        #[arg(long)]
        solenoid: bool,
        #[arg(long, default_value_t = 1)]
        m: u32,
    },
    /// Periodic point count from the Lefschetz formula, checked against enumeration.
    Count {
        file: Option<PathBuf>,
        #[arg(long)]
        matrix: Option<String>,
        #[arg(long)]
        solenoid: bool,
        #[arg(long)]
        m: u32,
    },
    /// Index of a hyperbolic fixed point from its derivative.
    Index {
        file: Option<PathBuf>,
        /// Derivative, e.g. "[[2,0],[0,1/2]]".
        #[arg(long)]
        df: Option<String>,
    },
    /// Lefschetz-Hopf equality: sum of fixed point indices against L(f^m).
    Verify {
        file: Option<PathBuf>,
        #[arg(long)]
        matrix: Option<String>,
        #[arg(long)]
        solenoid: bool,
        #[arg(long)]
        m: u32,
    },
    /// Dual map under a nondegenerate pairing and the reciprocal spectrum check.
    Dual {
        file: Option<PathBuf>,
        #[arg(long)]
        matrix: Option<String>,
        /// +1 or -1.
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        sign: String,
        /// Intersection matrix; dual bases when omitted.
        #[arg(long)]
        pairing: Option<String>,
    },
    /// Orientation double cover of a triangulated manifold and map lifting.
    Cover {
        file: Option<PathBuf>,
        /// rp2, klein_bottle, torus
        #[arg(long)]
        surface: Option<String>,
    },
    /// Smale order of a structure model, or its cycle.
    Order { file: PathBuf },
    /// Cohomology ledger of the filtration pairs and eigenvalue budgets.
    Ledger { file: PathBuf },
    /// Attractor structure check with the trace of applied steps.
    Check {
        file: Option<PathBuf>,
        /// Check every structure model in a directory.
        #[arg(long)]
        all: Option<PathBuf>,
    },
}

/// Output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match dispatch(&cli.command) {
        Ok((report, ok)) => {
            Outcome { code: if ok { 0 } else { 1 }, stdout: report.render(cli.json), stderr: String::new() }
        }
        Err(e) => Outcome { code: e.exit_code(), stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

fn dispatch(cmd: &Command) -> Result<(report::Report, bool), CliError> {
    use commands as c;
    let single = |r: Result<report::Report, CliError>| r.map(|r| (r, true));
    match cmd {
        Command::Snf { file, matrix } => single(c::snf(file.as_deref(), matrix.as_deref())),
        Command::Charpoly { file, matrix } => single(c::charpoly(file.as_deref(), matrix.as_deref())),
        Command::Homology { file, space, genus, n, relative } => {
            single(c::homology_cmd(file.as_deref(), space.as_deref(), *genus, *n, *relative))
        }
        Command::Les { file } => single(c::les(file)),
        Command::Lefschetz { file, matrix, solenoid, m } => {
            single(c::lefschetz(file.as_deref(), matrix.as_deref(), *solenoid, *m))
        }
        Command::Count { file, matrix, solenoid, m } => {
            single(c::count_cmd(file.as_deref(), matrix.as_deref(), *solenoid, *m))
        }
        Command::Index { file, df } => single(c::index(file.as_deref(), df.as_deref())),
        Command::Verify { file, matrix, solenoid, m } => {
            single(c::verify(file.as_deref(), matrix.as_deref(), *solenoid, *m))
        }
        Command::Dual { file, matrix, sign, pairing } => {
            single(c::dual(file.as_deref(), matrix.as_deref(), sign, pairing.as_deref()))
        }
        Command::Cover { file, surface } => single(c::cover(file.as_deref(), surface.as_deref())),
        Command::Order { file } => single(c::order(file)),
        Command::Ledger { file } => single(c::ledger(file)),
        Command::Check { file, all } => match (file, all) {
            (Some(f), None) => single(c::check(f)),
            (None, Some(d)) => c::check_all(d),
            _ => Err(CliError::Usage("give exactly one of FILE, --all DIR".into())),
        },
    }
}
