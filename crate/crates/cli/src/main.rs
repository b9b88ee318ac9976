//! `anyon` — command-line access to the abelian anyon observable toolkit:
//! framed-link invariants and Wilson-loop expectations, the quantum-torus
//! algebra with its modular-group action, level-K clock/shift
//! representations with S/T intertwiners, braid phases, and two-band
//! Chern numbers.
//!
//! Exit codes: 0 on success, 2 on parse/validation errors, 3 on numerical
//! precondition failures (gap closing, unresolved degree, overflow).

mod commands;
mod json;

use anyon_core::algebra::AlgebraError;
use anyon_core::band::BandError;
use anyon_core::braid::BraidError;
use anyon_core::link::LinkError;
use anyon_core::rep::RepError;
use clap::{Parser, Subcommand, ValueEnum};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "anyon", version, about = "Topological observables of abelian anyons")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a link file (crossing-list or Gauss code, auto-detected) and
    /// print its framings, linking matrix and total crossing number.
    Link {
        /// Path to the link file.
        input: PathBuf,
        /// Level K: also print the expectation value exp(2πi·#L/K).
        #[arg(long = "K", allow_hyphen_values = true)]
        level: Option<f64>,
    },
    /// Expectation value of a link observable at level K.
    Expect {
        /// Path to the link file.
        input: PathBuf,
        /// Level K (nonzero real).
        #[arg(long = "K", allow_hyphen_values = true)]
        level: f64,
    },
    /// Arithmetic in the observable algebra (terms like `2 * z^3 * Wh(1,-2)`).
    Algebra {
        #[command(subcommand)]
        op: AlgebraOp,
    },
    /// Level-K clock/shift representation, characters, S/T intertwiners and
    /// modular relation residuals.
    Rep {
        /// Level K (positive integer).
        #[arg(long = "K")]
        level: u32,
        /// Superselection sector `a,b` with a, b in [0,1).
        #[arg(long, value_parser = parse_sector, default_value = "0,0")]
        sector: (f64, f64),
        /// Use the alternate square root ζ = -e^{iπ/K}.
        #[arg(long)]
        alt_zeta: bool,
        /// Override the null-space cutoff for intertwiner existence.
        #[arg(long)]
        tol_svd: Option<f64>,
    },
    /// Braid word `"n: k1 k2 ..."`: exponent sum, permutation, abelian
    /// phase, and closure invariants.
    Braid {
        /// The word, e.g. "2: 1 1 1".
        word: String,
        /// Level K: also print the phase exp(2πi·e/K).
        #[arg(long = "K", allow_hyphen_values = true)]
        level: Option<f64>,
    },
    /// Chern number / mapping degree of a two-band model
    /// (`qwz:m=<float>`, `constant:<dx>,<dy>,<dz>`, or a CSV path).
    Chern {
        /// Model spec or tabulated CSV path.
        model: String,
        /// Grid resolution per axis (builtin models; CSV fixes its own).
        #[arg(long = "N", default_value_t = 64)]
        resolution: usize,
        /// Override the maximum accepted distance from an integer degree.
        #[arg(long)]
        tol_residual: Option<f64>,
        /// Override the gap-closing threshold on |d(k)|.
        #[arg(long)]
        tol_gap: Option<f64>,
    },
}

#[derive(Subcommand)]
enum AlgebraOp {
    /// Product of two elements.
    Mul { x: String, y: String },
    /// Commutative image at ζ → 1.
    Stabilize { x: String },
    /// Substitution action of g ∈ SL(2,ℤ): `S`, `T`, or `[[p,q],[r,s]]`.
    Act { g: String, x: String },
}

fn parse_sector(text: &str) -> Result<(f64, f64), String> {
    let (a, b) = text.split_once(',').ok_or("expected `a,b`")?;
    let parse = |t: &str| t.trim().parse::<f64>().map_err(|e| e.to_string());
    Ok((parse(a)?, parse(b)?))
}

#[derive(Debug)]
enum CliError {
    Link(LinkError),
    Algebra(AlgebraError),
    Braid(BraidError),
    Rep(RepError),
    Band(BandError),
    Io { path: String, source: std::io::Error },
    Usage(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Link(e) => write!(f, "{e}"),
            CliError::Algebra(e) => write!(f, "{e}"),
            CliError::Braid(e) => write!(f, "{e}"),
            CliError::Rep(e) => write!(f, "{e}"),
            CliError::Band(e) => write!(f, "{e}"),
            CliError::Io { path, source } => write!(f, "{path}: {source}"),
            CliError::Usage(msg) => write!(f, "{msg}"),
        }
    }
}

macro_rules! from_error {
    ($variant:ident, $ty:ty) => {
        impl From<$ty> for CliError {
            fn from(e: $ty) -> Self {
                CliError::$variant(e)
            }
        }
    };
}
from_error!(Link, LinkError);
from_error!(Algebra, AlgebraError);
from_error!(Braid, BraidError);
from_error!(Rep, RepError);
from_error!(Band, BandError);

impl CliError {
    /// 2 for parse/validation problems, 3 for numerical failures.
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Io { .. } | CliError::Usage(_) | CliError::Link(_) | CliError::Braid(_) => 2,
            CliError::Algebra(e) => match e {
                AlgebraError::Overflow => 3,
                _ => 2,
            },
            CliError::Rep(e) => match e {
                RepError::InvalidLevel | RepError::InvalidSector { .. } => 2,
                RepError::Algebra(AlgebraError::Overflow) => 3,
                RepError::Algebra(_) => 2,
                RepError::NonScalar { .. } | RepError::MissingIntertwiner { .. } => 3,
            },
            CliError::Band(e) => match e {
                BandError::GapClosing { .. }
                | BandError::UnderResolved { .. }
                | BandError::AntipodalTriangle { .. } => 3,
                _ => 2,
            },
        }
    }
}

fn run(cli: &Cli) -> Result<json::Json, CliError> {
    match &cli.command {
        Command::Link { input, level } => commands::cmd_link(input, *level),
        Command::Expect { input, level } => commands::cmd_link(input, Some(*level)),
        Command::Algebra { op } => match op {
            AlgebraOp::Mul { x, y } => commands::cmd_algebra_mul(x, y),
            AlgebraOp::Stabilize { x } => commands::cmd_algebra_stabilize(x),
            AlgebraOp::Act { g, x } => commands::cmd_algebra_act(g, x),
        },
        Command::Rep { level, sector, alt_zeta, tol_svd } => {
            commands::cmd_rep(*level, *sector, *alt_zeta, *tol_svd)
        }
        Command::Braid { word, level } => commands::cmd_braid(word, *level),
        Command::Chern { model, resolution, tol_residual, tol_gap } => {
            commands::cmd_chern(model, *resolution, *tol_residual, *tol_gap)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            match cli.format {
                Format::Json => print!("{}", report.to_json_string()),
                Format::Table => print!("{}", report.to_table_string()),
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
