//! `k3dyn`: batch front end for the lattice, dynamics and surface computations.
//!
//! Exit status is 0 on success, 1 when a verification fails or a
//! computation errors, and 2 on usage or input errors.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use k3dyn::lattice::{EmbeddingName, PureType};
use k3dyn::Axis;

use report::{CliError, Report};

#[derive(Parser, Debug)]
#[command(name = "k3dyn", version, about = "Entropy and lattice computations for K3 surfaces in P1 x P1 x P1")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    global: Global,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Floating-point residual threshold for point checks.
    #[arg(long, global = true, default_value_t = 1e-9)]
    tol: f64,
    /// Largest denominator tried when recognizing Gaussian rationals.
    #[arg(long, global = true, default_value_t = 64)]
    denom_bound: u64,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Entropy table for all 30 unordered types.
    Table,
    /// Gram matrix of M_{k,l,m}.
    Gram(TypeArg),
    /// Determinant of M_{k,l,m} by closed formula and by Bareiss elimination.
    Det(TypeArg),
    /// Smith normal form of a Gram matrix or of an integer matrix file.
    Snf {
        #[arg(long, value_parser = parse_type, conflicts_with = "matrix", required_unless_present = "matrix")]
        r#type: Option<PureType>,
        /// JSON file holding an array of integer rows.
        #[arg(long)]
        matrix: Option<PathBuf>,
    },
    /// Dynamical degree, minimal polynomial and entropy for one type.
    Entropy(TypeArg),
    /// Checks the K3-lattice embeddings (all of them if no name is given).
    EmbedCheck {
        #[arg(long, value_parser = parse_name)]
        name: Option<EmbeddingName>,
    },
    /// Curves parallel to an axis on the surface of a tri-form.
    Curves {
        /// TriForm JSON; the built-in surface is used if omitted.
        #[arg(long)]
        poly: Option<PathBuf>,
        /// Axis to search; all three if omitted.
        #[arg(long, value_parser = parse_axis)]
        axis: Option<Axis>,
    },
    /// Full verification suite for the built-in surface.
    TildeVerify,
    /// Symbolic identities behind the covering involutions.
    IdentityCheck {
        #[arg(long)]
        poly: Option<PathBuf>,
        #[arg(long, value_parser = parse_axis)]
        axis: Option<Axis>,
    },
    /// Linear relations among curve classes on the built-in surface.
    Relations,
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Table => "table",
            Command::Gram(_) => "gram",
            Command::Det(_) => "det",
            Command::Snf { .. } => "snf",
            Command::Entropy(_) => "entropy",
            Command::EmbedCheck { .. } => "embed-check",
            Command::Curves { .. } => "curves",
            Command::TildeVerify => "tilde-verify",
            Command::IdentityCheck { .. } => "identity-check",
            Command::Relations => "relations",
        }
    }
}

#[derive(Args, Debug)]
struct TypeArg {
    /// Type as k,l,m.
    #[arg(long, value_parser = parse_type)]
    r#type: PureType,
}

fn parse_type(s: &str) -> Result<PureType, String> {
    s.parse().map_err(|e: k3dyn::Error| e.to_string())
}

fn parse_axis(s: &str) -> Result<Axis, String> {
    s.parse().map_err(|e: k3dyn::Error| e.to_string())
}

fn parse_name(s: &str) -> Result<EmbeddingName, String> {
    s.parse().map_err(|_| format!("unknown embedding {s:?}; expected one of B600, B511, B422, B332"))
}

fn run(cli: Cli) -> Result<Report, CliError> {
    let g = &cli.global;
    match cli.command {
        Command::Table => commands::table(),
        Command::Gram(t) => Ok(commands::gram(t.r#type)),
        Command::Det(t) => commands::det(t.r#type),
        Command::Snf { r#type, matrix } => commands::snf(r#type, matrix.as_deref()),
        Command::Entropy(t) => commands::entropy(t.r#type),
        Command::EmbedCheck { name } => commands::embed_check(name),
        Command::Curves { poly, axis } => commands::curves(poly.as_deref(), axis, g.denom_bound),
        Command::TildeVerify => commands::tilde_verify(g.tol, g.denom_bound),
        Command::IdentityCheck { poly, axis } => commands::identity_check(poly.as_deref(), axis),
        Command::Relations => commands::relations(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.global.format;
    let command = cli.command.name();
    match run(cli).and_then(|r| r.emit(format, command)) {
        Ok(ok) => ExitCode::from(if ok { 0 } else { 1 }),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
