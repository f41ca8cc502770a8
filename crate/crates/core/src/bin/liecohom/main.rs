mod commands;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "liecohom", version, about = "Exact relative Lie algebra cohomology")]
struct Cli {
    /// Print JSON instead of a table.
    #[arg(long, global = true)]
    json: bool,
    /// Largest catalog dimension considered.
    #[arg(long, global = true, default_value_t = liecohom::catalog::DEFAULT_MAX_DIM)]
    max_dim: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
pub struct Source {
    /// Catalog entry name, e.g. su21 or sl3C.
    pub name: Option<String>,
    /// Load the algebra from a JSON file instead.
    #[arg(long, conflicts_with = "name")]
    pub file: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum Relative {
    K,
    M,
    None,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum ModelArg {
    H3,
}

#[derive(Subcommand)]
enum Command {
    /// Catalog queries.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Killing signature, structure, centroid and Cartan data.
    Analyze(Source),
    /// Dimensions of H^k(g, m).
    Cohomology {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value_t = Relative::K)]
        relative: Relative,
        #[arg(long, default_value_t = 4)]
        max_degree: usize,
    },
    /// The invariant 3-form of a complex entry.
    Omega { name: String },
    /// Dynkin index of an embedding into a compact su(n).
    Dynkin {
        target: String,
        /// Weights of an su(2) embedding, e.g. 2,0,-2.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, conflicts_with = "source")]
        weights: Option<Vec<i64>>,
        /// Compact source entry, embedded block-diagonally.
        #[arg(long)]
        source: Option<String>,
    },
    /// Geodesic simplex integrals of the volume form on H^3.
    Simplex {
        #[arg(long, value_enum, default_value_t = ModelArg::H3)]
        model: ModelArg,
        #[arg(long, default_value_t = 16)]
        order: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        tuples: usize,
        /// Also check the cocycle identity on every 5-tuple.
        #[arg(long)]
        defect: bool,
    },
    /// Theorem checks over the catalog.
    Verify {
        #[command(subcommand)]
        which: Theorem,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    List,
    Export { name: String },
}

#[derive(Subcommand)]
enum Theorem {
    TheoremA,
    TheoremB,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = commands::Output { json: cli.json };
    let result = match cli.command {
        Command::Catalog {
            action: CatalogAction::List,
        } => commands::catalog_list(&out, cli.max_dim),
        Command::Catalog {
            action: CatalogAction::Export { name },
        } => commands::catalog_export(&name, cli.max_dim),
        Command::Analyze(source) => commands::analyze(&out, &source, cli.max_dim),
        Command::Cohomology {
            source,
            relative,
            max_degree,
        } => commands::cohomology(&out, &source, relative, max_degree, cli.max_dim),
        Command::Omega { name } => commands::omega(&out, &name, cli.max_dim),
        Command::Dynkin {
            target,
            weights,
            source,
        } => commands::dynkin(&out, &target, weights.as_deref(), source.as_deref(), cli.max_dim),
        Command::Simplex {
            model: ModelArg::H3,
            order,
            seed,
            tuples,
            defect,
        } => commands::simplex(&out, order, seed, tuples, defect),
        Command::Verify {
            which: Theorem::TheoremA,
        } => commands::theorem_a(&out, cli.max_dim),
        Command::Verify {
            which: Theorem::TheoremB,
        } => commands::theorem_b(&out),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
