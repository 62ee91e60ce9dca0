use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;

/// Exact multiplier invariants of endomorphisms of projective space.
#[derive(Parser, Debug)]
#[command(name = "dynmult", version)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Global {
    /// Maximum number of S-pairs per Groebner basis.
    #[arg(long, global = true, env = "DYNMULT_MAX_PAIRS", value_parser = clap::value_parser!(u64).range(1..))]
    max_pairs: Option<u64>,
    /// Maximum coefficient size in bits during Groebner basis computations.
    #[arg(long, global = true, env = "DYNMULT_MAX_COEFF_BITS", value_parser = clap::value_parser!(u64).range(1..))]
    max_coeff_bits: Option<u64>,
    /// Wall-clock limit per Groebner basis, in seconds.
    #[arg(long, global = true, env = "DYNMULT_TIME_LIMIT", value_parser = clap::value_parser!(u64).range(1..))]
    time_limit: Option<u64>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// `slow` unlocks the families whose Σ takes seconds to minutes.
    #[arg(long, global = true, value_enum, env = "DYNMULT_TIER", default_value_t = Tier::Fast)]
    tier: Tier,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Tier {
    Fast,
    Slow,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Mode {
    Chow,
    Plain,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Engine {
    Quotient,
    Elimination,
    /// The resultant formula for P¹ (chow mode only).
    Resultant,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Relation {
    Ueda,
    Corollary,
    Dependence,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Kind {
    Product,
    Segre,
    Split,
    Triangular,
    Lattes,
    Symfixture,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum LattesKind {
    Mordell,
    Quartic,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Flattening {
    Row,
    Column,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Σ_n(f) and its σ table.
    Sigma {
        #[arg(long)]
        map: PathBuf,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
        period: u32,
        #[arg(long, value_enum, default_value_t = Mode::Chow)]
        mode: Mode,
        #[arg(long, value_enum, default_value_t = Engine::Quotient)]
        engine: Engine,
    },
    /// Check a relation among multiplier invariants.
    Verify {
        #[arg(long, value_enum)]
        relation: Relation,
        #[arg(long)]
        map: Option<PathBuf>,
        /// Spectrum file (Ueda's relation only).
        #[arg(long, conflicts_with = "map")]
        spectrum: Option<PathBuf>,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
        period: u32,
        #[arg(long, value_enum, default_value_t = Mode::Chow)]
        mode: Mode,
    },
    /// Build a map from one of the families and print it as a map file.
    Construct {
        #[arg(long, value_enum)]
        kind: Kind,
        /// Family parameter a.
        #[arg(long)]
        param: Option<String>,
        /// Input maps (two for `product`, one for `segre`).
        #[arg(long)]
        map: Vec<PathBuf>,
        /// Affine components, one per flag (split and triangular).
        #[arg(long)]
        component: Vec<String>,
        /// M for the Segre product with the power map on P^M.
        #[arg(long, default_value_t = 1)]
        copies: usize,
        #[arg(long, value_enum, default_value_t = Flattening::Row)]
        flattening: Flattening,
        #[arg(long, value_enum, default_value_t = LattesKind::Mordell)]
        lattes: LattesKind,
    },
    /// Compare Σ_n across parameter samples of a family.
    Scan {
        /// mordell, mordell-z4, mordell-segre, quartic, quartic-z4-w4 or symmetric.
        #[arg(long)]
        kind: String,
        #[arg(
            long,
            value_delimiter = ',',
            required = true,
            allow_hyphen_values = true
        )]
        samples: Vec<String>,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
        period: u32,
        #[arg(long, value_enum, default_value_t = Mode::Plain)]
        mode: Mode,
    },
    /// Recover degree-2 triangular maps of P² from fixed-point eigenvalue pairs.
    Recover {
        #[arg(long)]
        spectrum: PathBuf,
    },
    /// The monic family: map, generators, quintic, fiber.
    Monic {
        /// a1,a2,b1,b2
        #[arg(long, allow_hyphen_values = true)]
        params: String,
        #[arg(long)]
        check_hypersurface: bool,
        #[arg(long)]
        fiber: bool,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match commands::run(cli) {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(commands::exit_code(&e))
        }
    }
}
