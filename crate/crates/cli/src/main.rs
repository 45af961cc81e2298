//! `nck`: bounds, verification and exact γ for normal coverings of S_n and A_n.

mod commands;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use commands::{Outcome, Status};

const DESCRIPTOR_HELP: &str = "Subgroup descriptors: intransitive:K (S_k x S_(n-k)), imprimitive:B,C \
(S_b wr S_c), alternating (A_n), named:NAME[:CLASS] (a shipped group such as AGL1(7), M12 or \
PGammaL2(8); class 2 is the conjugate by (1 2)), and alt:DESCRIPTOR for the intersection with A_n, \
e.g. alt:intransitive:2. Cycle types use bracket syntax, e.g. \"[4,4,3]\"; order does not matter.";

#[derive(Parser, Debug)]
#[command(name = "nck", version, about = "Normal coverings of symmetric and alternating groups", after_help = DESCRIPTOR_HELP)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Worker threads for parallel work (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Catalog file to use instead of the built-in one (gamma, catalog).
    #[arg(long, global = true)]
    catalog: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Sym,
    Alt,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum TypeFamily {
    U,
    T,
    TPrime,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Best known lower and upper bounds on γ, with their sources.
    Bounds { n: usize, group: Kind },
    /// Check that a basic set covers every conjugacy class.
    Verify(VerifyArgs),
    /// Exact γ by set cover over a catalog (n <= 12 built in).
    Gamma { n: usize, group: Kind },
    /// The small-degree table of γ(S_n) and γ(A_n).
    Table3,
    /// Whether a subgroup class contains a cycle type.
    #[command(after_help = DESCRIPTOR_HELP)]
    Membership {
        n: usize,
        descriptor: String,
        #[arg(value_name = "TYPE")]
        cycle_type: String,
        /// Resolve the question in A_n (implied by alt: descriptors).
        #[arg(long, value_enum)]
        group: Option<Kind>,
    },
    /// List one of the cycle-type families U, T or T'(I).
    Types {
        n: usize,
        #[arg(value_enum)]
        family: TypeFamily,
        /// Interval I for t-prime, e.g. "[1,4)"; defaults to [1, n/6).
        #[arg(long)]
        interval: Option<String>,
    },
    /// Dump the subgroup catalog for a group.
    Catalog { n: usize, group: Kind },
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Basic set as JSON: {"group": "S12", "subgroups": [...]}.
    #[arg(long, conflicts_with = "family", required_unless_present = "family")]
    file: Option<PathBuf>,
    /// Construction name, e.g. sym_prime, two_prime_powers, special_a9.
    #[arg(long)]
    family: Option<String>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    p: Option<usize>,
    #[arg(long)]
    q: Option<usize>,
    #[arg(long)]
    alpha: Option<u32>,
    #[arg(long)]
    beta: Option<u32>,
    /// Group for constructions that exist for both S_n and A_n.
    #[arg(long, value_enum)]
    group: Option<Kind>,
    /// Block size of the wreath product, where there is a choice.
    #[arg(long)]
    block: Option<usize>,
}

fn emit(format: Format, outcome: &Outcome) {
    for w in &outcome.warnings {
        eprintln!("warning: {w}");
    }
    let mut out = std::io::stdout().lock();
    let _ = match format {
        Format::Text => write!(out, "{}", outcome.text),
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&outcome.json).expect("json value")),
    };
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("error: cannot set up {t} threads: {e}");
            return ExitCode::from(2);
        }
    }
    match commands::run(&cli) {
        Ok(outcome) => {
            emit(cli.format, &outcome);
            match outcome.status {
                Status::Ok => ExitCode::SUCCESS,
                Status::Uncovered => ExitCode::from(1),
            }
        }
        Err(e) => {
            if cli.format == Format::Json {
                println!("{}", serde_json::json!({ "status": "error", "message": e.to_string() }));
            }
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
