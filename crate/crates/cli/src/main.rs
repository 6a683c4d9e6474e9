mod commands;
mod report;

use clap::{Args, Parser, Subcommand, ValueEnum};
use modcount::tutte::Rational;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

#[derive(Parser)]
#[command(name = "modcount", version, about = "Exact and modular counting of list colorings and connected spanning edge sets")]
struct Cli {
    /// Report elapsed_ms as null so output bytes are reproducible.
    #[arg(long, global = true)]
    no_timing: bool,
    /// Recompute the result with the brute-force oracle and fail on disagreement.
    #[arg(long, global = true)]
    crosscheck: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count list colorings of a graph file.
    Color(ColorArgs),
    /// Count connected spanning edge sets.
    Cse(CseArgs),
    /// Rank of a cut's color compatibility matrix over F_p.
    Rank(RankArgs),
    /// Evaluate the Tutte polynomial at a rational point.
    Tutte(TutteArgs),
    /// Check the k-stretch identity for the Tutte polynomial.
    Stretch(StretchArgs),
    /// Build (and optionally verify) a function gadget.
    Gadget(GadgetArgs),
    /// Reduce a CSP to list coloring and count the result mod p.
    Reduce(ReduceArgs),
    /// Count list colorings as essentially distinct colorings of the clique chain.
    Distinct(DistinctArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum ColorAlgo {
    Brute,
    Folklore,
    Rank,
}

#[derive(Clone, Copy, ValueEnum)]
enum CseAlgo {
    Brute,
    Treedp,
}

#[derive(Clone, Copy, ValueEnum)]
enum DistinctAlgo {
    Brute,
    Folklore,
}

#[derive(Args)]
struct ColorArgs {
    #[arg(long)]
    graph: PathBuf,
    /// Number of colors; must match the file's q line if both are given.
    #[arg(long)]
    q: Option<u32>,
    #[arg(long = "mod")]
    modulus: Option<u64>,
    #[arg(long, value_enum, default_value = "folklore")]
    algo: ColorAlgo,
    /// Print the exact count even when --mod is given.
    #[arg(long)]
    exact: bool,
}

#[derive(Args)]
struct CseArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long = "mod")]
    modulus: Option<u64>,
    #[arg(long, value_enum, default_value = "treedp")]
    algo: CseAlgo,
    /// Edge-introduce tree decomposition; defaults to one built from the arrangement.
    #[arg(long)]
    td: Option<PathBuf>,
}

#[derive(Args)]
#[command(group = clap::ArgGroup::new("cut").required(true).args(["matching", "bipartite"]))]
struct RankArgs {
    #[arg(long)]
    q: u32,
    #[arg(long = "mod")]
    modulus: u64,
    /// Perfect matching with this many edges.
    #[arg(long)]
    matching: Option<u32>,
    /// Graph file whose edges all cross between --left and the remaining vertices.
    #[arg(long, requires = "left")]
    bipartite: Option<PathBuf>,
    #[arg(long, value_delimiter = ',')]
    left: Vec<u32>,
}

#[derive(Args)]
struct TutteArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    x: Rational,
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    y: Rational,
}

#[derive(Args)]
struct StretchArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    k: usize,
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true, default_value = "1")]
    a: Rational,
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true, default_value = "2")]
    b: Rational,
    /// Write the stretched graph and its arrangement here.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct GadgetArgs {
    #[arg(long)]
    q: u32,
    #[arg(long)]
    k: usize,
    /// Table values for the q^k boundary colorings in mixed-radix order.
    #[arg(long, value_delimiter = ',', required = true)]
    f: Vec<u64>,
    #[arg(long = "mod")]
    modulus: Option<u64>,
    #[arg(long)]
    verify: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ReduceArgs {
    #[arg(long)]
    csp: PathBuf,
    #[arg(long = "mod")]
    modulus: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct DistinctArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    q: Option<u32>,
    #[arg(long = "mod")]
    modulus: Option<u64>,
    #[arg(long, value_enum, default_value = "folklore")]
    algo: DistinctAlgo,
    /// Write the clique-chain graph and its arrangement here.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    s.trim().parse::<Rational>().map_err(|e| format!("'{s}' is not a rational number: {e}"))
}

/// Why a command failed; decides the exit status.
#[derive(Debug)]
pub enum Failure {
    /// Well-formed input that violates a precondition, or a failed check.
    Domain(String),
    /// Unreadable or malformed input.
    Input(String),
}

impl From<modcount::Error> for Failure {
    fn from(e: modcount::Error) -> Self {
        if e.is_parse() {
            Failure::Input(e.to_string())
        } else {
            Failure::Domain(e.to_string())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    let echo: Vec<String> = std::env::args().skip(1).collect();
    let start = Instant::now();
    let outcome = commands::run(&cli.command, cli.crosscheck);
    let elapsed = start.elapsed();
    match outcome {
        Ok(mut report) => {
            report.command = echo;
            report.elapsed_ms = (!cli.no_timing).then_some(elapsed.as_secs_f64() * 1e3);
            println!("{}", serde_json::to_string(&report).expect("report serializes"));
            ExitCode::SUCCESS
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
