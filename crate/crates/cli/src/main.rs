mod commands;
mod output;

use std::process::ExitCode;

use binrec_core::Error;
use clap::{Args, Parser, Subcommand, ValueEnum};

use output::Format;

#[derive(Parser)]
#[command(name = "binrec", version, about = "Recurrences for floored binomial sums, computed exactly")]
struct Cli {
    /// Output format
    #[arg(long, short, value_enum, global = true, default_value = "text")]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Tables of a(n, i, l, m, z), its i=1 closed form, or the floored binomial array
    Seq(SeqArgs),
    /// The recurrence polynomials p_1, ..., p_{m-1} for one (n, m)
    Pk(PkArgs),
    /// Minimal recurrence of n -> p_k(n, m, x+1, x)
    Charpoly(CellArgs),
    /// The factors v_{m,0}, ..., v_{m,m} peeled from c_{m,1}, ..., c_{m,m-1}
    Vfactors(MArgs),
    /// Check the conjectured factorization pattern over a range of m
    Conjectures(ConjArgs),
    /// Run the verification suite, or the named checks
    Verify(VerifyArgs),
    /// Expand a rational generating function
    Gf(GfArgs),
    /// Enumerate strip-confined lattice paths and their weights
    Paths(PathArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SeqTable {
    ASum,
    AClosed,
    BinomFloor,
}

#[derive(Args)]
pub struct SeqArgs {
    #[arg(long, value_enum, default_value = "a-sum")]
    table: SeqTable,
    /// Rows n = 0..=n_max
    #[arg(long, default_value_t = 10)]
    n_max: i64,
    #[arg(long, default_value_t = 1)]
    i: i64,
    #[arg(long, short = 'l', default_value_t = 0, allow_hyphen_values = true)]
    l: i64,
    #[arg(long, default_value_t = 2)]
    m: i64,
    /// Evaluate at z = -1
    #[arg(long)]
    at_minus_one: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PkSource {
    Newton,
    Oracle,
    Closed,
}

#[derive(Args)]
pub struct PkArgs {
    #[arg(long)]
    n: i64,
    #[arg(long)]
    m: i64,
    #[arg(long, value_enum, default_value = "newton")]
    source: PkSource,
    /// Only this k
    #[arg(long)]
    k: Option<i64>,
}

#[derive(Args)]
pub struct CellArgs {
    #[arg(long)]
    m: i64,
    #[arg(long)]
    k: i64,
}

#[derive(Args)]
pub struct MArgs {
    #[arg(long)]
    m: i64,
}

#[derive(Args)]
pub struct ConjArgs {
    /// Inclusive range a..b
    #[arg(long, default_value = "2..6")]
    m_range: String,
    /// Allow m >= 7 (minutes of runtime)
    #[arg(long)]
    stretch: bool,
    /// Do not start a new m after this many seconds
    #[arg(long)]
    time_budget: Option<u64>,
}

#[derive(Args)]
pub struct VerifyArgs {
    /// Named check (repeatable); all checks when absent
    #[arg(long = "check")]
    checks: Vec<String>,
    /// Upper index bound for every selected check
    #[arg(long)]
    n_max: Option<usize>,
    /// Maximum number of lattice paths to enumerate per length
    #[arg(long, default_value_t = binrec_core::seqgen::DEFAULT_PATH_CAP)]
    path_cap: u64,
}

#[derive(Args)]
pub struct GfArgs {
    /// mod2, mod2-mirrored, mod3, mod2-minus-one, r, s or p2m4
    #[arg(long)]
    family: String,
    /// Step i for the sum families
    #[arg(long, default_value_t = 1)]
    i: usize,
    #[arg(long, default_value_t = 10)]
    terms: usize,
}

#[derive(Args)]
pub struct PathArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    m: usize,
    /// Maximum number of paths to enumerate
    #[arg(long, default_value_t = binrec_core::seqgen::DEFAULT_PATH_CAP)]
    cap: u64,
    /// Print every path
    #[arg(long)]
    list: bool,
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Resource(_) => 3,
        Error::Internal(_) => 1,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report = match &cli.command {
        Command::Seq(a) => commands::seq(a),
        Command::Pk(a) => commands::pk(a),
        Command::Charpoly(a) => commands::charpoly(a),
        Command::Vfactors(a) => commands::vfactors(a),
        Command::Conjectures(a) => commands::conjectures(a),
        Command::Verify(a) => commands::verify(a),
        Command::Gf(a) => commands::gf(a),
        Command::Paths(a) => commands::paths(a),
    };
    match report {
        Ok(r) => {
            match r.emit(cli.format) {
                Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => {
                    eprintln!("binrec: {e}");
                    return ExitCode::from(1);
                }
                _ => {}
            }
            ExitCode::from(if r.failed { 1 } else { 0 })
        }
        Err(e) => {
            eprintln!("binrec: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
