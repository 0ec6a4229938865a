//! `kjcolor`: reproducible verification runs for colored partition counts.
//!
//! Exit status: 0 when every check holds, 1 when a witness, mismatch or
//! violation is found (the report is still written), 2 on usage or
//! internal errors.

mod commands;
mod oracle;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use output::{Format, Outcome};

/// Environment variable that overrides the default truncation order.
pub const ORDER_ENV: &str = "KJCOLOR_MAX_ORDER";
pub const DEFAULT_ORDER: usize = 200;

#[derive(Parser, Debug)]
#[command(name = "kjcolor", version, about = "Exact series, congruence scans and box-partition arrays for (k,j)-colored partitions")]
struct Cli {
    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
    /// Worker threads for parallel scans (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Expand a generating function through q^order.
    Series(SeriesArgs),
    /// Check that coefficients on a progression vanish modulo m.
    Congruence(CongruenceArgs),
    /// Compare c_{2p,p}(n) mod p^2 with the partition-sum side.
    Theorem2(Theorem2Args),
    /// Box partitions by number of part sizes, or their color array.
    Box(BoxArgs),
    /// Scan linear cuts of a color array for unimodality.
    Unimodal(UnimodalArgs),
    /// Run a formula-vs-enumeration equivalence suite.
    OracleCheck(OracleArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SeriesKind {
    /// C_{k,j}(q), needs --k and --j
    Ckj,
    /// C_{k,j} through a closed product, needs --k and --form
    Eta,
    Overpartition,
    /// 1/(q;q)^k, needs --k
    Kcolored,
    /// (q^d;q^d)_inf, needs --d
    Pochhammer,
    /// Partitions with exactly r part sizes, needs --r
    Macmahon,
    /// Same with parts at most M, needs --r and --M
    Merca,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FormArg {
    One,
    KMinusOne,
    K,
}

#[derive(Args, Debug)]
pub struct SeriesArgs {
    #[arg(long, value_enum)]
    pub kind: SeriesKind,
    #[arg(long)]
    pub k: Option<u32>,
    #[arg(long)]
    pub j: Option<u32>,
    #[arg(long, value_enum)]
    pub form: Option<FormArg>,
    #[arg(long)]
    pub d: Option<usize>,
    #[arg(long)]
    pub r: Option<usize>,
    #[arg(long = "M")]
    pub max_part: Option<usize>,
    /// Truncation order Q (coefficients q^0..q^Q).
    #[arg(long, env = ORDER_ENV, default_value_t = DEFAULT_ORDER)]
    pub order: usize,
    /// Reduce coefficients modulo this.
    #[arg(long = "mod")]
    pub modulus: Option<u64>,
}

#[derive(Args, Debug)]
pub struct CongruenceArgs {
    #[arg(long, default_value_t = 9)]
    pub k: u32,
    #[arg(long)]
    pub j: u32,
    #[arg(long = "mod", default_value_t = 27)]
    pub modulus: u64,
    /// Progression such as 3n+2, 9n+2 or "3^l n+2" (with --ell).
    #[arg(long, required_unless_present = "search")]
    pub progression: Option<String>,
    /// Value substituted for a literal l exponent.
    #[arg(long)]
    pub ell: Option<u32>,
    /// Largest index checked.
    #[arg(long, env = ORDER_ENV, default_value_t = DEFAULT_ORDER as u64)]
    pub max: u64,
    /// Look for the first nonzero residue on 3^ell n+2 for every ell <= --ell-max.
    #[arg(long, conflicts_with = "progression")]
    pub search: bool,
    #[arg(long, default_value_t = kjcolor::congruence::nine_colors::DEFAULT_ELL_MAX)]
    pub ell_max: u32,
    /// Largest coefficient index examined by the search.
    #[arg(long, default_value_t = kjcolor::congruence::nine_colors::DEFAULT_WITNESS_BOUND)]
    pub bound: u64,
}

#[derive(Args, Debug)]
pub struct Theorem2Args {
    #[arg(long)]
    pub p: u64,
    #[arg(long, env = ORDER_ENV, default_value_t = DEFAULT_ORDER as u64)]
    pub nmax: u64,
    /// Check only the weaker relation modulo p.
    #[arg(long)]
    pub mod_p: bool,
}

#[derive(Args, Debug)]
pub struct BoxArgs {
    /// Largest part.
    #[arg(long = "M")]
    pub max_part: usize,
    /// Largest number of parts.
    #[arg(long = "N")]
    pub max_parts: usize,
    /// Only this number of part sizes.
    #[arg(long, conflicts_with = "k")]
    pub r: Option<usize>,
    /// Colors; switches to the coefficient array of q^n.
    #[arg(long, requires = "n")]
    pub k: Option<usize>,
    #[arg(long, requires = "k")]
    pub n: Option<usize>,
    /// Set variable x_i to 1 (1-based).
    #[arg(long, requires = "k")]
    pub specialize: Option<usize>,
}

#[derive(Args, Debug)]
pub struct UnimodalArgs {
    /// Largest part (the maximum over boxes with --sweep).
    #[arg(long = "M")]
    pub max_part: usize,
    /// Largest number of parts (the maximum over boxes with --sweep).
    #[arg(long = "N")]
    pub max_parts: usize,
    /// Colors; a comma-separated list with --sweep.
    #[arg(long, value_delimiter = ',', required = true)]
    pub k: Vec<usize>,
    #[arg(long, required_unless_present = "sweep")]
    pub n: Option<usize>,
    /// Variable set to 1 before scanning (1-based, default the last).
    #[arg(long, conflicts_with = "sweep")]
    pub specialize: Option<usize>,
    /// Direction coordinates range over [-D, D].
    #[arg(long, default_value_t = 2)]
    pub dirbound: i64,
    /// Scan every box up to MxN, every listed k and every n <= area.
    #[arg(long)]
    pub sweep: bool,
}

#[derive(Args, Debug)]
pub struct OracleArgs {
    #[command(subcommand)]
    pub suite: OracleSuite,
}

#[derive(Subcommand, Debug)]
pub enum OracleSuite {
    /// Series expansion against partition enumeration.
    Ckj {
        #[arg(long, default_value_t = 5)]
        kmax: u32,
        #[arg(long, default_value_t = 20)]
        nmax: u64,
    },
    /// Part-size formula against box enumeration.
    Box {
        #[arg(long = "Mmax", default_value_t = 6)]
        m_max: usize,
        #[arg(long = "Nmax", default_value_t = 6)]
        n_max: usize,
    },
    /// Series side against partition-sum side of the mod p^2 identity.
    Theorem2 {
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 100)]
        nmax: u64,
    },
    /// Bounded-largest-part series against tall boxes.
    MercaLimit {
        #[arg(long = "Mmax", default_value_t = 6)]
        m_max: usize,
        #[arg(long, default_value_t = 20)]
        order: usize,
    },
}

fn run(cli: &Cli) -> Result<Outcome, String> {
    if let Some(t) = cli.threads {
        if t == 0 {
            return Err("--threads must be at least 1".into());
        }
        rayon::ThreadPoolBuilder::new().num_threads(t).build_global().map_err(|e| e.to_string())?;
    }
    match &cli.command {
        Command::Series(a) => commands::series(a),
        Command::Congruence(a) => commands::congruence(a),
        Command::Theorem2(a) => commands::theorem2(a),
        Command::Box(a) => commands::box_cmd(a),
        Command::Unimodal(a) => commands::unimodal(a),
        Command::OracleCheck(a) => oracle::run(&a.suite),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match run(&cli) {
        Ok(o) => o,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    if let Err(msg) = outcome.emit(cli.format, cli.out.as_deref()) {
        eprintln!("error: {msg}");
        return ExitCode::from(2);
    }
    ExitCode::from(if outcome.holds { 0 } else { 1 })
}
