//! `detvar` command-line front end.
//!
//! [`run`] parses arguments, dispatches to the engines in the `detvar` crate
//! and writes a report. Every failure becomes one `error[<code>]: <message>`
//! line on the error stream and a nonzero exit status:
//!
//! | status | meaning |
//! |---|---|
//! | 0 | success |
//! | 1 | domain or hypothesis error |
//! | 2 | malformed input (usage, schema, I/O, shape) |
//! | 3 | `verify` found a counterexample |

use std::ffi::OsString;
use std::fmt;
use std::io::Write;
use std::panic::{self, AssertUnwindSafe};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;

pub mod commands;
pub mod document;
pub mod json_int;
pub mod report;
pub mod verify;

pub use document::{ProblemDocument, StratumEntry};
pub use report::{Format, Report, Table};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_MALFORMED: i32 = 2;
pub const EXIT_COUNTEREXAMPLE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "detvar", version, about = "Invariants of generic determinantal varieties and EIDS")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: Format,

    /// Write the report here instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct SnArgs {
    #[arg(long)]
    pub s: u32,
    #[arg(long)]
    pub n: u32,
}

#[derive(Debug, Clone, Args)]
pub struct NksArgs {
    #[arg(long)]
    pub n: u32,
    #[arg(long)]
    pub k: u32,
    #[arg(long)]
    pub s: u32,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Local Euler obstruction e(s,n) of Σ^s at the origin.
    Eu(SnArgs),
    /// Euler obstruction of Σ^s on every stratum.
    EuConstructible(SnArgs),
    /// Local CSM cycle of Σ^s and its Chern–Mather expansion.
    Csm(SnArgs),
    /// Coefficients of the polar classes of Σ^s.
    PolarClass {
        #[arg(long)]
        s: u32,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        /// Only this polar index (0 <= i < s).
        #[arg(long)]
        i: Option<u32>,
    },
    /// Euler characteristic of the stabilization of an EIDS.
    ChiStab {
        /// ProblemDocument JSON file.
        #[arg(long, value_name = "FILE")]
        problem: PathBuf,
    },
    /// Stabilization Euler characteristic for a good approximation.
    #[command(group = clap::ArgGroup::new("chi1-source").required(true))]
    ChiStabGood {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        t: u32,
        /// χ of the stabilization of the ICIS _1X.
        #[arg(long, group = "chi1-source", allow_hyphen_values = true, value_parser = parse_int)]
        chi1: Option<BigInt>,
        /// Milnor number of the ICIS _1X.
        #[arg(long, group = "chi1-source", value_parser = parse_int)]
        mu: Option<BigInt>,
        /// Polar multiplicities m_0,…,m_d of the ICIS _1X.
        #[arg(long, group = "chi1-source", allow_hyphen_values = true, value_parser = parse_int_list)]
        icis_polar: Option<IntList>,
    },
    /// The polar-multiplicity system of the generic variety and its solution.
    GenericSystem(NksArgs),
    /// Solve the polar-multiplicity system for a given right-hand side.
    SolveSystem {
        #[command(flatten)]
        dims: NksArgs,
        /// b_1,…,b_s in stratum order.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_int_list)]
        b: IntList,
    },
    /// Euler obstruction of X = F^{-1}(Σ^s) from slice data.
    EuSection {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        s: u32,
        /// χ̄_*(i,n) for i = 2..s.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_int_list)]
        chi_bar_star: IntList,
        /// χ̄(_1X ∩ H); used when q > n(n+k).
        #[arg(long, allow_hyphen_values = true, value_parser = parse_int)]
        chi_bar_1h: Option<BigInt>,
    },
    /// Euler obstruction of a module, or of X through multiplicities of pairs.
    #[command(group = clap::ArgGroup::new("module-source").required(true))]
    EuModule {
        /// m_0(P_i(M)) for i = 0..d-1.
        #[arg(long, group = "module-source", allow_hyphen_values = true, value_parser = parse_int_list)]
        polar_mults: Option<IntList>,
        /// e(M_i, N_i) for i = 0..d-1; the first must be 0.
        #[arg(long, group = "module-source", requires = "eu_pullback", allow_hyphen_values = true, value_parser = parse_int_list)]
        pair_mults: Option<IntList>,
        #[arg(long, requires = "pair_mults", allow_hyphen_values = true, value_parser = parse_int)]
        eu_pullback: Option<BigInt>,
    },
    /// Source dimensions q with a good approximation.
    QWindow {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        /// Kernel rank.
        #[arg(long)]
        r: u32,
    },
    /// Triangle of Euler obstructions e(s,n), one row per n.
    Pascal {
        #[arg(long)]
        rows: u32,
    },
    /// Sweep the identities over a parameter box.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: verify::Suite,
        #[arg(long, default_value_t = 12)]
        n_max: u32,
        #[arg(long, default_value_t = 3)]
        k_max: u32,
        /// Cap on s; defaults to n.
        #[arg(long)]
        s_max: Option<u32>,
    },
}

/// Comma-separated integers; the empty string is the empty list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntList(pub Vec<BigInt>);

fn parse_int(s: &str) -> Result<BigInt, String> {
    s.trim()
        .parse()
        .map_err(|_| format!("{s:?} is not an integer"))
}

fn parse_int_list(s: &str) -> Result<IntList, String> {
    if s.trim().is_empty() {
        return Ok(IntList(Vec::new()));
    }
    s.split(',').map(parse_int).collect::<Result<_, _>>().map(IntList)
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Schema(String),
    Io(String),
    Engine(detvar::Error),
    Internal(String),
}

impl CliError {
    pub fn code(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Schema(_) => "schema",
            CliError::Io(_) => "io",
            CliError::Engine(e) => e.code(),
            CliError::Internal(_) => "internal",
        }
    }

    pub fn exit_code(&self) -> i32 {
        use detvar::Error as E;
        match self {
            CliError::Usage(_) | CliError::Schema(_) | CliError::Io(_) => EXIT_MALFORMED,
            CliError::Engine(E::LengthMismatch { .. } | E::MalformedSystem(_)) => EXIT_MALFORMED,
            CliError::Engine(_) | CliError::Internal(_) => EXIT_DOMAIN,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Schema(m) | CliError::Io(m) | CliError::Internal(m) => {
                f.write_str(m)
            }
            CliError::Engine(e) => write!(f, "{e}"),
        }
    }
}

impl From<detvar::Error> for CliError {
    fn from(e: detvar::Error) -> Self {
        CliError::Engine(e)
    }
}

/// Parse `args` (program name first), run the command and return the exit
/// status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{}", e.render());
                return EXIT_OK;
            }
            let text = e.to_string();
            let first = text.lines().next().unwrap_or("invalid arguments");
            let msg = first.strip_prefix("error: ").unwrap_or(first);
            return fail(err, &CliError::Usage(msg.to_string()));
        }
    };

    let outcome = panic::catch_unwind(AssertUnwindSafe(|| commands::dispatch(&cli.command)));
    let (report, status) = match outcome {
        Ok(Ok(done)) => done,
        Ok(Err(e)) => return fail(err, &e),
        Err(_) => return fail(err, &CliError::Internal("engine panicked".into())),
    };

    for w in &report.warnings {
        let _ = writeln!(err, "warning: {w}");
    }
    let written = match &cli.out {
        Some(path) => std::fs::File::create(path)
            .and_then(|mut f| report.render(cli.format, &mut f))
            .map_err(|e| CliError::Io(format!("{}: {e}", path.display()))),
        None => report
            .render(cli.format, out)
            .map_err(|e| CliError::Io(e.to_string())),
    };
    match written {
        Ok(()) => status,
        Err(e) => fail(err, &e),
    }
}

fn fail(err: &mut dyn Write, e: &CliError) -> i32 {
    let _ = writeln!(err, "error[{}]: {e}", e.code());
    e.exit_code()
}
