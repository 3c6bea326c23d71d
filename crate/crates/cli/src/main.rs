//! `kjpart`: command-line front end for the kjpart library.
//!
//! Exit status: 0 when every hard check passes, 1 when a theorem-flagged
//! check finds a counterexample, 2 on usage or resource errors. Conjecture
//! failures print a FINDING block on stderr and do not change the status.

mod commands;
mod report;

use std::io;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use report::{emit, emit_findings, Format};

#[derive(Parser, Debug)]
#[command(name = "kjpart", version, about = "Exact (k,j)-colored partition computations")]
struct Cli {
    /// output format
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// worker threads; 0 uses every core
    #[arg(long, default_value_t = 0, global = true)]
    parallel: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
enum Command {
    /// Print generating-function coefficients, optionally along a progression.
    Expand(ExpandArgs),
    /// Count (k,j)-colored partitions of n, cross-checked by enumeration.
    Count(CountArgs),
    /// Verify registered congruences, identities and scans.
    Verify(VerifyArgs),
    /// Check registered q-series identities.
    Identity(IdentityArgs),
    /// Run the marked-overpartition bijection.
    Bijection(BijectionArgs),
    /// Count partitions with exactly i part sizes by several methods.
    Nu(NuArgs),
    /// Hook-length polynomial experiments.
    Hook(HookArgs),
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Expand(_) => "expand",
            Command::Count(_) => "count",
            Command::Verify(_) => "verify",
            Command::Identity(_) => "identity",
            Command::Bijection(_) => "bijection",
            Command::Nu(_) => "nu",
            Command::Hook(h) => match h.command {
                HookCommand::Compare(_) => "hook compare",
                HookCommand::Han(_) => "hook han",
                HookCommand::Binom3(_) => "hook binom3",
            },
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    /// c[k,j]
    Ckj,
    /// k-colored partitions, c[k,k]
    Kcolored,
    /// overpartitions, c[2,1]
    Pbar,
    /// ordinary partitions
    P,
    /// partitions with exactly i part sizes
    Nu,
    /// number of divisors
    D,
    /// sum of r-th powers of divisors
    Sigma,
    /// an eta-quotient expression given with --eta
    Eta,
}

#[derive(Args, Debug, Serialize)]
pub struct ExpandArgs {
    #[arg(long, value_enum)]
    pub family: Family,
    #[arg(long)]
    pub k: Option<u32>,
    #[arg(long)]
    pub j: Option<u32>,
    #[arg(long)]
    pub i: Option<usize>,
    #[arg(long)]
    pub r: Option<u32>,
    /// e.g. "f2^5 / f1^2 f4^2"
    #[arg(long)]
    pub eta: Option<String>,
    /// number of coefficients printed
    #[arg(long, default_value_t = 20)]
    pub limit: usize,
    /// `a,b` prints indices a*n + b
    #[arg(long, value_parser = parse_progression)]
    pub progression: Option<(u64, u64)>,
    /// also print residues modulo this
    #[arg(long = "mod")]
    pub modulus: Option<u64>,
}

#[derive(Args, Debug, Serialize)]
pub struct CountArgs {
    #[arg(long, value_enum, default_value_t = Family::Ckj)]
    pub family: Family,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: Option<u32>,
    #[arg(long)]
    pub j: Option<u32>,
    #[arg(long)]
    pub i: Option<usize>,
    /// list the colored partitions (enumeration only)
    #[arg(long)]
    pub list: bool,
    /// largest n counted by brute force
    #[arg(long, default_value_t = kjpart::colored::DEFAULT_ORACLE_BOUND)]
    pub oracle_bound: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    /// every registered claim, identity and scan
    Paper,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Tag {
    Theorem,
    Conjecture,
}

#[derive(Args, Debug, Serialize)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub suite: Option<Suite>,
    /// claim, identity or scan id; repeatable
    #[arg(long = "id")]
    pub ids: Vec<String>,
    /// keep only claims with this tag; repeatable
    #[arg(long = "tag", value_enum)]
    pub tags: Vec<Tag>,
    /// keep only claims of this family, e.g. "(k,1)"
    #[arg(long)]
    pub family: Option<String>,
    /// override every claim's bound
    #[arg(long)]
    pub bound: Option<usize>,
    /// override every identity's order
    #[arg(long)]
    pub identity_order: Option<usize>,
    /// print the registry instead of verifying
    #[arg(long)]
    pub list: bool,
}

#[derive(Args, Debug, Serialize)]
pub struct IdentityArgs {
    /// repeatable; all identities when absent
    #[arg(long = "id")]
    pub ids: Vec<String>,
    #[arg(long)]
    pub order: Option<usize>,
    #[arg(long)]
    pub list: bool,
}

#[derive(Args, Debug, Serialize)]
pub struct BijectionArgs {
    #[arg(long)]
    pub n: usize,
    /// number of marked sizes; all when absent
    #[arg(long)]
    pub i: Option<usize>,
    /// check round trips and image counts for every size up to n
    #[arg(long)]
    pub check: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum NuMethodArg {
    Enumerate,
    Andrews,
    Divisor,
    All,
}

#[derive(Args, Debug, Serialize)]
pub struct NuArgs {
    #[arg(long)]
    pub i: usize,
    /// a single n
    #[arg(long, conflicts_with = "upto")]
    pub n: Option<usize>,
    /// every n from 1 to this
    #[arg(long)]
    pub upto: Option<usize>,
    #[arg(long, value_enum, default_value_t = NuMethodArg::All)]
    pub method: NuMethodArg,
}

#[derive(Args, Debug, Serialize)]
pub struct HookArgs {
    #[command(subcommand)]
    pub command: HookCommand,
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum HookCommand {
    /// Compare truncated hook sums with restricted sums.
    Compare(CompareArgs),
    /// Check the Nekrasov-Okounkov product against the full hook sum.
    Han(HanArgs),
    /// Compare Π 1/(1-q^n)^3 with Σ binom(n+2,2) q^n verbatim.
    Binom3(Binom3Args),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CorrectionArg {
    None,
    Lambda4,
    Variant,
}

#[derive(Args, Debug, Serialize)]
pub struct CompareArgs {
    /// a single n
    #[arg(long, conflicts_with = "n_max")]
    pub n: Option<usize>,
    /// every n from 1 to this
    #[arg(long, default_value_t = 14)]
    pub n_max: usize,
    #[arg(long, default_value_t = 2)]
    pub m: usize,
    #[arg(long, value_enum, default_value_t = CorrectionArg::None)]
    pub correction: CorrectionArg,
}

#[derive(Args, Debug, Serialize)]
pub struct HanArgs {
    #[arg(long, default_value_t = 11)]
    pub n_max: usize,
}

#[derive(Args, Debug, Serialize)]
pub struct Binom3Args {
    #[arg(long, default_value_t = 10)]
    pub order: usize,
}

fn parse_progression(s: &str) -> Result<(u64, u64), String> {
    let (a, b) = s.split_once(',').ok_or("expected `a,b`")?;
    let a: u64 = a.trim().parse().map_err(|e| format!("bad a: {e}"))?;
    let b: u64 = b.trim().parse().map_err(|e| format!("bad b: {e}"))?;
    if a == 0 {
        return Err("a must be positive".into());
    }
    Ok((a, b))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.parallel).build() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let parallel = cli.parallel != 1;
    let result = pool.install(|| commands::run(&cli.command, parallel));
    let outcome = match result {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let params = serde_json::to_value(&cli.command).unwrap_or_default();
    // the subcommand name is already in `command`; keep only its arguments
    let params = match params {
        serde_json::Value::Object(mut m) if m.len() == 1 => m.values_mut().next().map(std::mem::take).unwrap_or_default(),
        other => other,
    };
    let mut stdout = io::stdout().lock();
    if let Err(e) = emit(&mut stdout, cli.format, cli.command.name(), params, &outcome) {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    let _ = emit_findings(&mut io::stderr().lock(), &outcome.findings);
    if outcome.failed {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}
