//! Command-line surface: subcommands, flags, and the small parsers behind
//! them.

use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use immersions_core::census::{CensusConfig, FlagFilter, Kind, Method};
use immersions_core::orbits::Parallelism;

/// Census of closed curves with n double points on orientable surfaces:
/// count equivalence classes, list catalogs, verify consistency, export
/// diagram records.
#[derive(Parser, Debug)]
#[command(name = "immersions", version, max_term_width = 100)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Count classes of one kind, per genus or in total.
    ///
    /// Exact integers, deterministic across runs and worker counts.
    Count(CountArgs),
    /// Write a catalog of classes, one JSON object per line.
    ///
    /// Each record carries the method, crossing count, genus, canonical
    /// representative (one-line permutation), orbit length, stabilizer
    /// order, and quality/symmetry flags (null where not applicable).
    List(ListArgs),
    /// Run named internal-consistency checks and report pass/fail.
    Verify(VerifyArgs),
    /// Export one drawing-ready diagram record per class as JSON files.
    ExportDiagrams(ExportArgs),
}

/// An inclusive crossing-count range: `4` or `1..9` (both ends included;
/// `1..=9` is accepted too).
#[derive(Copy, Clone, Debug)]
pub struct NRange {
    pub lo: usize,
    pub hi: usize,
}

impl NRange {
    pub fn iter(&self) -> impl Iterator<Item = usize> {
        self.lo..=self.hi
    }
}

impl FromStr for NRange {
    type Err = String;

    fn from_str(s: &str) -> Result<NRange, String> {
        let one = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| format!("invalid crossing count `{t}`"))
        };
        if let Some((a, b)) = s.split_once("..") {
            let b = b.strip_prefix('=').unwrap_or(b);
            let (lo, hi) = (one(a)?, one(b)?);
            if lo > hi {
                return Err(format!("empty range `{s}`"));
            }
            Ok(NRange { lo, hi })
        } else {
            let v = one(s)?;
            Ok(NRange { lo: v, hi: v })
        }
    }
}

fn parse_kind(s: &str) -> Result<Kind, String> {
    Kind::parse(s).ok_or_else(|| {
        format!("unknown kind `{s}`; expected one of oo, uo, ou, uu, optionally suffixed b or c")
    })
}

fn parse_method(s: &str) -> Result<Method, String> {
    Method::parse(s)
        .ok_or_else(|| format!("unknown method `{s}`; expected x, y, u (or u-dihedral), uc (or u-cyclic), z"))
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

/// Flags shared by every computation-driving subcommand.
#[derive(Args, Debug)]
pub struct EngineArgs {
    /// Worker threads for sweeps (0 = one per core). Results are identical
    /// for every setting.
    #[arg(long, global = true, value_name = "N")]
    pub jobs: Option<usize>,

    /// Memory budget for sweep bitmaps, in MB.
    #[arg(long, global = true, value_name = "MB")]
    pub memory_mb: Option<u64>,

    /// Permit crossing counts beyond the default feasibility envelope
    /// (sweeps may take many minutes and gigabytes).
    #[arg(long, global = true)]
    pub allow_slow: bool,
}

impl EngineArgs {
    pub fn census_config(&self) -> CensusConfig {
        let mut cfg = CensusConfig::default();
        if let Some(j) = self.jobs {
            cfg.sweep.parallelism = if j == 1 {
                Parallelism::Sequential
            } else {
                Parallelism::Threads(j)
            };
        }
        if self.memory_mb.is_some() {
            cfg.sweep.memory_budget_mb = self.memory_mb;
        }
        cfg.allow_slow = self.allow_slow;
        cfg
    }
}

#[derive(Args, Debug)]
pub struct CountArgs {
    /// Kind to count: oo, uo, ou, uu (plain), or with suffix c (coloured) /
    /// b (colourable), e.g. uoc, oub.
    #[arg(long, value_parser = parse_kind)]
    pub kind: Kind,

    /// Crossing count or inclusive range, e.g. `--n 4` or `--n 1..9`.
    #[arg(long)]
    pub n: NRange,

    /// Restrict to one genus (0 = spherical).
    #[arg(long)]
    pub g: Option<usize>,

    /// All-genus totals through the character formula (plain kinds only;
    /// reaches far beyond the sweep envelope).
    #[arg(long, conflicts_with_all = ["g", "kink_free", "prime"])]
    pub frobenius: bool,

    /// Count only classes without kinks (length-1 faces).
    #[arg(long, conflicts_with = "prime")]
    pub kink_free: bool,

    /// Count only prime classes: kink-free, irreducible, indecomposable.
    #[arg(long)]
    pub prime: bool,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Write output here instead of stdout.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,

    #[command(flatten)]
    pub engine: EngineArgs,
}

#[derive(Args, Debug)]
pub struct ListArgs {
    /// Kind whose classes to list (each record is the class of one curve
    /// of this kind). Mutually exclusive with --method.
    #[arg(long, value_parser = parse_kind)]
    pub kind: Option<Kind>,

    /// List the raw orbits of one encoding method instead of a kind:
    /// x, y, u (dihedral gauge), uc (cyclic gauge), z.
    #[arg(long, value_parser = parse_method, conflicts_with = "kind")]
    pub method: Option<Method>,

    /// Crossing count or inclusive range.
    #[arg(long)]
    pub n: NRange,

    /// Restrict to one genus (0 = spherical).
    #[arg(long)]
    pub g: Option<usize>,

    /// Keep only classes without kinks.
    #[arg(long, conflicts_with = "prime")]
    pub kink_free: bool,

    /// Keep only prime classes (kink-free, irreducible, indecomposable).
    #[arg(long)]
    pub prime: bool,

    /// Write the catalog here instead of stdout.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,

    /// Directory for cached enumerations, keyed by method and crossing
    /// count; hits skip the sweep entirely.
    #[arg(long, value_name = "DIR")]
    pub cache_dir: Option<PathBuf>,

    #[command(flatten)]
    pub engine: EngineArgs,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Crossing-count range to verify (each check clamps to its own
    /// feasibility envelope).
    #[arg(long, default_value = "1..6")]
    pub n: NRange,

    /// Run only the colour/orientation counting identities.
    #[arg(long)]
    pub theorem4: bool,

    /// Run only the universe-partition and total-agreement sum rules.
    #[arg(long)]
    pub sumrules: bool,

    /// Run specific named checks (repeatable); see --list-checks.
    #[arg(long, value_name = "NAME")]
    pub check: Vec<String>,

    /// Print the available check names and exit.
    #[arg(long)]
    pub list_checks: bool,

    /// Output format (text or json).
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Write the report here instead of stdout.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,

    #[command(flatten)]
    pub engine: EngineArgs,
}

#[derive(Args, Debug)]
pub struct ExportArgs {
    /// Plain kind to export: oo, uo, ou, uu.
    #[arg(long, value_parser = parse_kind, default_value = "oo")]
    pub kind: Kind,

    /// Crossing count or inclusive range.
    #[arg(long)]
    pub n: NRange,

    /// Restrict to one genus.
    #[arg(long)]
    pub g: Option<usize>,

    /// Directory to write the diagram files into (created if missing).
    #[arg(long, value_name = "DIR")]
    pub out: PathBuf,

    #[command(flatten)]
    pub engine: EngineArgs,
}

impl CountArgs {
    pub fn filter(&self) -> Option<FlagFilter> {
        filter_of(self.kink_free, self.prime)
    }
}

impl ListArgs {
    pub fn filter(&self) -> Option<FlagFilter> {
        filter_of(self.kink_free, self.prime)
    }
}

fn filter_of(kink_free: bool, prime: bool) -> Option<FlagFilter> {
    if prime {
        Some(FlagFilter::Prime)
    } else if kink_free {
        Some(FlagFilter::KinkFree)
    } else {
        None
    }
}
