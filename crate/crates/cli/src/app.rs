use std::fmt;
use std::io;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use mtbs::dependency_bound::{janson_stats, monte_carlo_zero_probability, JansonRecord};
use mtbs::lower_bound::{lower_bound_pipeline, Branch, NicepackConfig};
use mtbs::rng::substream;
use mtbs::sensitivity::{bs_at, global_measures, sensitivity_at};
use mtbs::upper_bound::{
    build_low_bs_function, build_with_k, construct_covering_pattern, k_for_n, CoveringPatternSpec,
    DEFAULT_DOMAIN_CONSTANT, MIN_K,
};
use mtbs::{BitString, BsMode, Error, FourSet, GroupSpec, Limits, MintermFunction, Pattern};
use serde::Serialize;

use crate::output::{emit, Format};
use crate::verify::{suite, Level};
use crate::workloads::random_pattern_with_domain;

/// Stream reserved for drawing random patterns, apart from the retry and
/// attempt streams the constructions use.
const PATTERN_STREAM: u64 = u64::MAX;

#[derive(Debug, Parser)]
#[command(name = "mtbs", version, about = "Exact and randomized block-sensitivity tools for Boolean functions defined by a pattern and a transitive group")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format; `eval` prints a bare 0/1 when omitted, everything else defaults to csv.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Write records here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate f at one input.
    Eval(EvalArgs),
    /// Exact s, bs0, bs1, bs over all inputs, or bs at one input.
    Measure(MeasureArgs),
    /// Extract a verified many-block witness.
    LowerWitness(LowerArgs),
    /// Sample a covering pattern for window parameter k.
    Construct(ConstructArgs),
    /// Build a low-block-sensitivity minterm-cyclic function of length n.
    BuildF(BuildArgs),
    /// Dependency-bound statistics and a Monte Carlo estimate for a 4-set.
    Janson(JansonArgs),
    /// One row per n: construction, witness count and thresholds.
    Scaling(ScalingArgs),
    /// Run the oracle-equivalence and structural suites.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct SeedArgs {
    /// Seed for every random choice; recorded in the output.
    #[arg(long, conflicts_with = "entropy")]
    pub seed: Option<u64>,

    /// Draw a fresh seed instead of requiring --seed.
    #[arg(long)]
    pub entropy: bool,
}

impl SeedArgs {
    fn resolve(&self) -> Result<u64, CliError> {
        match (self.seed, self.entropy) {
            (Some(s), _) => Ok(s),
            (None, true) => Ok(rand::random()),
            (None, false) => Err(CliError::usage("randomized subcommand needs --seed (or --entropy)")),
        }
    }
}

#[derive(Debug, Args)]
pub struct FunctionArgs {
    /// Pattern over {0,1,*}; padded with * up to --n.
    #[arg(long)]
    pub pattern: String,

    /// Input length (defaults to the pattern length).
    #[arg(long)]
    pub n: Option<usize>,

    /// `cyclic(N)` or `;`-separated generator image tables (default: cyclic).
    #[arg(long)]
    pub group: Option<String>,
}

impl FunctionArgs {
    fn build(&self) -> Result<MintermFunction, CliError> {
        let p: Pattern = self.pattern.parse()?;
        function(p, self.n, self.group.as_deref())
    }
}

fn function(p: Pattern, n: Option<usize>, group: Option<&str>) -> Result<MintermFunction, CliError> {
    let p = match n {
        Some(n) => p.embed(n)?,
        None => p,
    };
    let group = match group {
        Some(g) => g.parse()?,
        None => GroupSpec::cyclic(p.len())?,
    };
    Ok(MintermFunction::new(group, p)?)
}

#[derive(Debug, Args)]
pub struct LimitArgs {
    /// Largest n for exhaustive per-input block enumeration.
    #[arg(long, default_value_t = Limits::default().block_enum_n)]
    pub block_enum_n: usize,

    /// Largest number of inputs a global sweep may visit.
    #[arg(long, default_value_t = Limits::default().global_inputs)]
    pub global_inputs: u64,
}

impl LimitArgs {
    fn limits(&self) -> Limits {
        Limits { block_enum_n: self.block_enum_n, global_inputs: self.global_inputs }
    }
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[command(flatten)]
    pub f: FunctionArgs,

    #[arg(long)]
    pub x: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Bruteforce,
    Structured,
}

#[derive(Debug, Args)]
pub struct MeasureArgs {
    #[command(flatten)]
    pub f: FunctionArgs,

    /// Measure only at this input.
    #[arg(long)]
    pub x: Option<String>,

    /// Block family at a single input; `structured` needs a 0-input.
    #[arg(long, value_enum, default_value_t = Mode::Bruteforce)]
    pub mode: Mode,

    #[arg(long, default_value_t = 1)]
    pub jobs: usize,

    #[command(flatten)]
    pub limits: LimitArgs,
}

#[derive(Debug, Args)]
pub struct LowerArgs {
    /// Pattern over {0,1,*}; padded with * up to --n.
    #[arg(long, required_unless_present = "random_domain", conflicts_with = "random_domain")]
    pub pattern: Option<String>,

    #[arg(long, required_unless_present = "pattern")]
    pub n: Option<usize>,

    /// Use a seeded random pattern with this many defined positions.
    #[arg(long, requires = "n")]
    pub random_domain: Option<usize>,

    #[arg(long)]
    pub group: Option<String>,

    #[command(flatten)]
    pub seed: SeedArgs,

    #[arg(long, default_value_t = NicepackConfig::default().max_retries)]
    pub max_retries: usize,

    /// Loosens the bad-index limit and size target by this factor.
    #[arg(long, default_value_t = NicepackConfig::default().slack)]
    pub slack: f64,
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    #[arg(long)]
    pub k: usize,

    #[command(flatten)]
    pub seed: SeedArgs,

    #[arg(long, default_value_t = 200)]
    pub max_attempts: usize,

    /// c in the acceptance bound dom <= c K^(3/4) ln^(1/4) K.
    #[arg(long, default_value_t = DEFAULT_DOMAIN_CONSTANT)]
    pub domain_constant: f64,
}

#[derive(Debug, Args)]
pub struct BuildArgs {
    #[arg(long)]
    pub n: usize,

    /// Override the window parameter derived from n.
    #[arg(long)]
    pub k: Option<usize>,

    #[command(flatten)]
    pub seed: SeedArgs,

    #[arg(long, default_value_t = 200)]
    pub max_attempts: usize,
}

#[derive(Debug, Args)]
pub struct JansonArgs {
    #[arg(long)]
    pub k: usize,

    /// Four offsets inside the window, e.g. `0,1,2,3`.
    #[arg(long)]
    pub a: String,

    #[arg(long, default_value_t = 100_000)]
    pub trials: u64,

    #[command(flatten)]
    pub seed: SeedArgs,

    /// Monte Carlo workers; the estimate depends on (seed, trials, jobs).
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
}

#[derive(Debug, Args)]
pub struct ScalingArgs {
    #[arg(long, value_delimiter = ',', required = true)]
    pub n_list: Vec<usize>,

    #[command(flatten)]
    pub seed: SeedArgs,

    #[arg(long, default_value_t = 200)]
    pub max_attempts: usize,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = Level::Quick)]
    pub level: Level,

    /// Seed for the random grids.
    #[arg(long, default_value_t = 2024)]
    pub seed: u64,

    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
}

#[derive(Debug)]
pub enum CliError {
    Core(Error),
    Usage(String),
    Verification(String),
    Io(io::Error),
}

impl CliError {
    fn usage(msg: impl Into<String>) -> Self {
        CliError::Usage(msg.into())
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(Error::InvalidArgument(_)) | CliError::Usage(_) => 2,
            CliError::Core(Error::ConstructionFailure(_)) => 3,
            CliError::Core(Error::ResourceLimit(_)) => 4,
            CliError::Core(Error::Logic(_)) | CliError::Verification(_) | CliError::Io(_) => 1,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Core(Error::InvalidArgument(_)) | CliError::Usage(_) => "invalid_argument",
            CliError::Core(Error::ConstructionFailure(_)) => "construction_failure",
            CliError::Core(Error::ResourceLimit(_)) => "resource_limit",
            CliError::Core(Error::Logic(_)) => "logic_error",
            CliError::Verification(_) => "verification_failure",
            CliError::Io(_) => "io_error",
        }
    }

    /// One-line JSON reason for standard error.
    pub fn reason_line(&self) -> String {
        let reason = match self {
            CliError::Core(Error::InvalidArgument(m)) => m.clone(),
            CliError::Core(e) => e.to_string(),
            CliError::Usage(m) | CliError::Verification(m) => m.clone(),
            CliError::Io(e) => e.to_string(),
        };
        serde_json::json!({ "error": self.kind(), "exit_code": self.exit_code(), "reason": reason }).to_string()
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.reason_line())
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

#[derive(Debug, Serialize)]
struct EvalRecord {
    pattern: String,
    x: String,
    value: u8,
}

#[derive(Debug, Serialize)]
struct PointRecord {
    n: usize,
    x: String,
    value: u8,
    s: usize,
    bs: usize,
    mode: &'static str,
    witness_blocks: String,
}

#[derive(Debug, Serialize)]
struct BuildRecord {
    n: usize,
    k: usize,
    dom_size: usize,
    bs1_bound: usize,
    bs0_bound: f64,
    attempts: usize,
    seed: u64,
    pattern: String,
}

/// Stable scaling header:
/// `n,k,k_clamped,dom_size,bs1_bound,bs0_bound,branch,witness_count,threshold_heavy,threshold_twelfth,threshold_quarter,seed`
#[derive(Debug, Serialize)]
pub struct ScalingRecord {
    pub n: usize,
    pub k: usize,
    /// The derived k fell below the minimum and was raised to it.
    pub k_clamped: bool,
    pub dom_size: usize,
    pub bs1_bound: usize,
    pub bs0_bound: f64,
    pub branch: Branch,
    pub witness_count: usize,
    pub threshold_heavy: usize,
    pub threshold_twelfth: usize,
    pub threshold_quarter: usize,
    pub seed: u64,
}

pub fn run(cli: Cli) -> Result<(), CliError> {
    let format = cli.format.unwrap_or(Format::Csv);
    let out = cli.out.as_deref();
    match cli.command {
        Command::Eval(a) => {
            let f = a.f.build()?;
            let x: BitString = a.x.parse()?;
            let value = f.eval(&x)? as u8;
            match cli.format {
                None if out.is_none() => println!("{value}"),
                _ => emit(out, format, &[EvalRecord { pattern: f.pattern().to_string(), x: x.to_string(), value }])?,
            }
        }
        Command::Measure(a) => {
            let f = a.f.build()?;
            let limits = a.limits.limits();
            match &a.x {
                None => emit(out, format, &[global_measures(&f, &limits, a.jobs)?.to_record()])?,
                Some(x) => {
                    let x: BitString = x.parse()?;
                    let (mode, name) = match a.mode {
                        Mode::Bruteforce => (BsMode::BruteForce, "bruteforce"),
                        Mode::Structured => (BsMode::StructuredZero, "structured"),
                    };
                    let w = bs_at(&f, &x, mode, &limits)?;
                    let rec = PointRecord {
                        n: f.n(),
                        x: x.to_string(),
                        value: w.value_at_input() as u8,
                        s: sensitivity_at(&f, &x)?,
                        bs: w.count(),
                        mode: name,
                        witness_blocks: w.blocks_text(),
                    };
                    emit(out, format, &[rec])?;
                }
            }
        }
        Command::LowerWitness(a) => {
            let seed = a.seed.resolve()?;
            let p = match (&a.pattern, a.random_domain) {
                (Some(p), _) => p.parse()?,
                (None, Some(d)) => {
                    let n = a.n.ok_or_else(|| CliError::usage("--random-domain needs --n"))?;
                    random_pattern_with_domain(n, d, &mut substream(seed, PATTERN_STREAM))?
                }
                (None, None) => return Err(CliError::usage("need --pattern or --random-domain")),
            };
            let f = function(p, a.n, a.group.as_deref())?;
            let cfg = NicepackConfig { max_retries: a.max_retries, slack: a.slack };
            if cfg.slack.is_nan() || cfg.slack <= 0.0 {
                return Err(CliError::usage("--slack must be positive"));
            }
            let report = lower_bound_pipeline(&f, seed, &cfg)?;
            emit(out, format, &[report.to_record()])?;
        }
        Command::Construct(a) => {
            let seed = a.seed.resolve()?;
            let spec = CoveringPatternSpec::with_domain_constant(a.k, a.domain_constant)?;
            let report = construct_covering_pattern(&spec, seed, a.max_attempts)?;
            emit(out, format, &[report.to_record()])?;
        }
        Command::BuildF(a) => {
            let seed = a.seed.resolve()?;
            let c = match a.k {
                Some(k) => build_with_k(a.n, k, seed, a.max_attempts)?,
                None => build_low_bs_function(a.n, seed, a.max_attempts)?,
            };
            let rec = BuildRecord {
                n: c.n,
                k: c.k,
                dom_size: c.report.dom_size,
                bs1_bound: c.bs1_bound(),
                bs0_bound: c.bs0_bound(),
                attempts: c.report.attempts,
                seed,
                pattern: c.function.pattern().to_string(),
            };
            emit(out, format, &[rec])?;
        }
        Command::Janson(a) => {
            let seed = a.seed.resolve()?;
            let set: FourSet = a.a.parse()?;
            let stats = janson_stats(a.k, &set)?;
            let mc = monte_carlo_zero_probability(a.k, &set, a.trials, seed, a.jobs)?;
            emit(out, format, &[JansonRecord::new(&stats, &mc)])?;
        }
        Command::Scaling(a) => {
            let seed = a.seed.resolve()?;
            let rows = scaling_rows(&a.n_list, seed, a.max_attempts)?;
            emit(out, format, &rows)?;
        }
        Command::Verify(a) => {
            let results = suite(a.level, a.seed, a.jobs);
            emit(out, format, &results)?;
            let failed: Vec<&str> = results.iter().filter(|r| !r.passed).map(|r| r.check.as_str()).collect();
            if !failed.is_empty() {
                return Err(CliError::Verification(format!("failed checks: {}", failed.join("; "))));
            }
        }
    }
    Ok(())
}

/// For each n, builds the low-bs function (k raised to the minimum when the
/// derived value is smaller) and runs the witness pipeline on it.
pub fn scaling_rows(ns: &[usize], seed: u64, max_attempts: usize) -> Result<Vec<ScalingRecord>, CliError> {
    let mut rows = Vec::with_capacity(ns.len());
    for &n in ns {
        let derived = k_for_n(n);
        let k = derived.max(MIN_K);
        let c = build_with_k(n, k, seed, max_attempts)?;
        let r = lower_bound_pipeline(&c.function, seed, &NicepackConfig::default())?;
        rows.push(ScalingRecord {
            n,
            k,
            k_clamped: derived < MIN_K,
            dom_size: c.report.dom_size,
            bs1_bound: c.bs1_bound(),
            bs0_bound: c.bs0_bound(),
            branch: r.branch,
            witness_count: r.witness_count,
            threshold_heavy: r.thresholds.heavy,
            threshold_twelfth: r.thresholds.twelfth,
            threshold_quarter: r.thresholds.quarter,
            seed,
        });
    }
    Ok(rows)
}
