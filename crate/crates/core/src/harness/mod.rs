//! Suite runner and report.
//!
//! A run expands the selected suites into independent jobs, executes them on
//! a small worker pool and sorts the resulting records by
//! `(suite, identity, params)`, so the report bytes depend only on the
//! configuration.

mod suites;

use std::collections::VecDeque;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::sync::Mutex;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use crate::check::{Status, Tally};

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("unknown suite {0:?} (expected quasidet, classical, quasiplucker, quantum, specialization or all)")]
    UnknownSuite(String),
    #[error("unknown format {0:?} (expected json or text)")]
    UnknownFormat(String),
    #[error("bad dims entry {0:?}: expected n:d")]
    BadDims(String),
    #[error("dims ({n}, {d}) must satisfy 1 <= d < n <= 32")]
    DimsOutOfRange { n: usize, d: usize },
    #[error("max_n must lie in 1..=12, got {0}")]
    MaxN(usize),
    #[error("cannot read config file {path}: {source}")]
    ReadConfig { path: PathBuf, source: std::io::Error },
    #[error("invalid config file {path}: {source}")]
    ParseConfig { path: PathBuf, source: Box<toml::de::Error> },
    #[error("output {path} is not writable: {source}")]
    Output { path: PathBuf, source: std::io::Error },
    #[error("NCGRASS_SEED={0:?} is not a 64-bit unsigned integer")]
    EnvSeed(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Quasidet,
    Classical,
    Quasiplucker,
    Quantum,
    Specialization,
    All,
}

impl Suite {
    pub const CONCRETE: [Suite; 5] = [Suite::Quasidet, Suite::Classical, Suite::Quasiplucker, Suite::Quantum, Suite::Specialization];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Quasidet => "quasidet",
            Suite::Classical => "classical",
            Suite::Quasiplucker => "quasiplucker",
            Suite::Quantum => "quantum",
            Suite::Specialization => "specialization",
            Suite::All => "all",
        }
    }

    fn expand(self) -> Vec<Suite> {
        if self == Suite::All {
            Suite::CONCRETE.to_vec()
        } else {
            vec![self]
        }
    }
}

impl FromStr for Suite {
    type Err = ConfigError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::CONCRETE
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| ConfigError::UnknownSuite(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Text,
}

impl FromStr for Format {
    type Err = ConfigError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(Format::Json),
            "text" => Ok(Format::Text),
            _ => Err(ConfigError::UnknownFormat(s.to_string())),
        }
    }
}

/// Parses `"4:2,5:3"` into `[(4, 2), (5, 3)]`.
pub fn parse_dims(s: &str) -> Result<Vec<(usize, usize)>, ConfigError> {
    s.split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|p| {
            let (n, d) = p.split_once(':').ok_or_else(|| ConfigError::BadDims(p.to_string()))?;
            let parse = |x: &str| x.trim().parse::<usize>().map_err(|_| ConfigError::BadDims(p.to_string()));
            Ok((parse(n)?, parse(d)?))
        })
        .collect()
}

pub const DEFAULT_DIMS: [(usize, usize); 5] = [(3, 2), (4, 2), (5, 2), (4, 3), (5, 3)];

/// Everything a run depends on.
///
/// `trials` is the number of seeded draws per size for the randomized
/// suites; the deterministic quantum checks run once whenever `trials > 0`.
/// `max_n` bounds the square sizes of the quasideterminant and classical
/// suites; the quantum kernel additionally stays at `n <= 3`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteConfig {
    pub suite: Suite,
    pub seed: u64,
    pub dims: Vec<(usize, usize)>,
    pub trials: usize,
    pub max_n: usize,
    pub out: Option<PathBuf>,
    pub format: Format,
    pub timings: bool,
    /// Negates one rewriting rule in every quantum context; used to show the
    /// suites notice a broken algebra.
    pub inject_fault: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            suite: Suite::All,
            seed: 0,
            dims: DEFAULT_DIMS.to_vec(),
            trials: 200,
            max_n: 5,
            out: None,
            format: Format::Json,
            timings: false,
            inject_fault: false,
        }
    }
}

impl SuiteConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        for &(n, d) in &self.dims {
            if d == 0 || d >= n || n > 32 {
                return Err(ConfigError::DimsOutOfRange { n, d });
            }
        }
        if !(1..=12).contains(&self.max_n) {
            return Err(ConfigError::MaxN(self.max_n));
        }
        Ok(())
    }
}

/// Optional settings read from a TOML file; command-line flags win.
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub suite: Option<String>,
    pub seed: Option<u64>,
    pub dims: Option<String>,
    pub trials: Option<usize>,
    pub max_n: Option<usize>,
    pub out: Option<PathBuf>,
    pub format: Option<String>,
    pub timings: Option<bool>,
    pub inject_fault: Option<bool>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|source| ConfigError::ReadConfig { path: path.into(), source })?;
        Self::parse_named(&text, path)
    }

    /// Parses TOML text directly; errors name the source as `<inline>`.
    pub fn parse(text: &str) -> Result<Self, ConfigError> {
        Self::parse_named(text, Path::new("<inline>"))
    }

    fn parse_named(text: &str, path: &Path) -> Result<Self, ConfigError> {
        toml::from_str(text).map_err(|source| ConfigError::ParseConfig { path: path.into(), source: Box::new(source) })
    }
}

/// Settings given on the command line.
#[derive(Debug, Clone, Default)]
pub struct Overrides {
    pub suite: Option<String>,
    pub seed: Option<u64>,
    pub dims: Option<String>,
    pub trials: Option<usize>,
    pub max_n: Option<usize>,
    pub out: Option<PathBuf>,
    pub format: Option<String>,
    pub timings: bool,
}

/// Flag, then file, then `NCGRASS_SEED` (seed only), then the default.
pub fn resolve(flags: Overrides, file: FileConfig, env_seed: Option<&str>) -> Result<SuiteConfig, ConfigError> {
    let base = SuiteConfig::default();
    let seed = match flags.seed.or(file.seed) {
        Some(s) => s,
        None => match env_seed {
            Some(s) => s.trim().parse().map_err(|_| ConfigError::EnvSeed(s.to_string()))?,
            None => base.seed,
        },
    };
    let config = SuiteConfig {
        suite: flags.suite.or(file.suite).map(|s| s.parse()).transpose()?.unwrap_or(base.suite),
        seed,
        dims: flags.dims.or(file.dims).map(|s| parse_dims(&s)).transpose()?.unwrap_or(base.dims),
        trials: flags.trials.or(file.trials).unwrap_or(base.trials),
        max_n: flags.max_n.or(file.max_n).unwrap_or(base.max_n),
        out: flags.out.or(file.out),
        format: flags.format.or(file.format).map(|s| s.parse()).transpose()?.unwrap_or(base.format),
        timings: flags.timings || file.timings.unwrap_or(false),
        inject_fault: file.inject_fault.unwrap_or(false),
    };
    config.validate()?;
    Ok(config)
}

/// One reported check: an identity at one parameter point, possibly
/// aggregated over seeded trials.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckRecord {
    pub suite: &'static str,
    pub identity: &'static str,
    pub anchor: &'static str,
    pub params: Value,
    pub status: Status,
    pub elapsed_ms: Option<u64>,
    #[serde(skip)]
    pub detail: Option<String>,
    #[serde(skip)]
    pub counts: Tally,
}

impl CheckRecord {
    fn sort_key(&self) -> (&'static str, &'static str, String) {
        (self.suite, self.identity, self.params.to_string())
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub undefined: usize,
    pub degenerate: usize,
    pub total: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConfigEcho {
    pub suite: Suite,
    pub seed: u64,
    pub dims: Vec<(usize, usize)>,
    pub trials: usize,
    pub max_n: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub version: &'static str,
    pub config: ConfigEcho,
    pub summary: Summary,
    pub checks: Vec<CheckRecord>,
}

impl VerificationReport {
    pub fn success(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn failing_anchors(&self) -> Vec<&'static str> {
        let mut v: Vec<&'static str> = self.checks.iter().filter(|c| c.status == Status::Fail).map(|c| c.anchor).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn find(&self, suite: &str, identity: &str) -> impl Iterator<Item = &CheckRecord> {
        let (suite, identity) = (suite.to_string(), identity.to_string());
        self.checks.iter().filter(move |c| c.suite == suite && c.identity == identity)
    }
}

type Job<'a> = Box<dyn FnOnce() -> Vec<CheckRecord> + Send + 'a>;

/// Runs every selected suite. Never fails: errors inside a check become
/// records with status `fail` (or `undefined` when a certificate is missing).
pub fn run(config: &SuiteConfig) -> VerificationReport {
    let mut jobs: Vec<Job<'_>> = Vec::new();
    if config.trials > 0 {
        for suite in config.suite.expand() {
            suites::jobs(suite, config, &mut jobs);
        }
    }
    let checks = merge(execute(jobs, config.timings));
    let mut summary = Summary::default();
    for c in &checks {
        match c.status {
            Status::Pass => summary.pass += 1,
            Status::Fail => summary.fail += 1,
            Status::Undefined => summary.undefined += 1,
            Status::Degenerate => summary.degenerate += 1,
        }
    }
    summary.total = checks.len();
    VerificationReport {
        version: env!("CARGO_PKG_VERSION"),
        config: ConfigEcho {
            suite: config.suite,
            seed: config.seed,
            dims: config.dims.clone(),
            trials: config.trials,
            max_n: config.max_n,
        },
        summary,
        checks,
    }
}

/// Runs the jobs on a bounded pool; records are tagged with their job index.
fn execute(jobs: Vec<Job<'_>>, timings: bool) -> Vec<(usize, CheckRecord)> {
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get()).min(jobs.len()).max(1);
    let queue = Mutex::new(jobs.into_iter().enumerate().collect::<VecDeque<_>>());
    let out = Mutex::new(Vec::new());
    std::thread::scope(|s| {
        for _ in 0..workers {
            s.spawn(|| loop {
                let Some((index, job)) = queue.lock().expect("queue poisoned").pop_front() else { break };
                let start = Instant::now();
                let mut records = job();
                if timings {
                    let ms = start.elapsed().as_millis() as u64;
                    for r in &mut records {
                        r.elapsed_ms = Some(ms);
                    }
                }
                out.lock().expect("results poisoned").extend(records.into_iter().map(|r| (index, r)));
            });
        }
    });
    out.into_inner().expect("results poisoned")
}

/// Sorts by key and folds records sharing `(suite, identity, params)` in job
/// order, so chunked trials and per-line tallies collapse deterministically.
fn merge(mut tagged: Vec<(usize, CheckRecord)>) -> Vec<CheckRecord> {
    tagged.sort_by(|(ia, a), (ib, b)| a.sort_key().cmp(&b.sort_key()).then(ia.cmp(ib)));
    let mut out: Vec<CheckRecord> = Vec::new();
    for (_, r) in tagged {
        match out.last_mut() {
            Some(last) if last.sort_key() == r.sort_key() => {
                last.counts.merge(&r.counts);
                last.status = last.counts.status();
                last.detail = match last.status {
                    Status::Fail => last.counts.first_failure.clone(),
                    Status::Undefined => last.counts.first_undefined.clone(),
                    _ => last.detail.take(),
                };
                last.elapsed_ms = match (last.elapsed_ms, r.elapsed_ms) {
                    (Some(a), Some(b)) => Some(a + b),
                    (a, b) => a.or(b),
                };
            }
            _ => out.push(r),
        }
    }
    out
}

/// Serializes the report. JSON is pretty-printed with a trailing newline.
pub fn render(report: &VerificationReport, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("report serializes");
            s.push('\n');
            s
        }
        Format::Text => render_text(report),
    }
}

fn render_text(report: &VerificationReport) -> String {
    let mut s = String::new();
    let c = &report.config;
    let _ = writeln!(s, "ncgrass {}  suite={}  seed={}  trials={}  max_n={}", report.version, c.suite.name(), c.seed, c.trials, c.max_n);
    let w_id = report.checks.iter().map(|r| r.identity.len()).max().unwrap_or(8).max(8);
    let w_suite = report.checks.iter().map(|r| r.suite.len()).max().unwrap_or(5).max(5);
    let _ = writeln!(s, "{:<10} {:<w_suite$} {:<w_id$} {:>8}  params", "status", "suite", "identity", "ms");
    for r in &report.checks {
        let ms = r.elapsed_ms.map_or_else(|| "-".to_string(), |m| m.to_string());
        let _ = writeln!(s, "{:<10} {:<w_suite$} {:<w_id$} {:>8}  {}", r.status.to_string(), r.suite, r.identity, ms, r.params);
        if let Some(d) = r.detail.as_ref().filter(|_| r.status == Status::Fail) {
            let _ = writeln!(s, "           {}: {d}", r.anchor);
        }
    }
    let m = &report.summary;
    let _ = writeln!(s, "pass {}  fail {}  undefined {}  degenerate {}  total {}", m.pass, m.fail, m.undefined, m.degenerate, m.total);
    s
}

/// Opens (creating or truncating) the output file so an unwritable path is
/// reported before any suite runs.
pub fn open_output(path: &Path) -> Result<std::fs::File, ConfigError> {
    std::fs::File::create(path).map_err(|source| ConfigError::Output { path: path.into(), source })
}
