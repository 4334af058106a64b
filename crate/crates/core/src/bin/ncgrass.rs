use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use ncgrass::harness::{open_output, render, resolve, ConfigError, FileConfig, Overrides};

/// Runs the identity verification suites and prints a report.
#[derive(Debug, Parser)]
#[command(name = "ncgrass", version)]
struct Cli {
    /// quasidet, classical, quasiplucker, quantum, specialization or all
    #[arg(long)]
    suite: Option<String>,
    /// Run seed; defaults to NCGRASS_SEED, then 0
    #[arg(long)]
    seed: Option<u64>,
    /// Comma-separated n:d pairs with d < n, e.g. 4:2,5:3
    #[arg(long)]
    dims: Option<String>,
    /// Seeded trials per size
    #[arg(long)]
    trials: Option<usize>,
    /// Largest square size for the quasideterminant and classical suites
    #[arg(long)]
    max_n: Option<usize>,
    /// Write the report here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
    /// json or text
    #[arg(long)]
    format: Option<String>,
    /// Record wall time per check (makes the report nondeterministic)
    #[arg(long)]
    timings: bool,
    /// TOML file with any of the above keys; flags take precedence
    #[arg(long)]
    config: Option<PathBuf>,
}

fn configure(cli: Cli) -> Result<(ncgrass::harness::SuiteConfig, Option<std::fs::File>), ConfigError> {
    let file = cli.config.as_deref().map(FileConfig::load).transpose()?.unwrap_or_default();
    let flags = Overrides {
        suite: cli.suite,
        seed: cli.seed,
        dims: cli.dims,
        trials: cli.trials,
        max_n: cli.max_n,
        out: cli.out,
        format: cli.format,
        timings: cli.timings,
    };
    let env_seed = std::env::var("NCGRASS_SEED").ok();
    let config = resolve(flags, file, env_seed.as_deref())?;
    let out = config.out.as_deref().map(open_output).transpose()?;
    Ok((config, out))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (config, out) = match configure(cli) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("ncgrass: {e}");
            return ExitCode::from(2);
        }
    };
    let report = ncgrass::harness::run(&config);
    let doc = render(&report, config.format);
    let written = match out {
        Some(mut f) => f.write_all(doc.as_bytes()),
        None => std::io::stdout().lock().write_all(doc.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("ncgrass: cannot write report: {e}");
        return ExitCode::from(2);
    }
    if report.success() {
        ExitCode::SUCCESS
    } else {
        for a in report.failing_anchors() {
            eprintln!("ncgrass: failing: {a}");
        }
        ExitCode::from(1)
    }
}
