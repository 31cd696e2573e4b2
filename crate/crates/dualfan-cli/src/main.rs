use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};
use dualfan_cli::{render, run, Command, JobRequest};
use serde_json::Value;

#[derive(Parser)]
#[command(name = "dualfan", version, about = "Dual fans, toric LG models and mirror pipelines")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Degree bound for Gorenstein certificates.
    #[arg(long, global = true, default_value_t = 3)]
    height_bound: usize,
    /// Progress and timing on stderr.
    #[arg(long, global = true)]
    verbose: bool,
}

#[derive(Subcommand)]
enum Cmd {
    /// Whether two fans are dual.
    Dualcheck { a: PathBuf, b: PathBuf },
    /// Validate a fan and report completeness and smoothness.
    FanValidate { fan: PathBuf },
    /// Berglund-Hubsch-Krawitz pair.
    Bhk { input: PathBuf },
    /// Batyrev-Borisov pair.
    Bb { input: PathBuf },
    /// Givental mirror of a complete intersection.
    Givental { input: PathBuf },
    /// Hori-Vafa mirror of a complete intersection.
    HoriVafa { input: PathBuf },
    /// The quintic threefold and its mirror.
    Quintic,
    /// Section polytope of a divisor.
    SectionPolytope { input: PathBuf },
    /// Fan of a split vector bundle.
    BundleFan { input: PathBuf },
}

fn load(path: &Path) -> Result<Value> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

fn job(cli: &Cli) -> Result<JobRequest> {
    let (command, paths): (Command, Vec<&PathBuf>) = match &cli.command {
        Cmd::Dualcheck { a, b } => (Command::DualCheck, vec![a, b]),
        Cmd::FanValidate { fan } => (Command::FanValidate, vec![fan]),
        Cmd::Bhk { input } => (Command::Bhk, vec![input]),
        Cmd::Bb { input } => (Command::Bb, vec![input]),
        Cmd::Givental { input } => (Command::Givental, vec![input]),
        Cmd::HoriVafa { input } => (Command::HoriVafa, vec![input]),
        Cmd::Quintic => (Command::Quintic, vec![]),
        Cmd::SectionPolytope { input } => (Command::SectionPolytope, vec![input]),
        Cmd::BundleFan { input } => (Command::BundleFan, vec![input]),
    };
    Ok(JobRequest {
        command,
        inputs: paths.into_iter().map(|p| load(p)).collect::<Result<_>>()?,
        height_bound: cli.height_bound,
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let job = match job(&cli) {
        Ok(j) => j,
        Err(e) => {
            eprintln!("dualfan: {e:#}");
            return ExitCode::from(2);
        }
    };
    let start = Instant::now();
    if cli.verbose {
        eprintln!("dualfan: running {}", job.command.name());
    }
    let outcome = run(&job);
    if cli.verbose {
        eprintln!("dualfan: {} finished in {:.3?}, exit {}", job.command.name(), start.elapsed(), outcome.exit_code);
    }
    if let Some(err) = outcome.report.get("error").and_then(Value::as_str) {
        eprintln!("dualfan: {err}");
    }
    let text = render(&outcome.report);
    let written = match &cli.out {
        Some(path) => std::fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    };
    if let Err(e) = written {
        eprintln!("dualfan: {e:#}");
        return ExitCode::from(2);
    }
    ExitCode::from(outcome.exit_code as u8)
}
