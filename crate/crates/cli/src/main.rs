use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};

use qschur::harness::{self, parse_window, HarnessError, Selection, SuiteConfig, SuiteReport};

/// Exact verification of affine q-Schur algebra relations.
#[derive(Parser)]
#[command(name = "qschur", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification suites and write a JSON report.
    Verify {
        /// `all` or a comma-separated list of suite names.
        suite: String,
        /// Rank, at least 3.
        #[arg(long)]
        n: Option<usize>,
        /// Tensor degree; defaults to n.
        #[arg(long)]
        r: Option<u32>,
        /// Basis-index window, `LO..HI`.
        #[arg(long, allow_hyphen_values = true)]
        window: Option<String>,
        /// Worker threads (0 = one per core).
        #[arg(long)]
        jobs: Option<usize>,
        /// Report path; defaults to report.json.
        #[arg(long)]
        out: Option<PathBuf>,
        /// File of `key = value` lines; flags given on the command line win.
        #[arg(long)]
        config: Option<PathBuf>,
    },
    /// Apply an element to a basis vector and print the result.
    Compute {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: u32,
        #[arg(long)]
        element: String,
        /// Comma-separated basis indices.
        #[arg(long, allow_hyphen_values = true, value_delimiter = ',')]
        vector: Vec<i64>,
    },
    /// Bubble calculus.
    Bubbles {
        #[command(subcommand)]
        command: BubbleCommand,
    },
}

#[derive(Subcommand)]
enum BubbleCommand {
    /// Reduce a dotted digon to a bubble polynomial.
    Reduce {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        i: i64,
        /// Dots per strand, colors 1..n.
        #[arg(long, value_delimiter = ',')]
        dots: Vec<u32>,
    },
}

/// Errors in what the user asked for, as opposed to failures while running.
struct Usage(String);

#[allow(clippy::too_many_arguments)]
fn verify_config(
    suite: &str,
    n: Option<usize>,
    r: Option<u32>,
    window: Option<&str>,
    jobs: Option<usize>,
    out: Option<PathBuf>,
    config: Option<&PathBuf>,
) -> Result<SuiteConfig, Usage> {
    let usage = |e: HarnessError| Usage(e.to_string());
    let mut cfg = SuiteConfig::new(n.unwrap_or(0));
    if let Some(path) = config {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Usage(format!("cannot read {}: {e}", path.display())))?;
        cfg.apply_config_text(&text).map_err(usage)?;
    }
    if let Some(n) = n {
        cfg.n = n;
        if r.is_none() && config.is_none() {
            cfg.r = n as u32;
        }
    }
    if cfg.n == 0 {
        return Err(Usage("--n is required (or `n = …` in the config file)".into()));
    }
    if let Some(r) = r {
        cfg.r = r;
    }
    if let Some(w) = window {
        cfg.window = Some(parse_window(w).map_err(usage)?);
    }
    if let Some(j) = jobs {
        cfg.jobs = j;
    }
    if out.is_some() {
        cfg.out = out;
    }
    cfg.selection = suite.parse::<Selection>().map_err(usage)?;
    cfg.suites().map_err(usage)?;
    Ok(cfg)
}

fn write_report(report: &SuiteReport, out: Option<PathBuf>) -> Result<bool> {
    for r in report.failures() {
        println!("{r}");
    }
    let s = report.summary;
    println!(
        "{} of {} checks passed ({} failed) in {} ms",
        s.passed, s.total, s.failed, report.duration_ms
    );
    let out = out.unwrap_or_else(|| PathBuf::from("report.json"));
    std::fs::write(&out, report.to_json())
        .with_context(|| format!("writing {}", out.display()))?;
    println!("report written to {}", out.display());
    Ok(report.passed())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Verify {
            suite,
            n,
            r,
            window,
            jobs,
            out,
            config,
        } => match verify_config(&suite, n, r, window.as_deref(), jobs, out, config.as_ref()) {
            Err(Usage(msg)) => {
                eprintln!("error: {msg}");
                return ExitCode::from(2);
            }
            Ok(cfg) => match harness::run_suite(&cfg) {
                // Failing checks are reported; an error means the run could not start.
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(2);
                }
                Ok(report) => write_report(&report, cfg.out),
            },
        },
        Command::Compute {
            n,
            r,
            element,
            vector,
        } => match harness::compute(n, r, &element, &vector) {
            Ok(state) => {
                println!("{state}");
                Ok(true)
            }
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
        },
        Command::Bubbles {
            command: BubbleCommand::Reduce { n, i, dots },
        } => match harness::bubble_reduce(n, i, &dots) {
            Ok(p) => {
                println!("{p}");
                Ok(true)
            }
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
        },
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
