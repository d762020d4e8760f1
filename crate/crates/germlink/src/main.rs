use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use germlink::sweep::{self, SweepError};
use germlink::{analyze, json, markdown, scan, ChiSelection, ParamRange};
use germlink_core::germ::ScanConfig;
use germlink_core::plumbing::to_dot;
use germlink_core::{BigInt, Rational};

const EXIT_IO: u8 = 1;
const EXIT_INVALID: u8 = 2;
const EXIT_INVARIANT: u8 = 3;

/// Exact invariants of the links and Milnor fibres of
/// F = conj(xy)(x^p + y^q) + z^r.
#[derive(Parser, Debug)]
#[command(name = "germlink", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run the full pipeline for one triple.
    Analyze(AnalyzeArgs),
    /// Analyse every triple in the given ranges and write one table.
    Sweep(SweepArgs),
    /// Numerically search for critical points of the argument map (diagnostic).
    Scan(ScanArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ReportFormat {
    Json,
    Markdown,
    Dot,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TableFormat {
    Json,
    Markdown,
}

#[derive(clap::Args, Debug)]
struct AnalyzeArgs {
    #[arg(long, allow_hyphen_values = true)]
    p: BigInt,
    #[arg(long, allow_hyphen_values = true)]
    q: BigInt,
    #[arg(long, allow_hyphen_values = true)]
    r: BigInt,
    #[arg(long, value_enum, default_value = "json")]
    format: ReportFormat,
    /// Which chi(F) convention to display: literal, join or both.
    #[arg(long, default_value_t = ChiSelection::Literal)]
    chi_convention: ChiSelection,
}

#[derive(clap::Args, Debug)]
struct SweepArgs {
    /// `N` or `A..B` (inclusive).
    #[arg(long)]
    p: ParamRange,
    #[arg(long)]
    q: ParamRange,
    #[arg(long)]
    r: ParamRange,
    #[arg(long)]
    out: PathBuf,
    #[arg(long, value_enum, default_value = "json")]
    format: TableFormat,
    #[arg(long, default_value_t = ChiSelection::Literal)]
    chi_convention: ChiSelection,
}

#[derive(clap::Args, Debug)]
struct ScanArgs {
    #[arg(long)]
    p: u32,
    #[arg(long)]
    q: u32,
    #[arg(long, default_value_t = 10_000)]
    samples: u64,
    /// Positive rational, e.g. `1` or `1/2`.
    #[arg(long, default_value = "1")]
    radius: Rational,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

fn run_analyze(args: AnalyzeArgs) -> ExitCode {
    match analyze(args.p, args.q, args.r) {
        Ok(report) => {
            let text = match args.format {
                ReportFormat::Json => json::to_string(&json::report(&report, args.chi_convention)),
                ReportFormat::Markdown => markdown::render(&report, args.chi_convention),
                ReportFormat::Dot => to_dot(&report.graph),
            };
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(err) => {
            match args.format {
                ReportFormat::Json => print!("{}", json::to_string(&json::error(&err))),
                _ => eprintln!("error: {err}"),
            }
            ExitCode::from(err.exit_code() as u8)
        }
    }
}

fn run_sweep(args: SweepArgs) -> ExitCode {
    let threads = match sweep::threads_from_env() {
        Ok(t) => t,
        Err(err) => {
            eprintln!("error: {err}");
            return ExitCode::from(EXIT_INVALID);
        }
    };
    let result = match sweep::run_sweep([args.p, args.q, args.r], threads) {
        Ok(result) => result,
        Err(err @ SweepError::Invariant { .. }) => {
            eprintln!("error: {err}");
            return ExitCode::from(EXIT_INVARIANT);
        }
        Err(err) => {
            eprintln!("error: {err}");
            return ExitCode::from(EXIT_IO);
        }
    };
    let text = match args.format {
        TableFormat::Json => json::to_string(&sweep::to_json(&result, args.chi_convention)),
        TableFormat::Markdown => sweep::to_markdown(&result),
    };
    if let Err(err) = std::fs::write(&args.out, text) {
        eprintln!("error: cannot write {}: {err}", args.out.display());
        return ExitCode::from(EXIT_IO);
    }
    for s in &result.skipped {
        let [p, q, r] = s.triple;
        eprintln!("skipped ({p}, {q}, {r}): {}", s.reason);
    }
    println!(
        "analysed {} triples, skipped {}; wrote {}",
        result.reports.len(),
        result.skipped.len(),
        args.out.display()
    );
    ExitCode::SUCCESS
}

fn run_scan(args: ScanArgs) -> ExitCode {
    if args.p < 2 || args.q < 2 || !args.radius.is_positive() {
        eprintln!("error: scan needs p, q >= 2 and a positive radius");
        return ExitCode::from(EXIT_INVALID);
    }
    let pool = match sweep::threads_from_env().and_then(sweep::pool) {
        Ok(pool) => pool,
        Err(err) => {
            eprintln!("error: {err}");
            return ExitCode::from(EXIT_INVALID);
        }
    };
    let config = ScanConfig {
        sample_count: args.samples,
        radius: args.radius.clone(),
        seed: args.seed,
    };
    let report = scan::parallel_scan(args.p, args.q, &config, &pool);
    print!("{}", json::to_string(&json::scan(&report, &args.radius, args.seed)));
    ExitCode::SUCCESS
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Analyze(args) => run_analyze(args),
        Command::Sweep(args) => run_sweep(args),
        Command::Scan(args) => run_scan(args),
    }
}
