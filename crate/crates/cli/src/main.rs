use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, ValueEnum};
use supercochain_cli::{configure_threads, parse, run, CliError, Command, Options, ParityFilter, Report};

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// Exact checks, cohomology and deformations for Lie superalgebra actions.
///
/// Exit status: 0 when every check passes, 1 when a check fails, 2 for
/// unreadable or invalid input, 3 for an internal consistency failure.
#[derive(Debug, Parser)]
#[command(name = "supercochain", version)]
struct Cli {
    #[arg(value_enum)]
    command: Command,
    /// JSON problem file.
    file: PathBuf,
    /// Highest cohomology degree.
    #[arg(long, default_value_t = 3)]
    max_n: usize,
    #[arg(long, value_enum, default_value_t = ParityFilter::Both)]
    parity: ParityFilter,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Truncation order for deform and ch-deform.
    #[arg(long)]
    order: Option<usize>,
    /// Run seeded randomized self-tests on the input as well.
    #[arg(long)]
    seed: Option<u64>,
    /// Include wall-clock time in the report.
    #[arg(long)]
    timing: bool,
}

fn execute(cli: &Cli) -> Result<Report, CliError> {
    configure_threads()?;
    let start = Instant::now();
    let problem = parse(&cli.file)?;
    let opts = Options {
        max_n: cli.max_n,
        parity: cli.parity,
        order: cli.order,
        seed: cli.seed,
    };
    let mut report = run(cli.command, &problem, &cli.file.display().to_string(), &opts)?;
    if cli.timing {
        report.timing_ms = Some(start.elapsed().as_millis() as u64);
    }
    Ok(report)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(report) => {
            match cli.format {
                Format::Text => print!("{}", report.to_text()),
                Format::Json => print!("{}", report.to_json()),
            }
            let broken = report.self_test.as_ref().is_some_and(|s| !s.failures.is_empty());
            ExitCode::from(if broken {
                3
            } else if report.passed {
                0
            } else {
                1
            })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
