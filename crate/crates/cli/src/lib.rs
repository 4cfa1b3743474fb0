//! Reads problem files, runs checks and cohomology computations, and emits
//! reports.

pub mod error;
pub mod problem;
pub mod report;
pub mod run;

pub use error::CliError;
pub use problem::{parse, parse_str, ProblemFile, TripleSeries};
pub use report::Report;
pub use run::{run, Command, Options, ParityFilter};

/// Sizes the global thread pool from `SUPERCOCHAIN_THREADS` when set.
pub fn configure_threads() -> Result<(), CliError> {
    let Ok(value) = std::env::var("SUPERCOCHAIN_THREADS") else {
        return Ok(());
    };
    let n: usize = value.trim().parse().ok().filter(|&n| n > 0).ok_or_else(|| CliError::Validation {
        section: "SUPERCOCHAIN_THREADS".into(),
        message: format!("expected a positive integer, got \"{value}\""),
    })?;
    // A pool that is already built keeps its size.
    let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    Ok(())
}
