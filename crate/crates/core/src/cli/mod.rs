//! The `gaprec` command line: `compute`, `verify` and `bench`.
//!
//! [`run`] takes the argument list and returns the exit code and the text
//! destined for stdout and stderr, so the binary is a thin wrapper and tests
//! can drive the interface without spawning a process.

mod bench;
mod compute;
mod verify;

use clap::{Parser, Subcommand, ValueEnum};

pub use bench::BenchRecord;

/// Exit code for success.
pub const EXIT_OK: i32 = 0;
/// Exit code when a verification fails.
pub const EXIT_FAIL: i32 = 1;
/// Exit code for usage errors and rejected inputs.
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "gaprec", version, about = "Exact Bernoulli and Euler numbers with lacunary recurrences")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print one exact value.
    Compute(compute::ComputeArgs),
    /// Check registered identities over a parameter range.
    Verify(verify::VerifyArgs),
    /// Time classic against gap recurrences on a cold cache.
    Bench(bench::BenchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self { code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn usage(msg: impl std::fmt::Display) -> Self {
        Self { code: EXIT_USAGE, stdout: String::new(), stderr: format!("error: {msg}\n") }
    }
}

/// Parses `args` (program name first) and runs the chosen subcommand.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: text }
            } else {
                Outcome::ok(text)
            };
        }
    };
    match cli.command {
        Command::Compute(a) => compute::run_compute(&a),
        Command::Verify(a) => verify::run_verify(&a),
        Command::Bench(a) => bench::run_bench(&a),
    }
}

fn json_strings<T: ToString>(items: impl IntoIterator<Item = T>) -> serde_json::Value {
    serde_json::Value::Array(items.into_iter().map(|s| serde_json::Value::String(s.to_string())).collect())
}
