use std::io::{Read, Write};
use std::process::ExitCode;

use anyhow::Context;
use clap::Parser;
use ordeform::{run, Command, Failure, Options};

/// Exact left-ideal calculus over local model orders, with JSON certificates.
///
/// Reads a job `{"command", "algebra", "payload"}` and prints a certificate.
/// Exit status: 0 on success, 1 on malformed input, 2 when a precondition or
/// check fails.
#[derive(Parser, Debug)]
#[command(name = "ordeform", version)]
struct Cli {
    /// Operation to run; overrides the job's "command" field.
    #[arg(value_enum)]
    command: Option<Command>,

    /// Job file, or "-" for standard input.
    #[arg(long, default_value = "-")]
    input: String,

    /// Seed for randomized pools.
    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Override the algebra's truncation degree N.
    #[arg(long)]
    truncation: Option<usize>,

    /// Refuse enumerations over algebras larger than this.
    #[arg(long, default_value_t = 200_000)]
    max_dim: usize,

    /// Re-verify the emitted certificate before printing it.
    #[arg(long)]
    verify: bool,

    /// Self-test level when no job file is given.
    #[arg(long, value_parser = ["quick", "full"])]
    level: Option<String>,
}

fn read_input(cli: &Cli) -> anyhow::Result<String> {
    if cli.command == Some(Command::Selftest) && cli.input == "-" {
        let level = cli.level.as_deref().unwrap_or("quick");
        return Ok(format!(r#"{{"payload": {{"level": "{level}"}}}}"#));
    }
    let mut s = String::new();
    if cli.input == "-" {
        std::io::stdin().read_to_string(&mut s).context("reading standard input")?;
    } else {
        s = std::fs::read_to_string(&cli.input).with_context(|| format!("reading {}", cli.input))?;
    }
    Ok(s)
}

fn emit(v: &serde_json::Value) {
    // a closed pipe downstream is not our failure
    let _ = writeln!(std::io::stdout().lock(), "{}", serde_json::to_string_pretty(v).expect("JSON values always serialize"));
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let input = match read_input(&cli) {
        Ok(s) => s,
        Err(e) => {
            let f = Failure::parse(format!("{e:#}"));
            emit(&f.to_json());
            return ExitCode::from(f.exit_code());
        }
    };
    let opts = Options { seed: cli.seed, truncation: cli.truncation, max_dim: cli.max_dim, verify: cli.verify };
    match run(&input, cli.command, &opts) {
        Ok(cert) => {
            emit(&cert);
            ExitCode::SUCCESS
        }
        Err(f) => {
            emit(&f.to_json());
            ExitCode::from(f.exit_code())
        }
    }
}
