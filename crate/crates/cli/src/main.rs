//! `subgame`: generate, solve and experiment with Subtraction games.

mod args;
mod commands;

use std::process::ExitCode;

use clap::Parser;

use args::Cli;

/// Failure categories, each with a stable exit code.
#[derive(Debug)]
pub enum CliError {
    Io(String),
    Usage(String),
    MalformedInput(String),
    ClaimFailed(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Io(_) => 1,
            CliError::Usage(_) => 2,
            CliError::MalformedInput(_) => 3,
            CliError::ClaimFailed(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Io(m) | CliError::Usage(m) | CliError::MalformedInput(m) | CliError::ClaimFailed(m) => m,
        }
    }
}

impl From<subgame_core::Error> for CliError {
    fn from(err: subgame_core::Error) -> Self {
        CliError::Usage(err.to_string())
    }
}

fn configure_threads() -> Result<(), CliError> {
    let Ok(raw) = std::env::var("SUBGAME_THREADS") else {
        return Ok(());
    };
    let threads: usize = raw
        .trim()
        .parse()
        .map_err(|_| CliError::Usage(format!("SUBGAME_THREADS must be a non-negative integer, got {raw:?}")))?;
    if threads > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .map_err(|e| CliError::Usage(e.to_string()))?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap exits 0 for --help/--version and 2 for usage errors.
            e.exit();
        }
    };
    let result = configure_threads().and_then(|()| commands::run(cli));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            if let CliError::ClaimFailed(line) = &err {
                println!("{line}");
            } else {
                eprintln!("error: {}", err.message());
            }
            ExitCode::from(err.code())
        }
    }
}
