//! `tilekit`: command-line front end.
//!
//! Exit codes: 0 on success, 1 when a verification fails, 2 on usage errors
//! (bad flags, unreadable or malformed input). `TILEKIT_THREADS` caps the
//! worker threads used by the library's parallel loops.

mod args;
mod commands;
mod doc;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};

/// Errors that end the program with exit code 2.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
}

fn configure_threads() -> Result<(), CliError> {
    if let Ok(v) = std::env::var("TILEKIT_THREADS") {
        let n: usize = v.parse().map_err(|_| CliError::Usage(format!("TILEKIT_THREADS must be a positive integer, got {v:?}")))?;
        if n == 0 {
            return Err(CliError::Usage("TILEKIT_THREADS must be positive".into()));
        }
        // Fails only if a pool already exists, which cannot happen here.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    Ok(())
}

fn dispatch(cli: &Cli) -> Result<commands::Output, CliError> {
    configure_threads()?;
    match &cli.command {
        Command::Enumerate(a) => commands::enumerate(a),
        Command::Pf(a) => commands::pf(a),
        Command::Verify(a) => commands::verify(a),
        Command::Bijection(a) => commands::bijection(a),
        Command::Sample(a) => commands::sample(a),
        Command::Arctic(a) => commands::arctic(a),
        Command::Hexagon(a) => commands::hexagon(a),
        Command::Render(a) => commands::render(a),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            // Help and version requests print and succeed; everything else is a usage error.
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    match dispatch(&cli) {
        Ok(out) => {
            let text = if cli.json { serde_json::to_string(&out.json).expect("serializable") } else { out.text };
            // A closed pipe (e.g. `| head`) is not an error worth reporting.
            let _ = writeln!(std::io::stdout().lock(), "{text}");
            if out.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
