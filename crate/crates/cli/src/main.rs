//! `lqlab`: command-line front end for the workbench.
//!
//! Exit status: 0 success, 1 a verification mismatch, 2 usage error,
//! 3 resource or precision limit.

mod args;
mod commands;
mod output;

use std::io::Write;
use std::process::ExitCode;
use std::sync::Arc;

use clap::Parser;
use lqlab_core::{set_thread_count, ErrorKind, Progress, Settings};

use args::Cli;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut settings = match cli.threads {
        Some(1) => Settings::sequential(),
        Some(n) => {
            if let Err(e) = set_thread_count(n) {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            Settings::default()
        }
        None => Settings::default(),
    };
    if !cli.quiet {
        settings = settings.with_progress(Arc::new(Progress::stderr()));
    }
    let outcome = match commands::run(&cli, &settings) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(match e.kind() {
                ErrorKind::Usage => 2,
                ErrorKind::Resource => 3,
            });
        }
    };
    let text = outcome.report.render(cli.format);
    let written = match &cli.output {
        Some(path) => std::fs::write(path, text),
        None => std::io::stdout().lock().write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write output: {e}");
        return ExitCode::from(3);
    }
    if outcome.mismatch {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}
