//! The `anyonrg` command-line tool.
//!
//! Every command writes one table (CSV with `#` metadata lines, or JSON) that embeds the
//! fully resolved configuration. Exit codes: 0 success, 1 failed check or runtime error,
//! 2 usage error. `ANYONRG_THREADS` caps the worker pool.

mod commands;
mod config;
mod table;

use std::io::Write;

use clap::Parser;

pub use commands::{frozen_normalization, CommandOutput, NORMALIZATION_DEPTH, NORMALIZATION_FRACTIONS};
pub use config::{Cli, CommandKind, CommonArgs, OutputFormat, RunConfig};
pub use table::{Table, SCHEMA_VERSION};

use crate::{Error, Result};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Executes one resolved configuration and returns the rendered output and pass flag.
pub fn execute(cfg: &RunConfig) -> Result<(String, bool)> {
    let out = match cfg.command {
        CommandKind::Verify => commands::verify(cfg)?,
        CommandKind::Flow => commands::flow(cfg)?,
        CommandKind::Chirality => commands::chirality(cfg)?,
        CommandKind::Correlator => commands::correlator(cfg)?,
        CommandKind::Gs => commands::gs(cfg)?,
    };
    Ok((out.table.render(cfg), out.passed))
}

fn configure_threads() {
    if let Some(n) = std::env::var("ANYONRG_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        // A pool may already exist when called twice in one process; keep it.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
}

fn is_usage_error(e: &Error) -> bool {
    matches!(
        e,
        Error::Config(_) | Error::InvalidSeparation(_) | Error::InvalidLevel | Error::InvalidLattice(_) | Error::CoincidentPoints
    )
}

/// Runs the tool on explicit arguments and returns the process exit code.
pub fn run<I, S>(args: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    configure_threads();
    let cfg = match RunConfig::from_cli(&cli) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    let (text, passed) = match execute(&cfg) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return if is_usage_error(&e) { EXIT_USAGE } else { EXIT_CHECK_FAILED };
        }
    };
    let written = match &cfg.out {
        Some(path) => std::fs::write(path, &text),
        None => std::io::stdout().lock().write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return EXIT_CHECK_FAILED;
    }
    if passed {
        EXIT_OK
    } else {
        eprintln!("one or more checks failed");
        EXIT_CHECK_FAILED
    }
}
