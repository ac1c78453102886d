//! `component-ranks`: counts, polynomials, distributions, normalised tables,
//! limit constants and verification suites from the command line.

mod args;
mod cache;
mod commands;
mod engine;
mod error;
mod output;
mod verify;

use std::fs::File;
use std::io::{self, BufWriter, Write};

use clap::Parser;

use args::{Cli, Command, Format};
use cache::Cache;
use commands::Digits;
use error::{exit, CliError};

fn run(cli: Cli) -> Result<(), CliError> {
    let cache = Cache::from_env();
    let needs_dickman = matches!(cli.command, Command::Constants | Command::Dickman { .. });
    if let (true, Some(c)) = (needs_dickman, &cache) {
        if let Err(e) = c.prime_dickman() {
            eprintln!("warning: Dickman table cache in {} unusable: {e}", c.dir().display());
        }
    }
    let digits = Digits::from_precision(cli.output.precision);
    let mut sink: Box<dyn Write> = match &cli.output.output {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    let format = cli.output.format;
    let mut verification_failures = 0;
    match cli.command {
        Command::Count { kind, n } => commands::count(kind, &n)?.render(format, &mut sink)?,
        Command::Poly { kind, n, list, side } => {
            let p = commands::poly(kind, n, &list, side)?;
            if format == Format::Text {
                writeln!(sink, "{}", p.display)?;
            } else {
                p.table.render(format, &mut sink)?;
            }
        }
        Command::Pmf { object, side, n, engine } => {
            commands::pmf(object.kind, object.rank, side, n, engine, digits, cache.as_ref())?.render(format, &mut sink)?
        }
        Command::Stats { object, side, n, engine } => {
            commands::stats_table(object.kind, object.rank, side, &n, engine, digits, cache.as_ref())?
                .render(format, &mut sink)?
        }
        Command::Table { object, n, engine, raw } => {
            commands::table(object.kind, object.rank, &n, engine, raw, digits, cache.as_ref())?.render(format, &mut sink)?
        }
        Command::Constants => commands::constants(cli.output.precision)?.render(format, &mut sink)?,
        Command::Dickman { rank, x } => commands::dickman(rank, &x, cli.output.precision)?.render(format, &mut sink)?,
        Command::Verify { suite } => {
            let outcomes = verify::run(suite);
            verification_failures = outcomes.iter().filter(|o| !o.passed).count();
            verify::report(&outcomes).render(format, &mut sink)?;
        }
    }
    sink.flush()?;
    if verification_failures > 0 {
        return Err(CliError::Verification {
            failed: verification_failures,
        });
    }
    Ok(())
}

fn main() {
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(()) => exit::OK,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    };
    std::process::exit(code);
}
