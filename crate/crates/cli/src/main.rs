use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use stacky_cli::commands::{cmd_decide, cmd_invariants, cmd_scan, cmd_search, EXIT_ERROR};
use stacky_cli::parse::parse_range;
use stacky_cli::scan::ScanJob;
use stacky_cli::CliError;

/// Integral points on root stacks P^1[sqrt f] over Z[1/2q].
///
/// Exit codes: 0 exists, 2 obstruction, 3 degenerate, 1 error (scan: 4 on a
/// contradiction between verdict and search).
#[derive(Parser)]
#[command(name = "stacky", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether the form "a,b,c" has an integral point, with certificate.
    Decide {
        #[arg(allow_hyphen_values = true)]
        form: String,
        #[arg(long)]
        json: bool,
        /// Height bound of the confirming point search.
        #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u32).range(1..))]
        height: u32,
    },
    /// Genus, d_X, Pic^0 and simple connectivity of "(g; e1, ...)" or "(deg,e);...".
    Invariants { spec: String },
    /// Search for an integral point of height at most H.
    Search {
        #[arg(allow_hyphen_values = true)]
        form: String,
        #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u32).range(1..))]
        height: u32,
    },
    /// Decide and cross-check every form in a box of coefficients.
    Scan {
        #[arg(long, allow_hyphen_values = true)]
        a_range: String,
        #[arg(long, allow_hyphen_values = true)]
        b_range: String,
        #[arg(long, allow_hyphen_values = true)]
        c_range: String,
        #[arg(long, default_value_t = 10_000, value_parser = clap::value_parser!(u32).range(1..))]
        height: u32,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = default_workers())]
        workers: usize,
    },
}

fn default_workers() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

fn run(command: Command) -> Result<i32, CliError> {
    let mut out = io::stdout().lock();
    match command {
        Command::Decide { form, json, height } => cmd_decide(&form, json, height, &mut out),
        Command::Invariants { spec } => cmd_invariants(&spec, &mut out),
        Command::Search { form, height } => cmd_search(&form, height, &mut out),
        Command::Scan {
            a_range,
            b_range,
            c_range,
            height,
            out: path,
            workers,
        } => {
            let job = ScanJob {
                a_range: parse_range(&a_range)?,
                b_range: parse_range(&b_range)?,
                c_range: parse_range(&c_range)?,
                height,
                out: Some(path),
                workers,
            };
            cmd_scan(&job, &mut out)
        }
    }
}

fn main() -> ExitCode {
    // clap's own exit code for usage errors (2) would read as an obstruction
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_ERROR as u8 } else { 0 });
        }
    };
    let code = match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            let _ = io::stdout().flush();
            eprintln!("error: {e}");
            EXIT_ERROR
        }
    };
    ExitCode::from(code as u8)
}
