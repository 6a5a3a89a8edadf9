use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use sepset_cli::{effective_bounds, fixtures, parse_file, run_checks, Format};

const EXIT_FAIL: u8 = 1;
const EXIT_INVALID: u8 = 2;
const EXIT_BOUND: u8 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "sepset",
    about = "Audit finite sets with inequality against their laws"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum OutputFormat {
    Text,
    Machine,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run the checks of a spec document.
    Audit {
        file: PathBuf,
        /// Only run checks whose law id matches this glob.
        #[arg(long = "check", value_name = "GLOB")]
        check: Option<String>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
        #[arg(long, value_name = "N")]
        max_atoms: Option<usize>,
        #[arg(long, value_name = "N")]
        max_enum: Option<usize>,
        /// Exit with status 3 when a check was skipped for exceeding a bound.
        #[arg(long)]
        strict_bounds: bool,
        /// Include per-check wall-clock times.
        #[arg(long)]
        timings: bool,
    },
    /// Print the built-in documents, or write them into a directory.
    Fixtures {
        #[arg(long, value_name = "DIR")]
        out: Option<PathBuf>,
    },
    Version,
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Audit {
            file,
            check,
            format,
            max_atoms,
            max_enum,
            strict_bounds,
            timings,
        } => {
            let doc = match parse_file(&file) {
                Ok(d) => d,
                Err(e) => {
                    match e.location() {
                        Some(_) => eprintln!("{}:{e}", file.display()),
                        None => eprintln!("error: {e}"),
                    }
                    return ExitCode::from(EXIT_INVALID);
                }
            };
            let bounds = effective_bounds(&doc, max_atoms, max_enum);
            let report = match run_checks(&doc, check.as_deref(), bounds) {
                Ok(r) => r,
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(EXIT_INVALID);
                }
            };
            let format = match format {
                OutputFormat::Text => Format::Text,
                OutputFormat::Machine => Format::Machine,
            };
            print!("{}", report.emit(format, timings));
            if report.any_failed() {
                ExitCode::from(EXIT_FAIL)
            } else if strict_bounds && report.any_skipped() {
                ExitCode::from(EXIT_BOUND)
            } else {
                ExitCode::SUCCESS
            }
        }
        Command::Fixtures { out } => {
            match out {
                None => {
                    for (k, (name, text)) in fixtures::all().iter().enumerate() {
                        if k > 0 {
                            println!();
                        }
                        println!("# ---- {name}");
                        print!("{text}");
                    }
                }
                Some(dir) => {
                    if let Err(e) = std::fs::create_dir_all(&dir) {
                        eprintln!("cannot create {}: {e}", dir.display());
                        return ExitCode::from(EXIT_INVALID);
                    }
                    for (name, text) in fixtures::all() {
                        let path = dir.join(name);
                        if let Err(e) = std::fs::write(&path, text) {
                            eprintln!("cannot write {}: {e}", path.display());
                            return ExitCode::from(EXIT_INVALID);
                        }
                        println!("{}", path.display());
                    }
                }
            }
            ExitCode::SUCCESS
        }
        Command::Version => {
            println!("sepset {}", env!("CARGO_PKG_VERSION"));
            ExitCode::SUCCESS
        }
    }
}
