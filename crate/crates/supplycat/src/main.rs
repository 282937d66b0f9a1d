//! Thin command-line front end over the suite registry.
//!
//! Exit codes: 0 = all checks passed, 1 = at least one check failed,
//! 2 = usage error (unknown suite, bad flags, unreadable file).

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use supplycat::suites::{registry, run_suite, SuiteBounds};

#[derive(Parser)]
#[command(
    name = "supplycat",
    version,
    about = "Verify prop, symmetric monoidal category, and supply laws on finite instances"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the registered suites.
    List,
    /// Run one suite by name.
    Check {
        /// Suite name (see `supplycat list`).
        suite: String,
        /// Largest finite-set size / dimension index in object alphabets.
        #[arg(long, default_value_t = 2)]
        max_leaf: usize,
        /// Deepest tensor tree in object samples.
        #[arg(long, default_value_t = 3)]
        max_depth: usize,
        /// Largest prop arity enumerated.
        #[arg(long, default_value_t = 3)]
        max_arity: usize,
        /// Largest cospan apex enumerated.
        #[arg(long, default_value_t = 4)]
        max_apex: usize,
        /// Seed for sampled (non-exhaustive) checks.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Presentation file in the `gen`/`rel` text format.
        #[arg(long)]
        presentation: Option<PathBuf>,
    },
}

#[derive(Copy, Clone, ValueEnum)]
enum Format {
    Text,
    Json,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::List => {
            for info in registry() {
                let tag = if info.expected_failure {
                    " [expected to fail]"
                } else {
                    ""
                };
                println!("{:28} {}{}", info.name, info.description, tag);
            }
            ExitCode::SUCCESS
        }
        Command::Check {
            suite,
            max_leaf,
            max_depth,
            max_arity,
            max_apex,
            seed,
            format,
            presentation,
        } => {
            if max_leaf > 4 || max_arity > 4 || max_apex > 6 || max_depth > 6 {
                eprintln!(
                    "error: bounds out of range (max-leaf ≤ 4, max-arity ≤ 4, max-apex ≤ 6, max-depth ≤ 6)"
                );
                return ExitCode::from(2);
            }
            let text = match &presentation {
                None => None,
                Some(path) => match std::fs::read_to_string(path) {
                    Ok(t) => Some(t),
                    Err(e) => {
                        eprintln!("error: cannot read {}: {e}", path.display());
                        return ExitCode::from(2);
                    }
                },
            };
            let bounds = SuiteBounds {
                max_leaf,
                max_depth,
                max_arity,
                max_apex,
                seed,
            };
            let report = match run_suite(&suite, &bounds, text.as_deref()) {
                Some(r) => r,
                None => {
                    eprintln!("error: unknown suite `{suite}` (try `supplycat list`)");
                    return ExitCode::from(2);
                }
            };
            match format {
                Format::Text => println!("{report}"),
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&report).expect("reports serialize")
                ),
            }
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
    }
}
