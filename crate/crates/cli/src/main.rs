//! Command-line front end: batch classification, admissibility checking, and
//! identity-suite runs over JSON documents.

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use bubbles_cli::commands::{self, CmdError, EXIT_CHECK_FAILED};
use bubbles_cli::schema::Report;
use bubbles_cli::suite;

#[derive(Parser)]
#[command(
    name = "bubbles",
    about = "Exact scalar data of affine/cyclotomic Brauer and Kauffman categories",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Truncation order for series checks (minimum 8). Overrides the
    /// "order" field of the input document.
    #[arg(long, global = true)]
    order: Option<i64>,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Input file with the JSON job document; stdin when omitted.
    #[arg(long, global = true)]
    input: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Degenerate (Brauer) computations.
    Brauer {
        #[command(subcommand)]
        sub: BrauerCmd,
    },
    /// Quantum (Kauffman) computations with parameters q, t.
    Kauffman {
        #[command(subcommand)]
        sub: KauffmanCmd,
    },
    /// Run the identity suite: every library invariant at the given order.
    Suite {
        /// Inject a deliberate failure (for testing the harness contract).
        #[arg(long)]
        corrupt: bool,
    },
}

#[derive(Subcommand)]
enum BrauerCmd {
    /// Classify a cyclotomic input (p, O): minimal polynomial or zero.
    Classify {
        /// Also run the brute-force divisor oracle and assert agreement.
        #[arg(long)]
        oracle: bool,
    },
    /// Bubble scalars and generating function of a root multiset.
    Omega,
    /// Admissibility (and, with "m", weak admissibility) of a bubble sequence.
    Check,
}

#[derive(Subcommand)]
enum KauffmanCmd {
    /// Classify a cyclotomic input (p, rOO) with parameters q, t.
    Classify {
        /// Also run the brute-force divisor oracle and assert agreement.
        #[arg(long)]
        oracle: bool,
    },
    /// Generating functions, sneeze/duality verdicts, and bar transform of f.
    Series,
}

fn read_input(path: &Option<PathBuf>) -> Result<String, CmdError> {
    match path {
        Some(p) => std::fs::read_to_string(p)
            .map_err(|e| CmdError::parse(format!("cannot read {}: {}", p.display(), e))),
        None => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| CmdError::parse(format!("cannot read stdin: {}", e)))?;
            Ok(buf)
        }
    }
}

fn parse_job<T: serde::de::DeserializeOwned>(text: &str) -> Result<T, CmdError> {
    serde_json::from_str(text).map_err(|e| CmdError::parse(format!("invalid input: {}", e)))
}

fn run(cli: &Cli) -> Result<(Report, i32), CmdError> {
    match &cli.command {
        Command::Brauer { sub } => {
            let text = read_input(&cli.input)?;
            match sub {
                BrauerCmd::Classify { oracle } => {
                    commands::cmd_brauer_classify(parse_job(&text)?, cli.order, *oracle)
                }
                BrauerCmd::Omega => commands::cmd_brauer_omega(parse_job(&text)?, cli.order),
                BrauerCmd::Check => commands::cmd_brauer_check(parse_job(&text)?, cli.order),
            }
        }
        Command::Kauffman { sub } => {
            let text = read_input(&cli.input)?;
            match sub {
                KauffmanCmd::Classify { oracle } => {
                    commands::cmd_kauffman_classify(parse_job(&text)?, cli.order, *oracle)
                }
                KauffmanCmd::Series => {
                    commands::cmd_kauffman_series(parse_job(&text)?, cli.order)
                }
            }
        }
        Command::Suite { corrupt } => {
            let order = commands::effective_order(cli.order, None)?;
            let checks = suite::run_suite(order, *corrupt);
            let pass = checks.iter().all(|c| c.pass);
            let code = if pass { 0 } else { EXIT_CHECK_FAILED };
            Ok((
                Report::Suite {
                    order,
                    pass,
                    checks,
                },
                code,
            ))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((report, code)) => {
            match cli.format {
                Format::Json => {
                    println!("{}", serde_json::to_string(&report).expect("serializable report"))
                }
                Format::Text => print!("{}", report.render_text()),
            }
            ExitCode::from(code as u8)
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code as u8)
        }
    }
}
