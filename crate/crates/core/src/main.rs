use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use su21_invariants::parse::{parse_element, Context};
use su21_invariants::suite::{run_suite, Suite, SuiteConfig, DEFAULT_MAX_DEGREE, DEFAULT_MAX_FILTRATION};

#[derive(Parser)]
#[command(name = "su21", version, about = "Invariants of U(sl3) ⊗ C(p) for K = S(U(2)×U(1))")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite; exits nonzero if any check fails.
    Verify {
        suite: Suite,
        #[arg(long, default_value_t = DEFAULT_MAX_DEGREE)]
        max_degree: usize,
        #[arg(long, default_value_t = DEFAULT_MAX_FILTRATION)]
        max_filtration: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Include wall-clock time in the report.
        #[arg(long)]
        timing: bool,
    },
    /// Print the canonical form of an expression.
    Eval {
        #[arg(long, value_enum)]
        context: Context,
        expr: String,
    },
    /// Print the product of two expressions.
    Mul {
        #[arg(long, value_enum)]
        context: Context,
        lhs: String,
        rhs: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify { suite, max_degree, max_filtration, format, out, timing } => {
            let config = SuiteConfig { max_degree, max_filtration, timing };
            let report = match run_suite(suite, &config) {
                Ok(r) => r,
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(2);
                }
            };
            let text = match format {
                Format::Text => report.to_string(),
                Format::Json => report.to_json() + "\n",
            };
            match out {
                Some(path) => {
                    if let Err(e) = fs::write(&path, &text) {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return ExitCode::from(2);
                    }
                }
                None => print!("{text}"),
            }
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Command::Eval { context, expr } => match parse_element(&expr, context) {
            Ok(x) => {
                println!("{x}");
                ExitCode::SUCCESS
            }
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(2)
            }
        },
        Command::Mul { context, lhs, rhs } => {
            let parsed = parse_element(&lhs, context).and_then(|a| parse_element(&rhs, context).map(|b| (a, b)));
            match parsed {
                Ok((a, b)) => {
                    println!("{}", a.mul(&b).expect("same context"));
                    ExitCode::SUCCESS
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(2)
                }
            }
        }
    }
}
