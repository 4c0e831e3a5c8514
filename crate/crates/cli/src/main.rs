use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod asym;
mod bij;
mod check;
mod output;
mod seq;

#[derive(Parser)]
#[command(name = "pathgarden", version, about = "Exact enumeration of lattice paths and trees")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a coefficient sequence as `n<TAB>value` lines.
    Seq(Params),
    /// Cross-check formula, series and exhaustive generation.
    Check(Params),
    /// Print a bijection table of (preimage, image) pairs.
    Bij(Params),
    /// Compare exact averages with an asymptotic law (CSV).
    Asym(Params),
}

#[derive(Args, Debug, Clone)]
pub struct Params {
    #[arg(long)]
    pub family: String,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub j: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long, allow_negative_numbers = true)]
    pub a: Option<i64>,
    #[arg(long = "w-power")]
    pub w_power: Option<usize>,
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub t: Option<usize>,
    #[arg(long)]
    pub max: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Tsv)]
    pub format: Format,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Tsv,
    Csv,
    JsonLines,
}

/// Failure modes mapped onto exit codes.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Check(String),
}

impl From<pathgarden::Error> for Failure {
    fn from(e: pathgarden::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

pub type Outcome = Result<String, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.command {
        Command::Seq(p) => seq::run(&p),
        Command::Check(p) => check::run(&p),
        Command::Bij(p) => bij::run(&p),
        Command::Asym(p) => asym::run(&p),
    };
    match result {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(Failure::Check(text)) => {
            print!("{text}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("pathgarden: {msg}");
            ExitCode::from(2)
        }
    }
}
