mod commands;
mod input;
mod repfile;

use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug)]
pub enum CliError {
    /// Unreadable or malformed input; exit code 2.
    Input(String),
    /// The solver gave up; exit code 3.
    Solver(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Parser)]
#[command(name = "quandlekit", version, about = "Quandle colorings and parabolic representations of links")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
pub struct DiagramInput {
    /// PD code file; `-` or nothing reads stdin
    pub file: Option<String>,
    /// Built-in diagram: unknot, trefoil, hopf, borromean, borromean-mirror
    #[arg(long)]
    pub builtin: Option<String>,
}

#[derive(Args, Clone)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    /// Write to this file instead of stdout
    #[arg(long)]
    pub out: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Print the raw and simplified quandle and group presentations
    Present {
        #[command(flatten)]
        input: DiagramInput,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Enumerate colorings by a finite quandle
    Color {
        #[command(flatten)]
        input: DiagramInput,
        /// trivial:n | dihedral:n | eisermann:m,n | conj:<groupfile>:k
        #[arg(long)]
        quandle: Option<String>,
        /// Also report tricolorability
        #[arg(long)]
        tricolor: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Solve for parabolic colorings and report the representations
    Parabolic {
        #[command(flatten)]
        input: DiagramInput,
        /// List the raw solver points with their sign branches
        #[arg(long)]
        raw: bool,
        /// Residual tolerance for the relator check
        #[arg(long, default_value_t = 1e-9, value_parser = positive)]
        tolerance: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 4096)]
        max_branches: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Check representation files; two or more files are also compared
    Verify {
        #[arg(required = true)]
        files: Vec<String>,
        #[arg(long, default_value_t = 1e-9, value_parser = positive)]
        tolerance: f64,
        #[command(flatten)]
        output: OutputArgs,
    },
}

fn positive(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(v) if v > 0.0 && v.is_finite() => Ok(v),
        _ => Err(format!("`{s}` is not a positive number")),
    }
}

/// Rendered output plus whether every check passed.
pub struct Report {
    pub json: serde_json::Value,
    pub table: String,
    pub ok: bool,
}

fn emit(report: &Report, output: &OutputArgs) -> Result<(), CliError> {
    let text = match output.format {
        Format::Json => serde_json::to_string_pretty(&report.json).expect("values serialize") + "\n",
        Format::Table => report.table.clone(),
    };
    match &output.out {
        Some(path) => fs::write(path, text).map_err(|e| CliError::Input(format!("cannot write {path}: {e}"))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let (result, output) = match &cli.command {
        Command::Present { input, output } => (commands::present(input), output),
        Command::Color { input, quandle, tricolor, output } => {
            (commands::color(input, quandle.as_deref(), *tricolor), output)
        }
        Command::Parabolic { input, raw, tolerance, seed, max_branches, output } => {
            (commands::parabolic(input, *raw, *tolerance, *seed, *max_branches), output)
        }
        Command::Verify { files, tolerance, output } => (commands::verify(files, *tolerance), output),
    };
    let outcome = result.and_then(|r| emit(&r, output).map(|_| r.ok));
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(CliError::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Solver(msg)) => {
            eprintln!("solver failure: {msg}");
            ExitCode::from(3)
        }
    }
}
