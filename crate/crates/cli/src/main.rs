//! `symspace`: run one job document and print its report.

mod commands;
mod job;
mod render;
mod sampling;

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

use job::{Format, Overrides};

#[derive(Parser, Debug)]
#[command(name = "symspace", version, about = "Exact combinatorics of symmetric pairs")]
struct Args {
    /// Job document (JSON). Reads standard input when omitted or `-`.
    input: Option<PathBuf>,
    /// Output format; overrides `options.format`.
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Seed for the sampling commands; overrides `options.seed`.
    #[arg(long)]
    seed: Option<u64>,
    /// Largest Weyl group to enumerate; overrides `options.budget`.
    #[arg(long)]
    budget: Option<u64>,
    /// Worker threads for per-orbit work; overrides `options.workers`.
    #[arg(long)]
    workers: Option<usize>,
}

fn read_input(path: Option<&PathBuf>) -> Result<String, job::CliError> {
    let mut text = String::new();
    let res = match path {
        Some(p) if p.as_os_str() != "-" => std::fs::read_to_string(p).map(|t| text = t),
        _ => std::io::stdin().read_to_string(&mut text).map(|_| ()),
    };
    res.map_err(|e| job::CliError::parse(format!("cannot read input: {e}")))?;
    Ok(text)
}

fn main() -> ExitCode {
    let args = Args::parse();
    let overrides = Overrides {
        format: args.format,
        seed: args.seed,
        budget: args.budget,
        workers: args.workers,
    };
    let outcome = read_input(args.input.as_ref()).and_then(|text| job::run(&text, &overrides));
    match outcome {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(err) => {
            println!("{}", err.document());
            eprintln!("symspace: {}", err.message);
            ExitCode::from(err.code)
        }
    }
}
