mod cli;
mod commands;
mod report;

use std::io::{BufRead, BufReader, Read};
use std::path::Path;
use std::process::ExitCode;

use clap::Parser;
use rayon::prelude::*;

use cli::{Cli, Command};
use commands::{execute, InputError};
use report::{error_json, Report};

const NONTRIVIAL: u8 = 1;
const INPUT_ERROR: u8 = 2;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Command::Batch { file } = &cli.command {
        return batch(file, cli.expect_trivial);
    }
    match execute(&cli.command) {
        Ok(report) => {
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&report.to_json()).unwrap()
                );
            } else {
                println!("{}", report.text);
            }
            exit_code(&report, cli.expect_trivial)
        }
        Err(InputError(msg)) => {
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&error_json(cli.command.name(), &msg)).unwrap()
                );
            }
            eprintln!("error: {msg}");
            ExitCode::from(INPUT_ERROR)
        }
    }
}

fn exit_code(report: &Report, expect_trivial: bool) -> ExitCode {
    if report.failed || (expect_trivial && report.nontrivial) {
        ExitCode::from(NONTRIVIAL)
    } else {
        ExitCode::SUCCESS
    }
}

fn read_lines(file: &Path) -> std::io::Result<Vec<String>> {
    let reader: Box<dyn Read> = if file == Path::new("-") {
        Box::new(std::io::stdin())
    } else {
        Box::new(std::fs::File::open(file)?)
    };
    BufReader::new(reader).lines().collect()
}

/// One compact JSON line per input line, in input order. A bad line gets
/// an error object and the rest still run.
fn batch(file: &Path, expect_trivial: bool) -> ExitCode {
    let lines = match read_lines(file) {
        Ok(l) => l,
        Err(e) => {
            eprintln!("error: {}: {e}", file.display());
            return ExitCode::from(INPUT_ERROR);
        }
    };
    let results: Vec<Result<Report, (String, String)>> = lines
        .par_iter()
        .map(|line| {
            let args = std::iter::once("gauss").chain(line.split_whitespace());
            let cli = Cli::try_parse_from(args).map_err(|e| {
                let first = e.to_string().lines().next().unwrap_or_default().to_string();
                (String::new(), first)
            })?;
            execute(&cli.command).map_err(|InputError(m)| (cli.command.name().to_string(), m))
        })
        .collect();
    let (mut errors, mut flagged) = (false, false);
    for r in &results {
        let line = match r {
            Ok(report) => {
                flagged |= report.failed || (expect_trivial && report.nontrivial);
                report.to_json()
            }
            Err((cmd, msg)) => {
                errors = true;
                error_json(cmd, msg)
            }
        };
        println!("{}", serde_json::to_string(&line).unwrap());
    }
    if errors {
        ExitCode::from(INPUT_ERROR)
    } else if flagged {
        ExitCode::from(NONTRIVIAL)
    } else {
        ExitCode::SUCCESS
    }
}
