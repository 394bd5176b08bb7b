use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use prym::cli::Cli;
use prym::{execute, CliError};

fn run(cli: &Cli) -> Result<u8, CliError> {
    let outcome = execute(&cli.config())?;
    let text = serde_json::to_string_pretty(&outcome.report)? + "\n";
    match &cli.output {
        Some(path) => std::fs::write(path, text).map_err(|source| CliError::Write { path: path.clone(), source })?,
        None => std::io::stdout().write_all(text.as_bytes()).map_err(|source| CliError::Write { path: "<stdout>".into(), source })?,
    }
    let ks = &outcome.report["ks_certificate"];
    if ks.is_object() {
        eprintln!("verdict: {} (rank {} of {})", outcome.verdict, ks["rank"], ks["max_rank"]);
    } else {
        eprintln!("verdict: {}", outcome.verdict);
    }
    Ok(outcome.exit_code())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
