mod cli;
mod commands;
mod fixtures;
mod report;

use std::process::ExitCode;

use clap::Parser;

use cli::{Cli, Command};
use report::{ErrorBody, ErrorReport, VERSION};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] holoweb::Error),
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Fixtures(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(e) if e.is_parse_error() => 3,
            CliError::Io { .. } => 3,
            CliError::Core(_) | CliError::Usage(_) => 2,
            CliError::Fixtures(_) => 1,
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            CliError::Core(e) if e.is_parse_error() => "parse",
            CliError::Core(_) => "precondition",
            CliError::Io { .. } => "input",
            CliError::Usage(_) => "usage",
            CliError::Fixtures(_) => "fixtures",
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let name = cli.command.name();
    let outcome = match &cli.command {
        Command::Fixtures { run, list, corpus } => {
            fixtures::main(run, *list, corpus.as_deref(), cli.json)
        }
        cmd => commands::run(cmd).map(|r| {
            if cli.json {
                println!("{}", r.to_json());
            } else {
                print!("{}", r.to_text());
            }
        }),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let code = e.exit_code();
            if cli.json {
                let body = ErrorReport {
                    command: name,
                    error: ErrorBody {
                        kind: e.kind().to_string(),
                        message: e.to_string(),
                        exit_code: code.into(),
                    },
                    version: VERSION,
                };
                println!(
                    "{}",
                    serde_json::to_string_pretty(&body).expect("error serializes")
                );
            } else {
                eprintln!("error: {e}");
            }
            ExitCode::from(code)
        }
    }
}
