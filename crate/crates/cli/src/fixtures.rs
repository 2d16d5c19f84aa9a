//! Golden corpus runner. Each fixture is a command line plus the expected
//! values of some of its results, addressed by JSON pointer.

use std::fs;
use std::path::Path;

use clap::Parser;
use serde::Deserialize;
use serde_json::{Map, Value};

use crate::cli::{Cli, Command};
use crate::commands;
use crate::CliError;

const CORPUS: &str = include_str!("../fixtures/corpus.json");

#[derive(Debug, Deserialize)]
pub struct Fixture {
    pub name: String,
    pub anchor: String,
    pub args: Vec<String>,
    pub expect: Map<String, Value>,
}

#[derive(Debug)]
pub struct Outcome {
    pub name: String,
    pub anchor: String,
    pub mismatches: Vec<String>,
}

impl Outcome {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

pub fn load(corpus: Option<&Path>) -> Result<Vec<Fixture>, CliError> {
    let text = match corpus {
        Some(path) => fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        })?,
        None => CORPUS.to_string(),
    };
    serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("bad corpus: {e}")))
}

pub fn run_one(fx: &Fixture) -> Outcome {
    let argv = std::iter::once("holoweb").chain(fx.args.iter().map(String::as_str));
    let mismatches = match Cli::try_parse_from(argv) {
        Err(e) => vec![format!("arguments rejected: {}", e.kind())],
        Ok(Cli {
            command: Command::Fixtures { .. },
            ..
        }) => vec!["fixtures cannot nest".into()],
        Ok(cli) => match commands::run(&cli.command) {
            Err(e) => vec![format!("error: {e}")],
            Ok(report) => {
                let results = Value::Object(report.results);
                fx.expect
                    .iter()
                    .filter_map(|(ptr, want)| {
                        let got = results.pointer(ptr);
                        (got != Some(want)).then(|| {
                            format!(
                                "{ptr}: expected {want}, got {}",
                                got.map_or("nothing".into(), Value::to_string)
                            )
                        })
                    })
                    .collect()
            }
        },
    };
    Outcome {
        name: fx.name.clone(),
        anchor: fx.anchor.clone(),
        mismatches,
    }
}

pub fn main(run: &str, list: bool, corpus: Option<&Path>, json: bool) -> Result<(), CliError> {
    let all = load(corpus)?;
    let chosen: Vec<&Fixture> = all
        .iter()
        .filter(|f| run == "all" || f.name == run)
        .collect();
    if chosen.is_empty() {
        return Err(CliError::Usage(format!("no fixture named `{run}`")));
    }
    if list {
        for f in chosen {
            println!("{:<32} {:<28} {}", f.name, f.anchor, f.args.join(" "));
        }
        return Ok(());
    }
    let outcomes: Vec<Outcome> = chosen.into_iter().map(run_one).collect();
    let failed = outcomes.iter().filter(|o| !o.passed()).count();
    if json {
        let rows: Vec<Value> = outcomes
            .iter()
            .map(|o| {
                serde_json::json!({
                    "name": o.name,
                    "anchor": o.anchor,
                    "passed": o.passed(),
                    "mismatches": o.mismatches,
                })
            })
            .collect();
        let body = serde_json::json!({
            "command": "fixtures",
            "results": { "fixtures": rows, "passed": outcomes.len() - failed, "failed": failed },
            "version": crate::report::VERSION,
        });
        println!("{}", serde_json::to_string_pretty(&body).expect("serializes"));
    } else {
        for o in &outcomes {
            let tag = if o.passed() { "ok  " } else { "FAIL" };
            println!("{tag} {:<32} {}", o.name, o.anchor);
            for m in &o.mismatches {
                println!("       {m}");
            }
        }
        println!("{} passed, {failed} failed", outcomes.len() - failed);
    }
    if failed == 0 {
        Ok(())
    } else {
        Err(CliError::Fixtures(format!("{failed} fixture(s) failed")))
    }
}
