use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// A claim together with the polynomial identity or point backing it.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub claim: String,
    pub witness: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub inputs: Map<String, Value>,
    pub results: Map<String, Value>,
    pub certificates: Vec<Certificate>,
    pub warnings: Vec<String>,
    pub version: String,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Self {
            command: command.to_string(),
            inputs: Map::new(),
            results: Map::new(),
            certificates: Vec::new(),
            warnings: Vec::new(),
            version: VERSION.to_string(),
        }
    }

    pub fn input(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.inputs
            .insert(key.to_string(), Value::String(value.to_string()));
        self
    }

    pub fn result(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.results.insert(key.to_string(), value.into());
        self
    }

    pub fn certify(&mut self, claim: impl Into<String>, witness: impl ToString) -> &mut Self {
        self.certificates.push(Certificate {
            claim: claim.into(),
            witness: witness.to_string(),
        });
        self
    }

    pub fn warn(&mut self, msg: impl Into<String>) -> &mut Self {
        self.warnings.push(msg.into());
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "command: {}", self.command).unwrap();
        for (k, v) in &self.inputs {
            writeln!(out, "input {k}: {}", scalar(v)).unwrap();
        }
        for (k, v) in &self.results {
            render(&mut out, k, v, 0);
        }
        for c in &self.certificates {
            writeln!(out, "certificate: {} [{}]", c.claim, c.witness).unwrap();
        }
        for w in &self.warnings {
            writeln!(out, "warning: {w}").unwrap();
        }
        out
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "none".into(),
        Value::Array(items) if items.iter().all(is_scalar) => {
            let parts: Vec<String> = items.iter().map(scalar).collect();
            format!("[{}]", parts.join(", "))
        }
        other => other.to_string(),
    }
}

fn is_scalar(v: &Value) -> bool {
    !matches!(v, Value::Object(_) | Value::Array(_))
}

fn render(out: &mut String, key: &str, v: &Value, depth: usize) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(map) => {
            writeln!(out, "{pad}{key}:").unwrap();
            for (k, v) in map {
                render(out, k, v, depth + 1);
            }
        }
        Value::Array(items) if !items.iter().all(is_scalar) => {
            writeln!(out, "{pad}{key}:").unwrap();
            for (i, item) in items.iter().enumerate() {
                render(out, &format!("[{i}]"), item, depth + 1);
            }
        }
        _ => writeln!(out, "{pad}{key}: {}", scalar(v)).unwrap(),
    }
}

/// Machine-readable error object for JSON mode.
#[derive(Debug, Serialize)]
pub struct ErrorReport<'a> {
    pub command: &'a str,
    pub error: ErrorBody,
    pub version: &'a str,
}

#[derive(Debug, Serialize)]
pub struct ErrorBody {
    pub kind: String,
    pub message: String,
    pub exit_code: i32,
}
