//! Report assembly and emission in json, csv and text.

use std::io::{self, Write};

use clap::ValueEnum;
use serde::Serialize;
use serde_json::{json, Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// Everything a command produced, before formatting.
#[derive(Default)]
pub struct Outcome {
    pub results: Vec<Value>,
    pub text: Vec<String>,
    pub findings: Vec<String>,
    /// a theorem-flagged check failed
    pub failed: bool,
}

impl Outcome {
    pub fn row(&mut self, value: Value, line: String) {
        self.results.push(value);
        self.text.push(line);
    }

    pub fn finding(&mut self, text: String) {
        self.findings.push(text);
    }
}

pub fn emit(out: &mut impl Write, format: Format, command: &str, params: Value, outcome: &Outcome) -> io::Result<()> {
    match format {
        Format::Json => {
            let doc = json!({
                "tool_version": env!("CARGO_PKG_VERSION"),
                "command": command,
                "params": params,
                "results": outcome.results,
            });
            serde_json::to_writer_pretty(&mut *out, &doc)?;
            writeln!(out)
        }
        Format::Csv => write_csv(out, &outcome.results),
        Format::Text => {
            for line in &outcome.text {
                writeln!(out, "{line}")?;
            }
            Ok(())
        }
    }
}

/// Findings go to stderr so structured stdout stays parseable.
pub fn emit_findings(err: &mut impl Write, findings: &[String]) -> io::Result<()> {
    for f in findings {
        writeln!(err, "==================== FINDING ====================")?;
        writeln!(err, "{f}")?;
        writeln!(err, "=================================================")?;
    }
    Ok(())
}

/// One CSV row per result; columns in first-appearance order, nested values
/// written as compact JSON.
fn write_csv(out: &mut impl Write, rows: &[Value]) -> io::Result<()> {
    let mut columns: Vec<String> = Vec::new();
    for row in rows {
        if let Value::Object(map) = row {
            for k in map.keys() {
                if !columns.contains(k) {
                    columns.push(k.clone());
                }
            }
        }
    }
    let mut w = csv::Writer::from_writer(out);
    w.write_record(&columns)?;
    let empty = Map::new();
    for row in rows {
        let map = row.as_object().unwrap_or(&empty);
        let record: Vec<String> = columns
            .iter()
            .map(|c| match map.get(c) {
                None | Some(Value::Null) => String::new(),
                Some(Value::String(s)) => s.clone(),
                Some(v) => v.to_string(),
            })
            .collect();
        w.write_record(&record)?;
    }
    w.flush()
}
