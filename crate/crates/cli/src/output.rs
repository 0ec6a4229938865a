//! Report rendering: JSON envelope, CSV tables and plain-text summaries.

use std::fmt::Display;
use std::path::Path;

use clap::ValueEnum;
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// Header row plus data rows; cells are already formatted.
#[derive(Clone, Debug, Default)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new<S: Into<String>>(header: impl IntoIterator<Item = S>) -> Self {
        Table { header: header.into_iter().map(Into::into).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<String>) {
        self.rows.push(row);
    }

    fn render(&self) -> String {
        let mut out = String::new();
        for line in std::iter::once(&self.header).chain(&self.rows) {
            let cells: Vec<String> = line.iter().map(|c| csv_cell(c)).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }
}

fn csv_cell(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Everything a command produces. `holds` drives the exit code.
pub struct Outcome {
    pub command: &'static str,
    pub parameters: Value,
    pub holds: bool,
    pub report: Value,
    pub text: String,
    pub table: Table,
}

impl Outcome {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                // serde_json maps are ordered by key, so output is stable
                let doc = json!({
                    "header": {
                        "tool": "kjcolor",
                        "version": env!("CARGO_PKG_VERSION"),
                        "command": self.command,
                        "parameters": self.parameters,
                        "status": if self.holds { "holds" } else { "fails" },
                    },
                    "report": self.report,
                });
                let mut s = serde_json::to_string_pretty(&doc).expect("reports serialize");
                s.push('\n');
                s
            }
            Format::Csv => self.table.render(),
            Format::Text => {
                let mut s = self.text.clone();
                if !s.ends_with('\n') {
                    s.push('\n');
                }
                s
            }
        }
    }

    pub fn emit(&self, format: Format, out: Option<&Path>) -> Result<(), String> {
        let body = self.render(format);
        match out {
            Some(path) => std::fs::write(path, body).map_err(|e| format!("cannot write {}: {e}", path.display())),
            None => {
                use std::io::Write;
                let mut stdout = std::io::stdout().lock();
                stdout.write_all(body.as_bytes()).map_err(|e| format!("cannot write to stdout: {e}"))
            }
        }
    }
}

pub fn strings<T: Display>(xs: &[T]) -> Vec<String> {
    xs.iter().map(|x| x.to_string()).collect()
}

pub fn tuple<T: Display>(xs: &[T]) -> String {
    format!("({})", strings(xs).join(", "))
}

/// Right-aligned columns.
pub fn matrix<T: Display>(rows: &[Vec<T>]) -> String {
    let cells: Vec<Vec<String>> = rows.iter().map(|r| strings(r)).collect();
    let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
    let mut out = String::new();
    for row in cells {
        let padded: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
        out.push_str(padded.join(" ").trim_end());
        out.push('\n');
    }
    out
}
