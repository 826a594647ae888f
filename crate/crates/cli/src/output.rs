use std::io::{self, Write};

use clap::ValueEnum;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
    Markdown,
}

/// Header row plus data rows, all as display strings.
#[derive(Clone, Debug, Default)]
pub struct Table {
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(headers: &[&str]) -> Self {
        Table { headers: headers.iter().map(|h| h.to_string()).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<String>) {
        self.rows.push(row);
    }

    fn markdown(&self) -> String {
        let mut s = format!("| {} |\n", self.headers.join(" | "));
        s.push_str(&format!("|{}\n", "---|".repeat(self.headers.len())));
        for r in &self.rows {
            let cells: Vec<String> = r.iter().map(|c| c.replace('|', "\\|")).collect();
            s.push_str(&format!("| {} |\n", cells.join(" | ")));
        }
        s
    }
}

/// What a subcommand produced, renderable in every output format.
pub struct Report {
    pub text: String,
    pub json: Value,
    pub table: Table,
    /// Replaces the generic table in markdown mode.
    pub markdown: Option<String>,
    /// At least one requested check failed.
    pub failed: bool,
}

impl Report {
    pub fn new(text: String, json: Value, table: Table) -> Self {
        Report { text, json, table, markdown: None, failed: false }
    }

    pub fn emit(&self, format: Format) -> io::Result<()> {
        let stdout = io::stdout();
        let mut out = stdout.lock();
        match format {
            Format::Text => writeln!(out, "{}", self.text.trim_end()),
            Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&self.json).map_err(io::Error::other)?),
            Format::Markdown => write!(out, "{}", self.markdown.clone().unwrap_or_else(|| self.table.markdown())),
            Format::Csv => {
                let mut w = csv::Writer::from_writer(out);
                w.write_record(&self.table.headers).map_err(io::Error::other)?;
                for r in &self.table.rows {
                    w.write_record(r).map_err(io::Error::other)?;
                }
                w.flush()
            }
        }
    }
}
