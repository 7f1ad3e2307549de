use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Md,
    Json,
    Csv,
}

/// A header row plus string cells, rendered as markdown or CSV.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Table {
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(headers: &[&str]) -> Self {
        Table { headers: headers.iter().map(|h| h.to_string()).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.headers.len());
        self.rows.push(row);
    }

    pub fn to_markdown(&self) -> String {
        let mut out = String::new();
        out.push_str(&md_line(&self.headers));
        out.push_str(&md_line(&vec!["---".to_string(); self.headers.len()]));
        for row in &self.rows {
            out.push_str(&md_line(row));
        }
        out
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut wtr = csv::Writer::from_writer(Vec::new());
        let io = |e: csv::Error| Error::Consistency(format!("csv output: {e}"));
        wtr.write_record(&self.headers).map_err(io)?;
        for row in &self.rows {
            wtr.write_record(row).map_err(io)?;
        }
        let bytes = wtr.into_inner().map_err(|e| Error::Consistency(format!("csv output: {e}")))?;
        String::from_utf8(bytes).map_err(|e| Error::Consistency(format!("csv output: {e}")))
    }
}

fn md_line(cells: &[String]) -> String {
    let cells: Vec<String> = cells.iter().map(|c| c.replace('|', "\\|")).collect();
    format!("| {} |\n", cells.join(" | "))
}

pub fn to_json<T: Serialize>(value: &T) -> Result<String> {
    serde_json::to_string_pretty(value)
        .map(|mut s| {
            s.push('\n');
            s
        })
        .map_err(|e| Error::Consistency(format!("json output: {e}")))
}

/// Renders typed rows: JSON straight from `payload`, markdown and CSV from `table`.
pub fn render<T: Serialize>(format: Format, payload: &T, table: &Table) -> Result<String> {
    match format {
        Format::Json => to_json(payload),
        Format::Csv => table.to_csv(),
        Format::Md => Ok(table.to_markdown()),
    }
}
