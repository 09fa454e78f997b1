use serde_json::{json, Map, Value};

use crate::args::Format;

pub const SCHEMA_VERSION: &str = "1";

/// Scope note for CSC results.
pub const CAVEAT: &str = "Rays are counted through the admissible extremal representative of each ray only. \
A ray listed here may carry further CSC Sasaki metrics outside that family, and a ray not listed may still carry one.";

/// A finished command in every output shape.
#[derive(Debug, Clone)]
pub struct Report {
    pub request: Value,
    pub payload: Value,
    pub warnings: Vec<String>,
    /// Lines printed above the table.
    pub summary: Vec<(String, String)>,
    pub table: Grid,
    pub caveat: bool,
}

/// Header plus rows, shared by table and CSV output.
#[derive(Debug, Clone, Default)]
pub struct Grid {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Grid {
    pub fn new(header: &[&str]) -> Self {
        Self {
            header: header.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    fn aligned(&self) -> String {
        let mut widths: Vec<usize> = self.header.iter().map(|h| h.len()).collect();
        for row in &self.rows {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.chars().count());
            }
        }
        let mut out = String::new();
        for row in std::iter::once(&self.header).chain(&self.rows) {
            let line: Vec<String> = row
                .iter()
                .zip(&widths)
                .map(|(cell, w)| format!("{cell:<w$}"))
                .collect();
            out.push_str(line.join("  ").trim_end());
            out.push('\n');
        }
        out
    }

    fn csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.header).expect("writing to memory");
        for row in &self.rows {
            w.write_record(row).expect("writing to memory");
        }
        String::from_utf8(w.into_inner().expect("writing to memory")).expect("cells are utf-8")
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: u8,
}

/// The top-level JSON document. Keys are sorted because `serde_json::Map` is ordered.
pub fn document(report: &Report) -> Value {
    let mut payload = report.payload.clone();
    if report.caveat {
        if let Value::Object(map) = &mut payload {
            map.insert("caveat".into(), Value::String(CAVEAT.into()));
        }
    }
    json!({
        "schema_version": SCHEMA_VERSION,
        "request": report.request,
        "payload": payload,
        "warnings": report.warnings,
    })
}

pub fn render(report: &Report, format: Format) -> Output {
    let mut out = Output::default();
    match format {
        Format::Json => {
            let mut text = serde_json::to_string_pretty(&document(report)).expect("values are serializable");
            text.push('\n');
            out.stdout = text;
            return out;
        }
        Format::Csv => {
            out.stdout = report.table.csv();
            if report.caveat {
                out.stderr.push_str(&format!("note: {CAVEAT}\n"));
            }
        }
        Format::Table => {
            let width = report.summary.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
            for (k, v) in &report.summary {
                out.stdout.push_str(&format!("{k:<width$}  {v}\n"));
            }
            if !report.table.rows.is_empty() {
                if !report.summary.is_empty() {
                    out.stdout.push('\n');
                }
                out.stdout.push_str(&report.table.aligned());
            }
            if report.caveat {
                out.stdout.push_str(&format!("\nnote: {CAVEAT}\n"));
            }
        }
    }
    for w in &report.warnings {
        out.stderr.push_str(&format!("warning: {w}\n"));
    }
    out
}

/// Request echo shared by every command.
pub fn request(command: &str, args: Map<String, Value>, format: Format, precision: u32, caveat: bool) -> Value {
    json!({
        "command": command,
        "args": args,
        "format": format.to_string(),
        "precision": precision,
        "quote_caveat": caveat,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_alignment_and_csv_quoting() {
        let mut g = Grid::new(&["a", "long header"]);
        g.push(vec!["1,5".into(), "x".into()]);
        assert_eq!(g.aligned(), "a    long header\n1,5  x\n");
        assert_eq!(g.csv(), "a,long header\n\"1,5\",x\n");
    }
}
