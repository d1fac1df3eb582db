use std::fmt::Write as _;

use serde_json::{json, Map, Value};

use super::config::{OutputFormat, RunConfig};

pub const SCHEMA_VERSION: u32 = 1;

/// A result table with documented columns.
#[derive(Clone, Debug, Default)]
pub struct Table {
    pub columns: Vec<&'static str>,
    /// One human-readable line per convention, written as comments.
    pub notes: Vec<String>,
    pub rows: Vec<Vec<Value>>,
}

impl Table {
    pub fn new(columns: Vec<&'static str>) -> Self {
        Self { columns, notes: Vec::new(), rows: Vec::new() }
    }

    pub fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    pub fn push(&mut self, row: Vec<Value>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn render(&self, cfg: &RunConfig) -> String {
        match cfg.format {
            OutputFormat::Csv => self.render_csv(cfg),
            OutputFormat::Json => self.render_json(cfg),
        }
    }

    fn render_csv(&self, cfg: &RunConfig) -> String {
        let mut s = String::new();
        writeln!(s, "# schema-version: {SCHEMA_VERSION}").unwrap();
        writeln!(s, "# command: {}", cfg.command.name()).unwrap();
        writeln!(s, "# config: {}", cfg.to_json()).unwrap();
        for n in &self.notes {
            writeln!(s, "# {n}").unwrap();
        }
        writeln!(s, "{}", self.columns.join(",")).unwrap();
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(csv_cell).collect();
            writeln!(s, "{}", cells.join(",")).unwrap();
        }
        s
    }

    fn render_json(&self, cfg: &RunConfig) -> String {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|r| {
                let mut m = Map::new();
                for (c, v) in self.columns.iter().zip(r) {
                    m.insert((*c).to_string(), v.clone());
                }
                Value::Object(m)
            })
            .collect();
        let doc = json!({
            "schema_version": SCHEMA_VERSION,
            "command": cfg.command.name(),
            "config": serde_json::to_value(cfg).expect("config serializes"),
            "notes": self.notes,
            "columns": self.columns,
            "rows": rows,
        });
        let mut s = serde_json::to_string_pretty(&doc).expect("table serializes");
        s.push('\n');
        s
    }
}

fn csv_cell(v: &Value) -> String {
    match v {
        Value::String(s) if s.contains([',', '"', '\n']) => format!("\"{}\"", s.replace('"', "\"\"")),
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}

/// JSON number for a finite float, `null` otherwise.
pub fn num(x: f64) -> Value {
    serde_json::Number::from_f64(x).map(Value::Number).unwrap_or(Value::Null)
}
