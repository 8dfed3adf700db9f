//! Rendering of command results as JSON, CSV or an aligned text table.

use clap::ValueEnum;
use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Cell {
    Text(String),
    Int(i64),
    Float(f64),
    Bool(bool),
    List(Vec<String>),
}

impl Cell {
    pub fn text(s: impl ToString) -> Self {
        Cell::Text(s.to_string())
    }

    fn to_json(&self) -> Value {
        match self {
            Cell::Text(s) => Value::from(s.as_str()),
            Cell::Int(i) => Value::from(*i),
            Cell::Float(x) => Value::from(*x),
            Cell::Bool(b) => Value::from(*b),
            Cell::List(items) => Value::from(items.clone()),
        }
    }

    fn to_plain(&self) -> String {
        match self {
            Cell::Text(s) => s.clone(),
            Cell::Int(i) => i.to_string(),
            Cell::Float(x) => fmt_g15(*x),
            Cell::Bool(b) => b.to_string(),
            Cell::List(items) => items.join(";"),
        }
    }
}

impl From<f64> for Cell {
    fn from(x: f64) -> Self {
        Cell::Float(x)
    }
}

impl From<u64> for Cell {
    fn from(i: u64) -> Self {
        Cell::Int(i as i64)
    }
}

impl From<usize> for Cell {
    fn from(i: usize) -> Self {
        Cell::Int(i as i64)
    }
}

impl From<u32> for Cell {
    fn from(i: u32) -> Self {
        Cell::Int(i64::from(i))
    }
}

impl From<bool> for Cell {
    fn from(b: bool) -> Self {
        Cell::Bool(b)
    }
}

/// Fifteen significant digits, trailing zeros dropped.
pub fn fmt_g15(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return if x == 0.0 { "0".into() } else { x.to_string() };
    }
    let exp = x.abs().log10().floor() as i32;
    if (-5..15).contains(&exp) {
        let decimals = (14 - exp).max(0) as usize;
        let s = format!("{x:.decimals$}");
        if s.contains('.') {
            s.trim_end_matches('0').trim_end_matches('.').to_string()
        } else {
            s
        }
    } else {
        let s = format!("{x:.14e}");
        let (mantissa, exponent) = s.split_once('e').expect("scientific form");
        let mantissa = if mantissa.contains('.') {
            mantissa.trim_end_matches('0').trim_end_matches('.')
        } else {
            mantissa
        };
        format!("{mantissa}e{exponent}")
    }
}

/// Fixed columns and rows. A single-row table renders as one record.
#[derive(Clone, Debug, Default)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: Vec<&'static str>) -> Self {
        Table {
            columns,
            rows: Vec::new(),
        }
    }

    pub fn record(fields: Vec<(&'static str, Cell)>) -> Self {
        let (columns, row) = fields.into_iter().unzip();
        Table {
            columns,
            rows: vec![row],
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    fn row_json(&self, row: &[Cell]) -> Value {
        let map: Map<String, Value> = self
            .columns
            .iter()
            .zip(row)
            .map(|(c, v)| (c.to_string(), v.to_json()))
            .collect();
        Value::Object(map)
    }

    pub fn to_json(&self) -> Value {
        if self.rows.len() == 1 {
            self.row_json(&self.rows[0])
        } else {
            Value::Array(self.rows.iter().map(|r| self.row_json(r)).collect())
        }
    }

    pub fn to_csv(&self) -> String {
        let mut writer = csv::Writer::from_writer(Vec::new());
        writer
            .write_record(&self.columns)
            .expect("writing to memory");
        for row in &self.rows {
            writer
                .write_record(row.iter().map(Cell::to_plain))
                .expect("writing to memory");
        }
        String::from_utf8(writer.into_inner().expect("flushing to memory"))
            .expect("csv output is utf-8")
    }

    pub fn to_pretty(&self) -> String {
        if self.rows.len() == 1 {
            let width = self.columns.iter().map(|c| c.len()).max().unwrap_or(0);
            return self
                .columns
                .iter()
                .zip(&self.rows[0])
                .map(|(c, v)| {
                    let v = match v {
                        Cell::List(items) => items.join(", "),
                        other => other.to_plain(),
                    };
                    format!("{c:<width$}  {v}\n")
                })
                .collect();
        }
        let cells: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(Cell::to_plain).collect())
            .collect();
        let widths: Vec<usize> = self
            .columns
            .iter()
            .enumerate()
            .map(|(i, c)| {
                cells
                    .iter()
                    .map(|r| r[i].chars().count())
                    .chain([c.len()])
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let line = |items: Vec<&str>| {
            let parts: Vec<String> = items
                .iter()
                .zip(&widths)
                .map(|(s, w)| format!("{s:<w$}"))
                .collect();
            format!("{}\n", parts.join("  ").trim_end())
        };
        let mut out = line(self.columns.clone());
        for r in &cells {
            out.push_str(&line(r.iter().map(String::as_str).collect()));
        }
        out
    }
}

/// What a subcommand hands back for printing.
pub struct Rendered {
    pub table: Table,
    /// Replaces the table's JSON form when set.
    pub json: Option<Value>,
    /// Key/value lines printed above the table in pretty mode.
    pub header: Vec<(&'static str, String)>,
}

impl From<Table> for Rendered {
    fn from(table: Table) -> Self {
        Rendered {
            table,
            json: None,
            header: Vec::new(),
        }
    }
}

impl Rendered {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let value = self.json.clone().unwrap_or_else(|| self.table.to_json());
                format!("{value}\n")
            }
            Format::Csv => self.table.to_csv(),
            Format::Pretty => {
                let mut out = String::new();
                let width = self.header.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
                for (k, v) in &self.header {
                    out.push_str(&format!("{k:<width$}  {v}\n"));
                }
                if !self.header.is_empty() {
                    out.push('\n');
                }
                out.push_str(&self.table.to_pretty());
                out
            }
        }
    }
}
