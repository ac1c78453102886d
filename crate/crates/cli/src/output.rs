//! Tabular results and their text, CSV and JSON renderings.
//!
//! Cells are formatted once, so CSV and JSON carry exactly the digits shown
//! in text mode and re-parse to the same values.

use std::io::Write;

use num_bigint::BigUint;
use serde_json::{Map, Number, Value};

use crate::args::Format;
use crate::error::CliError;

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Int(BigUint),
    /// Value with the number of decimals to display.
    Float(f64, usize),
    Text(String),
    Bool(bool),
}

impl Cell {
    pub fn int(v: impl Into<BigUint>) -> Self {
        Cell::Int(v.into())
    }

    fn display(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Float(v, digits) if v.is_finite() => format!("{v:.digits$}"),
            Cell::Float(v, _) => v.to_string(),
            Cell::Text(s) => s.clone(),
            Cell::Bool(b) => b.to_string(),
        }
    }

    fn json(&self) -> Value {
        match self {
            // u64 counts become numbers; larger ones stay exact as strings.
            Cell::Int(v) => u64::try_from(v).map_or_else(|_| Value::String(v.to_string()), Value::from),
            Cell::Float(..) => self
                .display()
                .parse::<f64>()
                .ok()
                .and_then(Number::from_f64)
                .map_or(Value::Null, Value::Number),
            Cell::Text(s) => Value::String(s.clone()),
            Cell::Bool(b) => Value::Bool(*b),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: &[&str]) -> Self {
        Table {
            columns: columns.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn render(&self, format: Format, out: &mut dyn Write) -> Result<(), CliError> {
        match format {
            Format::Text => self.text(out),
            Format::Csv => self.csv(out),
            Format::Json => {
                serde_json::to_writer_pretty(&mut *out, &self.to_json())?;
                writeln!(out)?;
                Ok(())
            }
        }
    }

    fn text(&self, out: &mut dyn Write) -> Result<(), CliError> {
        let cells: Vec<Vec<String>> = self.rows.iter().map(|r| r.iter().map(Cell::display).collect()).collect();
        let widths: Vec<usize> = (0..self.columns.len())
            .map(|i| cells.iter().map(|r| r[i].len()).chain([self.columns[i].len()]).max().unwrap_or(0))
            .collect();
        let line = |items: &[String]| {
            items
                .iter()
                .zip(&widths)
                .map(|(s, w)| format!("{s:>w$}"))
                .collect::<Vec<_>>()
                .join("  ")
        };
        writeln!(out, "{}", line(&self.columns))?;
        for r in &cells {
            writeln!(out, "{}", line(r))?;
        }
        Ok(())
    }

    fn csv(&self, out: &mut dyn Write) -> Result<(), CliError> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(&self.columns)?;
        for r in &self.rows {
            w.write_record(r.iter().map(Cell::display))?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.rows
                .iter()
                .map(|r| {
                    let obj: Map<String, Value> = self.columns.iter().cloned().zip(r.iter().map(Cell::json)).collect();
                    Value::Object(obj)
                })
                .collect(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Table {
        let mut t = Table::new(&["n", "L_mu_norm", "note"]);
        t.push(vec![Cell::int(1000u32), Cell::Float(0.209_684_98, 6), Cell::Text("a,b".into())]);
        t.push(vec![Cell::Int(BigUint::from(u64::MAX) * 3u32), Cell::Float(f64::NAN, 6), Cell::Bool(true)]);
        t
    }

    #[test]
    fn csv_round_trip() {
        let t = sample();
        let mut buf = Vec::new();
        t.render(Format::Csv, &mut buf).unwrap();
        let mut r = csv::Reader::from_reader(buf.as_slice());
        assert_eq!(r.headers().unwrap().iter().collect::<Vec<_>>(), ["n", "L_mu_norm", "note"]);
        let rows: Vec<Vec<String>> = r.records().map(|rec| rec.unwrap().iter().map(String::from).collect()).collect();
        assert_eq!(rows[0], ["1000", "0.209685", "a,b"]);
        assert_eq!(rows[1][0], (BigUint::from(u64::MAX) * 3u32).to_string());
    }

    #[test]
    fn json_keys_and_values() {
        let v = sample().to_json();
        assert_eq!(v[0]["L_mu_norm"], Value::from(0.209685));
        assert_eq!(v[0]["n"], Value::from(1000u64));
        assert!(v[1]["n"].is_string());
        assert!(v[1]["L_mu_norm"].is_null());
    }

    #[test]
    fn text_is_aligned() {
        let mut buf = Vec::new();
        sample().render(Format::Text, &mut buf).unwrap();
        let s = String::from_utf8(buf).unwrap();
        let lens: Vec<usize> = s.lines().map(|l| l.chars().count()).collect();
        assert!(lens.windows(2).all(|w| w[0] == w[1]), "{s}");
    }
}
