//! Tabular reports with a CSV and a JSON rendering.
//!
//! Every cell is a string: integers in decimal, reals in scientific notation
//! next to a `precision_bits` column. The JSON form is
//! `{schema, command, config, columns, rows, summary}`; the CSV form is one
//! header row followed by data rows.

use std::io::{self, Write};

use rug::Integer;
use serde::Serializer;
use serde_json::{json, Map, Value};

use crate::asymptotics::{render, AsymptoticCheck, DominanceReport};
use crate::identities::CatalogResult;

/// Bumped whenever columns or summary keys change meaning.
pub const SCHEMA: &str = "bicrank-report/1";

pub fn ser_integer<S: Serializer>(v: &Integer, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(columns: &[&str]) -> Self {
        Table {
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        assert_eq!(
            row.len(),
            self.columns.len(),
            "row width must match the header"
        );
        self.rows.push(row);
    }

    pub fn write_csv<W: Write>(&self, mut w: W) -> io::Result<()> {
        writeln!(w, "{}", self.columns.join(","))?;
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|c| csv_escape(c)).collect();
            writeln!(w, "{}", cells.join(","))?;
        }
        Ok(())
    }

    fn rows_json(&self) -> Value {
        Value::Array(
            self.rows
                .iter()
                .map(|row| {
                    let obj: Map<String, Value> = self
                        .columns
                        .iter()
                        .cloned()
                        .zip(row.iter().map(|c| Value::String(c.clone())))
                        .collect();
                    Value::Object(obj)
                })
                .collect(),
        )
    }
}

fn csv_escape(cell: &str) -> String {
    if cell.contains([',', '"', '\n']) {
        format!("\"{}\"", cell.replace('"', "\"\""))
    } else {
        cell.to_string()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub command: String,
    pub config: Value,
    pub table: Table,
    pub summary: Value,
}

impl Report {
    pub fn to_json(&self) -> Value {
        json!({
            "schema": SCHEMA,
            "command": self.command,
            "config": self.config,
            "columns": self.table.columns,
            "rows": self.table.rows_json(),
            "summary": self.summary,
        })
    }

    pub fn write_json<W: Write>(&self, mut w: W) -> io::Result<()> {
        serde_json::to_writer_pretty(&mut w, &self.to_json())?;
        writeln!(w)
    }

    pub fn write_csv<W: Write>(&self, w: W) -> io::Result<()> {
        self.table.write_csv(w)
    }
}

fn verdict_str<T: serde::Serialize>(v: &T) -> String {
    match serde_json::to_value(v) {
        Ok(Value::String(s)) => s,
        Ok(other) => other.to_string(),
        Err(_) => String::from("?"),
    }
}

pub fn asymptotic_table(checks: &[AsymptoticCheck]) -> Table {
    let mut t = Table::new(&[
        "modulus",
        "n",
        "exact",
        "main",
        "bound",
        "margin",
        "verdict",
        "precision_bits",
    ]);
    for c in checks {
        t.push(vec![
            c.modulus.to_string(),
            c.n.to_string(),
            c.exact.to_string(),
            render(&c.main),
            render(&c.bound),
            render(&c.margin),
            verdict_str(&c.verdict),
            c.precision.to_string(),
        ]);
    }
    t
}

pub fn dominance_table(report: &DominanceReport) -> Table {
    let mut t = Table::new(&[
        "modulus",
        "n",
        "main",
        "bound",
        "margin",
        "dominant",
        "precision_bits",
    ]);
    for r in &report.rows {
        t.push(vec![
            report.modulus.to_string(),
            r.n.to_string(),
            render(&r.main),
            render(&r.bound),
            render(&r.margin),
            verdict_str(&r.dominant),
            report.precision.to_string(),
        ]);
    }
    t
}

/// One row per catalog entry: `(id, kind, order, verdict, first_failure)`.
pub fn catalog_table(results: &[CatalogResult]) -> Table {
    let mut t = Table::new(&["id", "kind", "order", "verdict", "first_failure", "detail"]);
    for r in results {
        let verdict = match r.passed() {
            Some(true) => "pass",
            Some(false) => "fail",
            None => "report",
        };
        let (kind, order, failure, detail) = match r {
            CatalogResult::Identity(v) => {
                let m = v.first_mismatch();
                (
                    "equality".to_string(),
                    v.order,
                    m.map(|m| m.exponent.to_string()).unwrap_or_default(),
                    m.map(|m| format!("lhs={} rhs={}", m.lhs, m.rhs))
                        .unwrap_or_default(),
                )
            }
            CatalogResult::Sign(p) => {
                let failure = p.tallies.iter().find_map(|t| t.first_violation);
                let head = &p.tallies[0];
                (
                    verdict_str(&p.kind),
                    p.order,
                    failure.map(|e| e.to_string()).unwrap_or_default(),
                    format!(
                        "positive={} zero={} negative={}",
                        head.positive, head.zero, head.negative
                    ),
                )
            }
        };
        t.push(vec![
            r.id().to_string(),
            kind,
            order.to_string(),
            verdict.to_string(),
            failure,
            detail,
        ]);
    }
    t
}
