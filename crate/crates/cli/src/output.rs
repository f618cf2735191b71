//! The output envelope and its three encoders.

use std::io::Write;

use clap::ValueEnum;
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Md,
}

/// Flat rendering of a result for the tabular encoders.
#[derive(Debug, Clone, Default)]
pub struct Table {
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new<S: Into<String>>(headers: impl IntoIterator<Item = S>) -> Self {
        Self { headers: headers.into_iter().map(Into::into).collect(), rows: Vec::new() }
    }

    pub fn push<S: ToString>(&mut self, row: impl IntoIterator<Item = S>) {
        self.rows.push(row.into_iter().map(|c| c.to_string()).collect());
    }

    /// Two-column `field,value` table of the scalar members of an object.
    pub fn key_value(obj: &Value) -> Self {
        let mut t = Table::new(["field", "value"]);
        if let Value::Object(map) = obj {
            for (k, v) in map {
                t.push([k.clone(), cell(v)]);
            }
        }
        t
    }
}

pub fn cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// What a command hands back before encoding.
pub struct Report {
    pub result: Value,
    pub table: Table,
}

#[derive(Serialize)]
struct Provenance {
    version: &'static str,
    wall_clock_ms: u64,
    threads: usize,
}

#[derive(Serialize)]
struct Envelope<'a> {
    command: &'a str,
    params: &'a Value,
    result: &'a Value,
    provenance: Provenance,
    status: Value,
}

pub struct Context {
    pub command: &'static str,
    pub wall_clock_ms: u64,
    pub threads: usize,
}

fn envelope(ctx: &Context, params: &Value, result: &Value, status: Value) -> String {
    let env = Envelope {
        command: ctx.command,
        params,
        result,
        provenance: Provenance {
            version: env!("CARGO_PKG_VERSION"),
            wall_clock_ms: ctx.wall_clock_ms,
            threads: ctx.threads,
        },
        status,
    };
    serde_json::to_string_pretty(&env).expect("envelope serializes")
}

pub fn write_report(
    out: &mut dyn Write,
    format: Format,
    ctx: &Context,
    params: &Value,
    report: &Report,
) -> std::io::Result<()> {
    match format {
        Format::Json => writeln!(out, "{}", envelope(ctx, params, &report.result, json!("ok"))),
        Format::Csv => write_csv(out, &report.table),
        Format::Md => write_md(out, &report.table),
    }
}

pub fn write_error(
    out: &mut dyn Write,
    ctx: &Context,
    params: &Value,
    code: i32,
    message: &str,
) -> std::io::Result<()> {
    let status = json!({ "error": { "code": code, "message": message } });
    writeln!(out, "{}", envelope(ctx, params, &Value::Null, status))
}

fn write_csv(out: &mut dyn Write, t: &Table) -> std::io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(&t.headers)?;
    for row in &t.rows {
        w.write_record(row)?;
    }
    w.flush()
}

fn write_md(out: &mut dyn Write, t: &Table) -> std::io::Result<()> {
    let esc = |s: &str| s.replace('|', "\\|");
    writeln!(out, "| {} |", t.headers.iter().map(|h| esc(h)).collect::<Vec<_>>().join(" | "))?;
    writeln!(out, "|{}", "---|".repeat(t.headers.len()))?;
    for row in &t.rows {
        writeln!(out, "| {} |", row.iter().map(|c| esc(c)).collect::<Vec<_>>().join(" | "))?;
    }
    Ok(())
}
