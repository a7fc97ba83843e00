use std::fmt::Write;

use clap::ValueEnum;
use num_bigint::BigInt;
use serde_json::{json, Number, Value};
use wgrass_core::hilbert::LaurentPoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Aligned tables.
    Human,
    /// One JSON document per invocation.
    Machine,
}

/// Everything one command produces, rendered only once computation is done.
#[derive(Debug)]
pub struct Report {
    pub command: &'static str,
    pub inputs: Value,
    pub result: Value,
    pub human: String,
    pub warnings: Vec<String>,
}

impl Report {
    pub fn new(command: &'static str, inputs: Value) -> Self {
        Self {
            command,
            inputs,
            result: Value::Null,
            human: String::new(),
            warnings: Vec::new(),
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Human => {
                let mut s = self.human.clone();
                for w in &self.warnings {
                    let _ = writeln!(s, "warning: {w}");
                }
                s
            }
            Format::Machine => {
                let doc = json!({
                    "command": self.command,
                    "version": env!("CARGO_PKG_VERSION"),
                    "inputs": self.inputs,
                    "result": self.result,
                    "warnings": self.warnings,
                });
                let mut s = serde_json::to_string_pretty(&doc).expect("serialisable");
                s.push('\n');
                s
            }
        }
    }
}

pub fn big(x: &BigInt) -> Value {
    Value::Number(x.to_string().parse::<Number>().expect("decimal integer"))
}

pub fn bigs(xs: &[BigInt]) -> Value {
    Value::Array(xs.iter().map(big).collect())
}

/// `[[exponent, coefficient], …]` in increasing exponent order.
pub fn poly(p: &LaurentPoly) -> Value {
    Value::Array(p.terms().map(|(e, c)| json!([e, big(c)])).collect())
}

pub fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

/// Left-aligned columns separated by two spaces.
pub fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let cols = header.len();
    let mut width: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for r in rows {
        for (w, cell) in width.iter_mut().zip(r) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let mut s = String::new();
        for (i, c) in cells.iter().enumerate() {
            s.push_str(c);
            if i + 1 < cols {
                s.push_str(&" ".repeat(width[i] - c.chars().count() + 2));
            }
        }
        s.push('\n');
        s
    };
    let mut out = line(header.to_vec());
    for r in rows {
        out.push_str(&line(r.iter().map(String::as_str).collect()));
    }
    out
}

/// Linear form `Σ c_i a_i`, e.g. `-a0 + a1 + a2 + a3`.
pub fn linear_form(coeffs: &[i64]) -> String {
    let mut s = String::new();
    for (i, &c) in coeffs.iter().enumerate().filter(|(_, &c)| c != 0) {
        let mag = if c.abs() == 1 { String::new() } else { format!("{}*", c.abs()) };
        match (s.is_empty(), c < 0) {
            (true, false) => {}
            (true, true) => s.push('-'),
            (false, false) => s.push_str(" + "),
            (false, true) => s.push_str(" - "),
        }
        let _ = write!(s, "{mag}a{i}");
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}
