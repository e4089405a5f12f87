//! Tabular reports and their CSV, JSON Lines and markdown renderings.
//!
//! Every format is produced from the same cell texts, so the payloads agree
//! digit for digit.

use rgc_core::ScaledReal;
use serde_json::{json, Map, Value};

use crate::args::Format;

/// Significant digits of relative errors and diagnostics.
const ERROR_DIGITS: usize = 3;

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Int(usize),
    Text(String),
    Value(ScaledReal),
    /// Relative error or difference, shown with three digits.
    Ratio(f64),
    Flag(bool),
    Failed(String),
    Empty,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Report {
    pub fn new(columns: Vec<&'static str>) -> Self {
        Report { columns, rows: Vec::new() }
    }

    pub fn has_failures(&self) -> bool {
        self.rows.iter().flatten().any(|c| matches!(c, Cell::Failed(_)))
    }

    pub fn render(&self, format: Format, digits: usize) -> String {
        match format {
            Format::Csv => self.csv(digits),
            Format::Json => self.json_lines(digits),
            Format::Markdown => self.markdown(digits),
        }
    }

    fn csv(&self, digits: usize) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.columns).expect("in-memory write");
        for row in &self.rows {
            w.write_record(row.iter().map(|c| text(c, digits))).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
    }

    fn json_lines(&self, digits: usize) -> String {
        let mut out = String::new();
        for row in &self.rows {
            let obj: Map<String, Value> =
                self.columns.iter().zip(row).map(|(k, c)| (k.to_string(), json_cell(c, digits))).collect();
            out.push_str(&Value::Object(obj).to_string());
            out.push('\n');
        }
        out
    }

    fn markdown(&self, digits: usize) -> String {
        let mut out = format!("| {} |\n", self.columns.join(" | "));
        out.push_str(&format!("|{}\n", "---|".repeat(self.columns.len())));
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|c| text(c, digits).replace('|', "\\|")).collect();
            out.push_str(&format!("| {} |\n", cells.join(" | ")));
        }
        out
    }
}

pub fn render_ratio(x: f64) -> String {
    match ScaledReal::from_native(x) {
        Ok(s) => s.render(ERROR_DIGITS),
        Err(_) => format!("{x}"),
    }
}

fn text(cell: &Cell, digits: usize) -> String {
    match cell {
        Cell::Int(n) => n.to_string(),
        Cell::Text(s) => s.clone(),
        Cell::Value(v) => v.render(digits),
        Cell::Ratio(x) => render_ratio(*x),
        Cell::Flag(b) => b.to_string(),
        Cell::Failed(msg) => format!("ERROR({msg})"),
        Cell::Empty => String::new(),
    }
}

/// `{sign, mantissa, exponent}` taken from the rendered text, the mantissa
/// kept as a decimal string so no digit is lost to float printing.
fn triple(rendered: &str) -> Value {
    let (body, exp) = rendered.split_once('E').expect("rendered value has an exponent");
    let (sign, mantissa) = body.split_at(1);
    let mantissa = mantissa.to_string();
    let sign = if mantissa.bytes().all(|b| b == b'0' || b == b'.') {
        0
    } else if sign == "-" {
        -1
    } else {
        1
    };
    json!({ "sign": sign, "mantissa": mantissa, "exponent": exp.parse::<i64>().expect("integer exponent") })
}

fn json_cell(cell: &Cell, digits: usize) -> Value {
    match cell {
        Cell::Int(n) => json!(n),
        Cell::Text(s) => json!(s),
        Cell::Value(v) => triple(&v.render(digits)),
        Cell::Ratio(x) => {
            let r = render_ratio(*x);
            if r.contains('E') {
                triple(&r)
            } else {
                json!(r)
            }
        }
        Cell::Flag(b) => json!(b),
        Cell::Failed(msg) => json!({ "error": msg }),
        Cell::Empty => Value::Null,
    }
}
