//! JSON and CSV rendering.

use serde_json::{json, Value};

use crate::geomcore::rational::format_decimal;
use crate::geomcore::{PiecewisePolynomial, Polynomial, Rational, RootBound};

const DIGITS: usize = 12;

/// A command's result in both output formats.
#[derive(Debug, Clone, PartialEq)]
pub struct Output {
    pub json: Value,
    pub table: Table,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: &[&str]) -> Self {
        Table { header: header.iter().map(|s| s.to_string()).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<String>) {
        self.rows.push(row);
    }

    pub fn to_csv(&self) -> String {
        let mut out = self.header.join(",");
        out.push('\n');
        for row in &self.rows {
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }
}

/// `[num, den]`, falling back to a string for values beyond `i128`.
pub fn pair(r: &Rational) -> Value {
    match (i128::try_from(r.numer()), i128::try_from(r.denom())) {
        (Ok(n), Ok(d)) => json!([n, d]),
        _ => json!(r.to_string()),
    }
}

pub fn pairs(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(pair).collect())
}

pub fn decimal(r: &Rational) -> String {
    format_decimal(r, DIGITS)
}

/// The exact column of a CSV row: `num/den`.
pub fn exact(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn root(r: &RootBound) -> Value {
    match r {
        RootBound::Exact(x) => json!({ "exact": pair(x) }),
        RootBound::Bracketed { lo, hi } => json!({ "lo": pair(lo), "hi": pair(hi) }),
    }
}

pub fn polynomial(p: &Polynomial) -> Value {
    pairs(p.coeffs())
}

pub fn piecewise(f: &PiecewisePolynomial) -> Value {
    let pieces: Vec<Value> = f
        .intervals()
        .map(|(a, b, p)| json!({ "from": pair(a), "to": pair(b), "coeffs": polynomial(p), "text": p.to_string() }))
        .collect();
    json!({ "pieces": pieces, "before": pair(f.value_before()), "after": pair(f.value_after()) })
}
