//! The `POLYMAT 1` text format.
//!
//! ```text
//! POLYMAT 1
//! modulus 7
//! dims 2 1
//! orders 2
//! 0 0 : 1
//! 1 0 : 1 1
//! ```
//!
//! Entries come one per line in row-major order, coefficients from low to
//! high degree with trailing zeros trimmed. A zero entry is written `i j :`.

use std::fmt::Write as _;

use anyhow::{anyhow, bail, Context, Result};
use appbas::{Field, Poly, PolyMat};

/// A matrix, with the orders when the file describes an instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Document {
    pub matrix: PolyMat,
    pub orders: Option<Vec<usize>>,
}

impl Document {
    pub fn new(matrix: PolyMat) -> Document {
        Document { matrix, orders: None }
    }

    pub fn instance(matrix: PolyMat, orders: Vec<usize>) -> Document {
        Document { matrix, orders: Some(orders) }
    }
}

pub fn serialize(doc: &Document) -> String {
    let m = &doc.matrix;
    let mut out = String::new();
    out.push_str("POLYMAT 1\n");
    writeln!(out, "modulus {}", m.field().modulus()).unwrap();
    writeln!(out, "dims {} {}", m.rows(), m.cols()).unwrap();
    if let Some(d) = &doc.orders {
        out.push_str("orders");
        for x in d {
            write!(out, " {x}").unwrap();
        }
        out.push('\n');
    }
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            write!(out, "{i} {j} :").unwrap();
            for c in m.get(i, j).coeffs() {
                write!(out, " {c}").unwrap();
            }
            out.push('\n');
        }
    }
    out
}

pub fn parse(text: &str) -> Result<Document> {
    let mut lines = text.lines().enumerate().map(|(k, l)| (k + 1, l.trim()));
    let mut next = |what: &str| {
        lines
            .next()
            .ok_or_else(|| anyhow!("unexpected end of file, expected {what}"))
    };

    let (no, line) = next("the header")?;
    if line != "POLYMAT 1" {
        bail!("line {no}: expected `POLYMAT 1`, found `{line}`");
    }
    let (no, line) = next("the modulus")?;
    let p: u64 = keyword_values(no, line, "modulus", 1)?[0];
    let field = Field::new(p).map_err(|e| anyhow!("line {no}: {e}"))?;
    let (no, line) = next("the dimensions")?;
    let dims = keyword_values::<usize>(no, line, "dims", 2)?;
    let (m, n) = (dims[0], dims[1]);

    let mut entries = Vec::with_capacity(m * n);
    let mut orders = None;
    let mut pending = next("the first entry").ok();
    if let Some((no, line)) = pending {
        if line.starts_with("orders") {
            orders = Some(keyword_values::<usize>(no, line, "orders", n)?);
            pending = None;
        }
    }
    for t in 0..m * n {
        let (no, line) = match pending.take() {
            Some(x) => x,
            None => next("an entry")?,
        };
        let (i, j) = (t / n, t % n);
        entries.push(parse_entry(no, line, i, j, &field)?);
    }
    for (no, line) in lines {
        if !line.is_empty() {
            bail!("line {no}: unexpected content after the last entry");
        }
    }
    Ok(Document { matrix: PolyMat::from_entries(field, m, n, entries), orders })
}

fn keyword_values<T: std::str::FromStr>(no: usize, line: &str, key: &str, count: usize) -> Result<Vec<T>> {
    let mut words = line.split_whitespace();
    if words.next() != Some(key) {
        bail!("line {no}: expected `{key}`, found `{line}`");
    }
    let vals = words
        .map(|w| w.parse::<T>().map_err(|_| anyhow!("line {no}: `{w}` is not a valid {key} value")))
        .collect::<Result<Vec<T>>>()?;
    if vals.len() != count {
        bail!("line {no}: `{key}` needs {count} values, found {}", vals.len());
    }
    Ok(vals)
}

fn parse_entry(no: usize, line: &str, i: usize, j: usize, field: &Field) -> Result<Poly> {
    let (head, coeffs) = line
        .split_once(':')
        .with_context(|| format!("line {no}: expected `{i} {j} : ...`"))?;
    let idx: Vec<&str> = head.split_whitespace().collect();
    if idx != [i.to_string(), j.to_string()] {
        bail!("line {no}: expected entry `{i} {j}`, found `{}`", head.trim());
    }
    let mut c = Vec::new();
    for w in coeffs.split_whitespace() {
        let x: u64 = w
            .parse()
            .map_err(|_| anyhow!("line {no}: `{w}` is not a coefficient"))?;
        if x >= field.modulus() {
            bail!("line {no}: coefficient {x} is not reduced modulo {}", field.modulus());
        }
        c.push(x);
    }
    Ok(Poly::from_coeffs(c))
}
