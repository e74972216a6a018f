//! Text serializations of a `(SignedArray, Params)` pair.
//!
//! * JSON: `{"m":..,"n":..,"r":..,"s":..,"cells":[[row,col,value],...]}`,
//!   compact, cells in row-major order.
//! * CSV: a `m,n,r,s` header record and its values, then a `row,col,value`
//!   header followed by one record per cell in row-major order.
//! * Grid: one line per row, entries right-aligned to a common width,
//!   empty cells shown as `.`.
//!
//! JSON and CSV round-trip exactly; the grid form carries no parameters.

use serde::{Deserialize, Serialize};

use crate::array::{Params, SignedArray};
use crate::error::{Error, Result};

#[derive(Serialize, Deserialize)]
struct JsonDoc {
    m: usize,
    n: usize,
    r: usize,
    s: usize,
    cells: Vec<(usize, usize, i64)>,
}

fn parse_err(location: impl Into<String>, message: impl ToString) -> Error {
    Error::Parse {
        location: location.into(),
        message: message.to_string(),
    }
}

fn check_dims(a: &SignedArray, p: &Params) {
    assert!(
        a.rows() == p.m && a.cols() == p.n,
        "array is {}x{} but parameters are {}",
        a.rows(),
        a.cols(),
        p
    );
}

fn build(p: Params, cells: Vec<(usize, usize, i64)>, location: &str) -> Result<SignedArray> {
    SignedArray::from_cells(p.m, p.n, cells).map_err(|e| parse_err(location, e))
}

pub fn to_json(a: &SignedArray, p: &Params) -> String {
    check_dims(a, p);
    let doc = JsonDoc {
        m: p.m,
        n: p.n,
        r: p.r,
        s: p.s,
        cells: a.iter().collect(),
    };
    serde_json::to_string(&doc).expect("plain integers always serialize")
}

pub fn from_json(text: &str) -> Result<(SignedArray, Params)> {
    let doc: JsonDoc = serde_json::from_str(text)
        .map_err(|e| parse_err(format!("line {}, column {}", e.line(), e.column()), &e))?;
    let p = Params::new(doc.m, doc.n, doc.r, doc.s).map_err(|e| parse_err("parameters", e))?;
    let a = build(p, doc.cells, "cells")?;
    Ok((a, p))
}

pub fn to_csv(a: &SignedArray, p: &Params) -> String {
    check_dims(a, p);
    let mut w = csv::WriterBuilder::new()
        .flexible(true)
        .from_writer(Vec::new());
    let io = "writing to memory cannot fail";
    w.write_record(["m", "n", "r", "s"]).expect(io);
    w.serialize((p.m, p.n, p.r, p.s)).expect(io);
    w.write_record(["row", "col", "value"]).expect(io);
    for cell in a.iter() {
        w.serialize(cell).expect(io);
    }
    String::from_utf8(w.into_inner().expect(io)).expect("csv output is ASCII")
}

pub fn from_csv(text: &str) -> Result<(SignedArray, Params)> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let mut records = rdr.records();
    let mut next = |what: &str| -> Result<(String, csv::StringRecord)> {
        match records.next() {
            None => Err(parse_err("end of input", format!("expected {what}"))),
            Some(Err(e)) => Err(parse_err(location_of(e.position()), &e)),
            Some(Ok(rec)) => Ok((location_of(rec.position()), rec)),
        }
    };

    let (loc, header) = next("`m,n,r,s` header")?;
    if header.iter().collect::<Vec<_>>() != ["m", "n", "r", "s"] {
        return Err(parse_err(loc, "expected header `m,n,r,s`"));
    }
    let (loc, rec) = next("parameter values")?;
    let (m, n, r, s): (usize, usize, usize, usize) =
        rec.deserialize(None).map_err(|e| parse_err(&loc, e))?;
    let p = Params::new(m, n, r, s).map_err(|e| parse_err(loc, e))?;
    let (loc, header) = next("`row,col,value` header")?;
    if header.iter().collect::<Vec<_>>() != ["row", "col", "value"] {
        return Err(parse_err(loc, "expected header `row,col,value`"));
    }

    let mut a = SignedArray::empty(p.m, p.n);
    for rec in records {
        let rec = rec.map_err(|e| parse_err(location_of(e.position()), &e))?;
        let loc = location_of(rec.position());
        let (row, col, value): (usize, usize, i64) =
            rec.deserialize(None).map_err(|e| parse_err(&loc, e))?;
        a.insert(row, col, value).map_err(|e| parse_err(loc, e))?;
    }
    Ok((a, p))
}

fn location_of(pos: Option<&csv::Position>) -> String {
    match pos {
        Some(p) => format!("line {}", p.line()),
        None => "unknown line".to_string(),
    }
}

pub fn to_grid(a: &SignedArray) -> String {
    let width = a
        .iter()
        .map(|(_, _, v)| v.to_string().len())
        .max()
        .unwrap_or(1);
    let mut out = String::new();
    for i in 1..=a.rows() {
        let line: Vec<String> = (1..=a.cols())
            .map(|j| match a.get(i, j) {
                Some(v) => format!("{v:>width$}"),
                None => format!("{:>width$}", "."),
            })
            .collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

/// Parses whitespace-separated rows; `.` marks an empty cell. Blank lines
/// are ignored and every row must have the same number of tokens.
pub fn parse_grid(text: &str) -> Result<SignedArray> {
    let mut rows: Vec<Vec<Option<i64>>> = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.is_empty() {
            continue;
        }
        let row = tokens
            .iter()
            .map(|t| match *t {
                "." => Ok(None),
                t => t
                    .parse::<i64>()
                    .map(Some)
                    .map_err(|e| parse_err(format!("line {}", lineno + 1), format!("`{t}`: {e}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        if let Some(first) = rows.first() {
            if first.len() != row.len() {
                return Err(parse_err(
                    format!("line {}", lineno + 1),
                    format!("expected {} columns, found {}", first.len(), row.len()),
                ));
            }
        }
        rows.push(row);
    }
    let cols = rows.first().map_or(0, Vec::len);
    let cells = rows.iter().enumerate().flat_map(|(i, row)| {
        row.iter()
            .enumerate()
            .filter_map(move |(j, v)| v.map(|v| (i + 1, j + 1, v)))
    });
    SignedArray::from_cells(rows.len(), cols, cells)
}
