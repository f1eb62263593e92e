//! Text, JSON and CSV encodings of a square.
//!
//! * grid: one row per line, values right-aligned to the width of `n²` and
//!   separated by single spaces, every line ending in `\n`;
//! * json: `{"order":n,"rows":[[…],…]}`;
//! * csv: comma-separated integers, no header, `\n` line endings.

use std::fmt;
use std::str::FromStr;

use num_traits::NumCast;
use serde::{Deserialize, Serialize};

use crate::cell::Cell;
use crate::error::{Error, Result};
use crate::order::MAX_ORDER;
use crate::square::Square;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Format {
    #[default]
    Grid,
    Json,
    Csv,
}

impl Format {
    pub const ALL: [Format; 3] = [Format::Grid, Format::Json, Format::Csv];

    pub fn as_str(&self) -> &'static str {
        match self {
            Format::Grid => "grid",
            Format::Json => "json",
            Format::Csv => "csv",
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "grid" => Ok(Format::Grid),
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            other => Err(Error::Domain(format!(
                "unknown format {other:?} (expected grid, json or csv)"
            ))),
        }
    }
}

/// The JSON document shape. Values are carried as `i128`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridDocument {
    pub order: usize,
    pub rows: Vec<Vec<i128>>,
}

impl GridDocument {
    pub fn from_square<T: Cell>(s: &Square<T>) -> Self {
        GridDocument {
            order: s.n(),
            rows: s
                .rows()
                .map(|r| r.iter().map(|v| v.wide()).collect())
                .collect(),
        }
    }
}

fn narrow<T: Cell>(v: i128, line: usize, column: usize) -> Result<T> {
    <T as NumCast>::from(v)
        .ok_or_else(|| Error::parse(line, column, format!("{v} does not fit the cell type")))
}

fn check_order(n: usize, line: usize) -> Result<()> {
    if n > MAX_ORDER {
        return Err(Error::parse(
            line,
            1,
            format!("order {n} exceeds the maximum of {MAX_ORDER}"),
        ));
    }
    Ok(())
}

fn parse_grid<T: Cell>(text: &str) -> Result<Square<T>> {
    let mut lines: Vec<(usize, &str)> = text
        .split('\n')
        .map(|l| l.strip_suffix('\r').unwrap_or(l))
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .collect();
    while lines.last().is_some_and(|(_, l)| l.trim().is_empty()) {
        lines.pop();
    }
    if lines.is_empty() {
        return Err(Error::parse(1, 1, "input is empty"));
    }
    let n = lines.len();
    check_order(n, n)?;

    let mut cells = Vec::with_capacity(n * n);
    for (line_no, line) in lines {
        let mut count = 0;
        let mut last_col = 1;
        let mut rest = line;
        let mut offset = 0;
        while let Some(start) = rest.find(|c: char| !c.is_whitespace()) {
            let tail = &rest[start..];
            let len = tail.find(char::is_whitespace).unwrap_or(tail.len());
            let token = &tail[..len];
            let column = line[..offset + start].chars().count() + 1;
            let value: i128 = token.parse().map_err(|_| {
                Error::parse(line_no, column, format!("{token:?} is not an integer"))
            })?;
            cells.push(narrow(value, line_no, column)?);
            count += 1;
            last_col = column;
            offset += start + len;
            rest = &tail[len..];
        }
        if count != n {
            return Err(Error::parse(
                line_no,
                if count == 0 { 1 } else { last_col },
                format!("row {line_no} has {count} entries, expected {n}"),
            ));
        }
    }
    Square::from_cells(n, cells)
}

fn parse_json<T: Cell>(text: &str) -> Result<Square<T>> {
    let doc: GridDocument = serde_json::from_str(text)
        .map_err(|e| Error::parse(e.line().max(1), e.column().max(1), e.to_string()))?;
    let n = doc.order;
    check_order(n, 1)?;
    if n == 0 {
        return Err(Error::parse(1, 1, "order must be at least 1"));
    }
    if doc.rows.len() != n {
        return Err(Error::parse(
            1,
            1,
            format!("declared order {n} but found {} rows", doc.rows.len()),
        ));
    }
    let mut cells = Vec::with_capacity(n * n);
    for (i, row) in doc.rows.into_iter().enumerate() {
        if row.len() != n {
            return Err(Error::parse(
                1,
                1,
                format!("row {} has {} entries, expected {n}", i + 1, row.len()),
            ));
        }
        for (j, v) in row.into_iter().enumerate() {
            cells.push(narrow(v, i + 1, j + 1)?);
        }
    }
    Square::from_cells(n, cells)
}

fn parse_csv<T: Cell>(text: &str) -> Result<Square<T>> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let mut rows: Vec<(usize, Vec<T>)> = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| {
            let line = e.position().map_or(1, |p| p.line() as usize);
            Error::parse(line, 1, e.to_string())
        })?;
        let line = record
            .position()
            .map_or(rows.len() + 1, |p| p.line() as usize);
        if record.len() == 1 && record[0].is_empty() {
            continue;
        }
        let row = record
            .iter()
            .enumerate()
            .map(|(j, field)| {
                let v: i128 = field.parse().map_err(|_| {
                    Error::parse(line, j + 1, format!("{field:?} is not an integer"))
                })?;
                narrow(v, line, j + 1)
            })
            .collect::<Result<Vec<T>>>()?;
        rows.push((line, row));
    }
    if rows.is_empty() {
        return Err(Error::parse(1, 1, "input is empty"));
    }
    let n = rows.len();
    check_order(n, n)?;
    let mut cells = Vec::with_capacity(n * n);
    for (line, row) in rows {
        if row.len() != n {
            return Err(Error::parse(
                line,
                row.len().max(1),
                format!("row {line} has {} entries, expected {n}", row.len()),
            ));
        }
        cells.extend(row);
    }
    Square::from_cells(n, cells)
}

/// Parses a square; rows and columns are inferred for grid and csv input
/// and cross-checked against the declared order for json.
pub fn parse_square<T: Cell>(input: &[u8], format: Format) -> Result<Square<T>> {
    let text = std::str::from_utf8(input).map_err(|e| {
        let before = &input[..e.valid_up_to()];
        let line = before.iter().filter(|&&b| b == b'\n').count() + 1;
        Error::parse(line, 1, "input is not valid UTF-8")
    })?;
    if text.trim().is_empty() {
        return Err(Error::parse(1, 1, "input is empty"));
    }
    match format {
        Format::Grid => parse_grid(text),
        Format::Json => parse_json(text),
        Format::Csv => parse_csv(text),
    }
}

fn digits(v: i128) -> usize {
    v.to_string().len()
}

pub fn emit_square<T: Cell>(s: &Square<T>, format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Grid => {
            let n = s.n() as i128;
            let width = digits(n * n).max(s.display_width());
            for row in s.rows() {
                let line: Vec<String> = row.iter().map(|v| format!("{v:>width$}")).collect();
                out.push_str(&line.join(" "));
                out.push('\n');
            }
        }
        Format::Json => {
            out = serde_json::to_string(&GridDocument::from_square(s))
                .expect("integer documents always serialize");
            out.push('\n');
        }
        Format::Csv => {
            for row in s.rows() {
                let line: Vec<String> = row.iter().map(ToString::to_string).collect();
                out.push_str(&line.join(","));
                out.push('\n');
            }
        }
    }
    out
}
