//! Text file formats.
//!
//! Quaternary codes:
//!
//! ```text
//! Z4 <n> <#rows>
//! <row as n digits 0-3>
//! ...
//! ```
//!
//! Binary codes:
//!
//! ```text
//! F2 <n> <#rows> <explicit|linear>
//! <row as n digits 0-1>
//! ...
//! ```
//!
//! Writing then reading then writing reproduces the file byte for byte.

use crate::code::{QuaternaryCode, Z4Vector};
use crate::error::{Error, Result};
use crate::gray::{BinaryCode, BinaryVector};

/// Either kind of code file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CodeFile {
    Z4(QuaternaryCode),
    F2(BinaryCode),
}

pub fn write_z4_code(code: &QuaternaryCode) -> String {
    let mut out = format!("Z4 {} {}\n", code.len(), code.rows().len());
    for r in code.rows() {
        out.push_str(&r.to_digits());
        out.push('\n');
    }
    out
}

/// Writes explicit codes word by word and linear codes by their reduced
/// basis. Implicit Gray images cannot be written.
pub fn write_binary_code(code: &BinaryCode) -> Result<String> {
    let (kind, rows): (&str, Vec<&BinaryVector>) = match code {
        BinaryCode::Explicit { words, .. } => ("explicit", words.iter().collect()),
        BinaryCode::Linear(c) => ("linear", c.basis().collect()),
        BinaryCode::GrayImage(_) => {
            return Err(Error::InvalidArgument(
                "an implicit Gray image has no word list to write".into(),
            ))
        }
    };
    let mut out = format!("F2 {} {} {kind}\n", code.len(), rows.len());
    for r in rows {
        out.push_str(&r.to_bit_string());
        out.push('\n');
    }
    Ok(out)
}

fn header_number(field: Option<&str>, what: &str) -> Result<usize> {
    field
        .ok_or_else(|| Error::Parse(format!("header is missing {what}")))?
        .parse()
        .map_err(|_| Error::Parse(format!("header {what} is not a number")))
}

fn body_rows<'a>(
    lines: impl Iterator<Item = &'a str>,
    n: usize,
    rows: usize,
) -> Result<Vec<&'a str>> {
    let body: Vec<&str> = lines.map(str::trim).filter(|l| !l.is_empty()).collect();
    if body.len() != rows {
        return Err(Error::Parse(format!(
            "header announces {rows} rows, found {}",
            body.len()
        )));
    }
    if let Some(bad) = body.iter().find(|r| r.len() != n) {
        return Err(Error::Parse(format!(
            "row {bad:?} does not have length {n}"
        )));
    }
    Ok(body)
}

pub fn parse_code_file(text: &str) -> Result<CodeFile> {
    let mut lines = text.lines();
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty code file".into()))?;
    let mut fields = header.split_whitespace();
    match fields.next() {
        Some("Z4") => {
            let n = header_number(fields.next(), "length")?;
            let rows = header_number(fields.next(), "row count")?;
            let rows = body_rows(lines, n, rows)?
                .into_iter()
                .map(str::parse::<Z4Vector>)
                .collect::<Result<Vec<_>>>()?;
            Ok(CodeFile::Z4(QuaternaryCode::from_rows(n, rows)?))
        }
        Some("F2") => {
            let n = header_number(fields.next(), "length")?;
            let count = header_number(fields.next(), "row count")?;
            let kind = fields
                .next()
                .ok_or_else(|| Error::Parse("header is missing explicit|linear".into()))?;
            let rows = body_rows(lines, n, count)?
                .into_iter()
                .map(str::parse::<BinaryVector>)
                .collect::<Result<Vec<_>>>()?;
            match kind {
                "explicit" => Ok(CodeFile::F2(BinaryCode::explicit(n, rows)?)),
                "linear" => Ok(CodeFile::F2(BinaryCode::linear(n, rows)?)),
                other => Err(Error::Parse(format!("unknown binary code kind {other:?}"))),
            }
        }
        _ => Err(Error::Parse(format!(
            "unrecognised header {header:?}; expected \"Z4 ...\" or \"F2 ...\""
        ))),
    }
}

pub fn parse_z4_code(text: &str) -> Result<QuaternaryCode> {
    match parse_code_file(text)? {
        CodeFile::Z4(c) => Ok(c),
        CodeFile::F2(_) => Err(Error::Parse("expected a Z4 code file".into())),
    }
}

pub fn parse_binary_code(text: &str) -> Result<BinaryCode> {
    match parse_code_file(text)? {
        CodeFile::F2(c) => Ok(c),
        CodeFile::Z4(_) => Err(Error::Parse("expected an F2 code file".into())),
    }
}
