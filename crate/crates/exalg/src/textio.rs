//! Line-oriented text format shared by the CLI and the matrix files.
//!
//! ```text
//! ring Zmod 6
//! dims 2 2
//! 2 0
//! 0 1
//! rhs 1 5
//! ```
//!
//! The header names the ring (`Z`, `Zmod <n>`, `Q`, `Poly <k>`, `Quat`),
//! `dims` gives rows and columns, then one row per line with entries
//! separated by whitespace (so entries themselves must not contain spaces;
//! the standalone literal parsers are whitespace-insensitive). An optional
//! trailing `rhs` line carries a right-hand-side vector. Parsing is strict
//! and locale-independent; integers are unbounded.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

use crate::matrix::RingMatrix;
use crate::poly::{parse_polynomial, PolyRing, Polynomial};
use crate::quat::{parse_quaternion, Quaternion};
use crate::rings::{IntegerRing, ModRing, ModularInt, RationalRing};
use crate::skew::{QuaternionField, SkewMatrix};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}, column {col}: {msg}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

impl ParseError {
    fn new(line: usize, col: usize, msg: impl Into<String>) -> Self {
        ParseError { line, col, msg: msg.into() }
    }
}

/// Ring named in a file header or a `--ring` flag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingDescriptor {
    Integers,
    Modular(BigUint),
    Rationals,
    Poly(usize),
    Quaternions,
}

impl RingDescriptor {
    /// Parse the tokens after `ring` (or a whole `--ring` value).
    pub fn parse(tokens: &[&str]) -> Result<Self, String> {
        match tokens {
            ["Z"] => Ok(RingDescriptor::Integers),
            ["Q"] => Ok(RingDescriptor::Rationals),
            ["Quat"] => Ok(RingDescriptor::Quaternions),
            ["Zmod", n] => {
                let n: BigUint = n.parse().map_err(|_| format!("invalid modulus {n:?}"))?;
                if n.is_zero() {
                    return Err("modulus must be >= 1".into());
                }
                Ok(RingDescriptor::Modular(n))
            }
            ["Poly", k] => {
                let k: usize = k.parse().map_err(|_| format!("invalid variable count {k:?}"))?;
                Ok(RingDescriptor::Poly(k))
            }
            [] => Err("missing ring descriptor".into()),
            other => Err(format!(
                "unknown ring descriptor {:?} (expected Z, Zmod <n>, Q, Poly <k>, Quat)",
                other.join(" ")
            )),
        }
    }
}

impl FromStr for RingDescriptor {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let tokens: Vec<&str> = s.split_whitespace().collect();
        RingDescriptor::parse(&tokens)
    }
}

impl fmt::Display for RingDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingDescriptor::Integers => write!(f, "Z"),
            RingDescriptor::Modular(n) => write!(f, "Zmod {n}"),
            RingDescriptor::Rationals => write!(f, "Q"),
            RingDescriptor::Poly(k) => write!(f, "Poly {k}"),
            RingDescriptor::Quaternions => write!(f, "Quat"),
        }
    }
}

/// A parsed matrix document: the declared ring, the matrix, and the optional
/// right-hand side, in matching representations.
#[derive(Debug, Clone)]
pub enum Document {
    Int { matrix: RingMatrix<IntegerRing>, rhs: Option<Vec<BigInt>> },
    Mod { matrix: RingMatrix<ModRing>, rhs: Option<Vec<ModularInt>> },
    Rat { matrix: RingMatrix<RationalRing>, rhs: Option<Vec<BigRational>> },
    Poly { matrix: RingMatrix<PolyRing>, rhs: Option<Vec<Polynomial>> },
    Quat { matrix: SkewMatrix<QuaternionField>, rhs: Option<Vec<Quaternion>> },
}

impl Document {
    pub fn descriptor(&self) -> RingDescriptor {
        match self {
            Document::Int { .. } => RingDescriptor::Integers,
            Document::Mod { matrix, .. } => RingDescriptor::Modular(matrix.ring().modulus().clone()),
            Document::Rat { .. } => RingDescriptor::Rationals,
            Document::Poly { matrix, .. } => RingDescriptor::Poly(matrix.ring().nvars()),
            Document::Quat { .. } => RingDescriptor::Quaternions,
        }
    }

    pub fn dims(&self) -> (usize, usize) {
        match self {
            Document::Int { matrix, .. } => (matrix.rows(), matrix.cols()),
            Document::Mod { matrix, .. } => (matrix.rows(), matrix.cols()),
            Document::Rat { matrix, .. } => (matrix.rows(), matrix.cols()),
            Document::Poly { matrix, .. } => (matrix.rows(), matrix.cols()),
            Document::Quat { matrix, .. } => (matrix.rows(), matrix.cols()),
        }
    }
}

/// Parse a rational literal `p/q` or a plain integer.
pub fn parse_rational(token: &str) -> Result<BigRational, String> {
    match token.split_once('/') {
        None => {
            let n: BigInt = token.parse().map_err(|_| format!("invalid integer {token:?}"))?;
            Ok(BigRational::from_integer(n))
        }
        Some((num, den)) => {
            let n: BigInt = num.parse().map_err(|_| format!("invalid numerator {num:?}"))?;
            let d: BigInt = den.parse().map_err(|_| format!("invalid denominator {den:?}"))?;
            if d.is_zero() {
                return Err("denominator is zero".into());
            }
            Ok(BigRational::new(n, d))
        }
    }
}

/// Parse a full matrix document.
pub fn parse_document(input: &str) -> Result<Document, ParseError> {
    let mut lines = Vec::new();
    for (idx, raw) in input.lines().enumerate() {
        let body = raw.split('#').next().unwrap_or("");
        if !body.trim().is_empty() {
            lines.push((idx + 1, body));
        }
    }
    let mut it = lines.into_iter();

    let (ring_line, ring_body) = it
        .next()
        .ok_or_else(|| ParseError::new(1, 1, "empty document: expected a `ring` header"))?;
    let ring_tokens: Vec<&str> = ring_body.split_whitespace().collect();
    if ring_tokens.first() != Some(&"ring") {
        return Err(ParseError::new(ring_line, col_of(ring_body, 0), "expected `ring <descriptor>`"));
    }
    let descriptor = RingDescriptor::parse(&ring_tokens[1..])
        .map_err(|msg| ParseError::new(ring_line, col_of(ring_body, 1), msg))?;

    let (dims_line, dims_body) = it
        .next()
        .ok_or_else(|| ParseError::new(ring_line + 1, 1, "expected `dims <rows> <cols>`"))?;
    let dims_tokens: Vec<&str> = dims_body.split_whitespace().collect();
    if dims_tokens.len() != 3 || dims_tokens[0] != "dims" {
        return Err(ParseError::new(dims_line, col_of(dims_body, 0), "expected `dims <rows> <cols>`"));
    }
    let rows: usize = dims_tokens[1]
        .parse()
        .map_err(|_| ParseError::new(dims_line, col_of(dims_body, 1), "invalid row count"))?;
    let cols: usize = dims_tokens[2]
        .parse()
        .map_err(|_| ParseError::new(dims_line, col_of(dims_body, 2), "invalid column count"))?;

    let mut row_tokens: Vec<(usize, Vec<(usize, String)>)> = Vec::new();
    let mut rhs_tokens: Option<(usize, Vec<(usize, String)>)> = None;
    for (line_no, body) in it {
        let toks = tokens_with_cols(body);
        if toks.first().map(|(_, t)| t.as_str()) == Some("rhs") {
            if rhs_tokens.is_some() {
                return Err(ParseError::new(line_no, toks[0].0, "duplicate rhs line"));
            }
            rhs_tokens = Some((line_no, toks[1..].to_vec()));
            continue;
        }
        if rhs_tokens.is_some() {
            return Err(ParseError::new(line_no, toks[0].0, "matrix rows after the rhs line"));
        }
        row_tokens.push((line_no, toks));
    }
    if row_tokens.len() != rows {
        let line = row_tokens.last().map(|(l, _)| *l).unwrap_or(dims_line);
        return Err(ParseError::new(line, 1, format!("expected {rows} matrix rows, found {}", row_tokens.len())));
    }
    for (line_no, toks) in &row_tokens {
        if toks.len() != cols {
            return Err(ParseError::new(
                *line_no,
                toks.last().map(|(c, _)| *c).unwrap_or(1),
                format!("expected {cols} entries, found {}", toks.len()),
            ));
        }
    }
    if let Some((line_no, toks)) = &rhs_tokens {
        if toks.len() != rows {
            return Err(ParseError::new(
                *line_no,
                toks.last().map(|(c, _)| *c).unwrap_or(1),
                format!("rhs must have {rows} entries, found {}", toks.len()),
            ));
        }
    }

    fn build<T, F: Fn(usize, usize, &str) -> Result<T, ParseError>>(
        row_tokens: &[(usize, Vec<(usize, String)>)],
        rhs_tokens: &Option<(usize, Vec<(usize, String)>)>,
        parse: F,
    ) -> Result<(Vec<Vec<T>>, Option<Vec<T>>), ParseError> {
        let mut rows = Vec::new();
        for (line_no, toks) in row_tokens {
            let mut row = Vec::new();
            for (col, tok) in toks {
                row.push(parse(*line_no, *col, tok)?);
            }
            rows.push(row);
        }
        let rhs = match rhs_tokens {
            None => None,
            Some((line_no, toks)) => {
                let mut out = Vec::new();
                for (col, tok) in toks {
                    out.push(parse(*line_no, *col, tok)?);
                }
                Some(out)
            }
        };
        Ok((rows, rhs))
    }

    match descriptor {
        RingDescriptor::Integers => {
            let (rows_v, rhs) = build(&row_tokens, &rhs_tokens, |l, c, tok| {
                tok.parse::<BigInt>().map_err(|_| ParseError::new(l, c, format!("invalid integer {tok:?}")))
            })?;
            Ok(Document::Int { matrix: RingMatrix::from_rows(IntegerRing, rows_v), rhs })
        }
        RingDescriptor::Modular(n) => {
            let ring = ModRing::new(n);
            let (rows_v, rhs) = build(&row_tokens, &rhs_tokens, |l, c, tok| {
                let v = tok
                    .parse::<BigInt>()
                    .map_err(|_| ParseError::new(l, c, format!("invalid integer {tok:?}")))?;
                Ok(ModularInt::new(v, ring.modulus().clone()))
            })?;
            Ok(Document::Mod { matrix: RingMatrix::from_rows(ring, rows_v), rhs })
        }
        RingDescriptor::Rationals => {
            let (rows_v, rhs) = build(&row_tokens, &rhs_tokens, |l, c, tok| {
                parse_rational(tok).map_err(|msg| ParseError::new(l, c, msg))
            })?;
            Ok(Document::Rat { matrix: RingMatrix::from_rows(RationalRing, rows_v), rhs })
        }
        RingDescriptor::Poly(k) => {
            let (rows_v, rhs) = build(&row_tokens, &rhs_tokens, |l, c, tok| {
                parse_polynomial(tok, k).map_err(|e| ParseError::new(l, c + e.offset, e.msg))
            })?;
            Ok(Document::Poly { matrix: RingMatrix::from_rows(PolyRing::new(k), rows_v), rhs })
        }
        RingDescriptor::Quaternions => {
            let (rows_v, rhs) = build(&row_tokens, &rhs_tokens, |l, c, tok| {
                parse_quaternion(tok).map_err(|e| ParseError::new(l, c + e.offset, e.msg))
            })?;
            Ok(Document::Quat { matrix: SkewMatrix::from_rows(QuaternionField, rows_v), rhs })
        }
    }
}

fn tokens_with_cols(body: &str) -> Vec<(usize, String)> {
    let mut out = Vec::new();
    let mut col = 1usize;
    let mut start = None;
    for (i, ch) in body.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((col, body[s..i].to_string()));
            }
        } else if start.is_none() {
            start = Some(i);
            col = i + 1;
        }
    }
    if let Some(s) = start {
        out.push((col, body[s..].to_string()));
    }
    out
}

fn col_of(body: &str, token_index: usize) -> usize {
    tokens_with_cols(body).get(token_index).map(|(c, _)| *c).unwrap_or(1)
}
