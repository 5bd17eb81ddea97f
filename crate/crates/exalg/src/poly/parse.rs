//! Parser for the polynomial literal syntax: terms joined by `+`/`-`, each
//! term a `*`-separated product of an optional integer coefficient and powers
//! `x<k>^<e>`. Whitespace is insignificant. Examples: `3*x1^2*x2 - 4`,
//! `x1 - 5`, `-x2^3+2`.

use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

use super::Polynomial;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("{msg} (at offset {offset})")]
pub struct PolyParseError {
    pub offset: usize,
    pub msg: String,
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(s: &'a str) -> Self {
        Cursor { bytes: s.as_bytes(), pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, PolyParseError> {
        Err(PolyParseError { offset: self.pos, msg: msg.into() })
    }

    fn integer(&mut self) -> Result<BigInt, PolyParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return self.err("expected an integer");
        }
        let text = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        Ok(text.parse().unwrap())
    }
}

/// Parse a polynomial literal over `nvars` variables; variable indices above
/// `nvars` are rejected.
pub fn parse_polynomial(input: &str, nvars: usize) -> Result<Polynomial, PolyParseError> {
    let mut cur = Cursor::new(input);
    let mut acc = Polynomial::zero(nvars);
    let mut first = true;
    loop {
        let sign = match cur.peek() {
            None if first => return cur.err("empty polynomial literal"),
            None => break,
            Some(b'+') => {
                cur.bump();
                1
            }
            Some(b'-') => {
                cur.bump();
                -1
            }
            Some(_) if first => 1,
            Some(c) => return cur.err(format!("expected '+' or '-', found {:?}", c as char)),
        };
        first = false;
        let term = parse_term(&mut cur, nvars)?;
        acc = if sign > 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    Ok(acc)
}

fn parse_term(cur: &mut Cursor, nvars: usize) -> Result<Polynomial, PolyParseError> {
    let mut coeff = BigInt::one();
    let mut exps = vec![0u32; nvars];
    loop {
        match cur.peek() {
            Some(c) if c.is_ascii_digit() => {
                coeff *= cur.integer()?;
            }
            Some(b'x') | Some(b'X') => {
                cur.bump();
                let at = cur.pos;
                let idx = cur.integer().map_err(|_| PolyParseError {
                    offset: at,
                    msg: "expected a variable index after 'x'".into(),
                })?;
                let idx: usize = match idx.try_into() {
                    Ok(v) => v,
                    Err(_) => return cur.err("variable index out of range"),
                };
                if idx == 0 || idx > nvars {
                    return Err(PolyParseError {
                        offset: at,
                        msg: format!("variable x{idx} is not among the declared {nvars} variable(s)"),
                    });
                }
                let mut exp = 1u32;
                if cur.peek() == Some(b'^') {
                    cur.bump();
                    let e = cur.integer()?;
                    exp = e.try_into().map_err(|_| PolyParseError {
                        offset: cur.pos,
                        msg: "exponent too large".into(),
                    })?;
                }
                exps[idx - 1] += exp;
            }
            _ => return cur.err("expected a coefficient or a variable"),
        }
        if cur.peek() == Some(b'*') {
            cur.bump();
            continue;
        }
        break;
    }
    Ok(Polynomial::from_terms(nvars, vec![(exps, coeff)]))
}
