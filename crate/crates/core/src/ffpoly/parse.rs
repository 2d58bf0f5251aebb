//! Text forms of polynomials.
//!
//! Grammar (whitespace between tokens is ignored):
//!
//! ```text
//! poly  := "0" | term ("+" term)*
//! term  := coeff "*" mono | coeff | mono
//! mono  := "x" | "x^" exp
//! ```
//!
//! Coefficients must already be reduced mod p and each exponent may appear
//! once. Over F_2 a hexadecimal bitmask `0x...` (bit i = coefficient of x^i)
//! is accepted as well.

use std::fmt;

use super::field::FieldSpec;
use super::poly::Polynomial;
use crate::error::{Error, Result};

/// Exponents past this are rejected so hostile input cannot force huge allocations.
pub const MAX_PARSE_EXPONENT: usize = 1 << 16;

fn err(pos: usize, reason: impl Into<String>) -> Error {
    Error::Parse { pos, reason: reason.into() }
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Cursor<'_> {
    fn skip_ws(&mut self) {
        while self.bytes.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn number(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        let mut value: u64 = 0;
        while let Some(d) = self.bytes.get(self.pos).filter(|b| b.is_ascii_digit()) {
            value = value
                .checked_mul(10)
                .and_then(|v| v.checked_add(u64::from(d - b'0')))
                .ok_or_else(|| err(start, "integer overflow"))?;
            self.pos += 1;
        }
        if self.pos == start {
            return Err(err(start, "expected a number"));
        }
        Ok(value)
    }

    /// After an `x`: optional `^exp`.
    fn exponent(&mut self) -> Result<usize> {
        if !self.eat(b'^') {
            return Ok(1);
        }
        let at = self.pos;
        let e = self.number()?;
        usize::try_from(e)
            .ok()
            .filter(|&e| e <= MAX_PARSE_EXPONENT)
            .ok_or_else(|| err(at, format!("exponent exceeds {MAX_PARSE_EXPONENT}")))
    }
}

/// Parses the term-sum grammar (or a `0x` bitmask when p = 2).
pub fn parse_poly(text: &str, field: FieldSpec) -> Result<Polynomial> {
    let trimmed = text.trim();
    if let Some(hex) = trimmed.strip_prefix("0x").or_else(|| trimmed.strip_prefix("0X")) {
        if field.p() != 2 {
            return Err(err(0, "bitmask form is only defined over F_2"));
        }
        return parse_bitmask(hex).map(Polynomial::from_bitmask);
    }

    let mut cur = Cursor { bytes: text.as_bytes(), pos: 0 };
    let mut coeffs: Vec<u32> = Vec::new();
    let mut seen: Vec<bool> = Vec::new();
    loop {
        let (c, e) = match cur.peek() {
            Some(b'x') => {
                cur.pos += 1;
                (1, cur.exponent()?)
            }
            Some(b) if b.is_ascii_digit() => {
                let c = cur.number()?;
                if c >= u64::from(field.p()) {
                    return Err(Error::CoefficientOutOfRange { coeff: c, p: field.p() });
                }
                if cur.eat(b'*') {
                    if !cur.eat(b'x') {
                        return Err(err(cur.pos, "expected 'x' after '*'"));
                    }
                    (c as u32, cur.exponent()?)
                } else {
                    (c as u32, 0)
                }
            }
            Some(_) => return Err(err(cur.pos, "expected a term")),
            None => return Err(err(cur.pos, "unexpected end of input")),
        };
        if e >= seen.len() {
            seen.resize(e + 1, false);
            coeffs.resize(e + 1, 0);
        }
        if std::mem::replace(&mut seen[e], true) {
            return Err(Error::DuplicateExponent(e));
        }
        coeffs[e] = c;
        match cur.peek() {
            None => break,
            Some(b'+') => cur.pos += 1,
            Some(_) => return Err(err(cur.pos, "expected '+' or end of input")),
        }
    }
    Ok(Polynomial::from_reduced(field, coeffs))
}

/// Hex digits (no prefix) to a mask; at most 16 digits after leading zeros.
pub fn parse_bitmask(hex: &str) -> Result<u64> {
    let digits = hex.trim();
    if digits.is_empty() {
        return Err(err(0, "empty bitmask"));
    }
    if let Some(pos) = digits.bytes().position(|b| !b.is_ascii_hexdigit()) {
        return Err(err(pos, "invalid hex digit"));
    }
    u64::from_str_radix(digits, 16).map_err(|_| err(0, "bitmask wider than 64 bits"))
}

/// `0x`-prefixed lowercase hex of the bitmask, or `None` off F_2 / past degree 63.
pub fn format_bitmask(f: &Polynomial) -> Option<String> {
    f.to_bitmask().map(|m| format!("{m:#x}"))
}

pub fn format_poly(f: &Polynomial) -> String {
    f.to_string()
}

/// Terms in descending exponent order: `2*x^3+x+1`; the zero polynomial is `0`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, &c) in self.coeffs().iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str("+")?;
            }
            first = false;
            match (c, e) {
                (c, 0) => write!(f, "{c}")?,
                (1, 1) => f.write_str("x")?,
                (1, e) => write!(f, "x^{e}")?,
                (c, 1) => write!(f, "{c}*x")?,
                (c, e) => write!(f, "{c}*x^{e}")?,
            }
        }
        Ok(())
    }
}
