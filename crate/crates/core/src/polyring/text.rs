//! Canonical text form of polynomials.
//!
//! Terms appear in decreasing monomial order, joined by ` + ` / ` - `. Within a
//! term the variables are sorted by name, e.g. `-d*x1^2*y1^2 + x1^2 + c*y1^2 - 1`.
//! The parser accepts this form and, more generally, integer expressions with
//! `+ - * ^` and parentheses.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use thiserror::Error;

use super::monomial::{Monomial, Ring};
use super::polynomial::Polynomial;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("unexpected character {found:?} at offset {offset}")]
    Unexpected { offset: usize, found: char },
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("unknown variable {0:?}")]
    UnknownVariable(String),
    #[error("exponent {0} is out of range")]
    BadExponent(String),
}

fn write_monomial(f: &mut fmt::Formatter<'_>, ring: &Ring, m: &Monomial) -> fmt::Result {
    let mut factors: Vec<(&str, u8)> = ring
        .variables()
        .iter()
        .enumerate()
        .filter(|(i, _)| m.exp(*i) > 0)
        .map(|(i, v)| (v.as_str(), m.exp(i)))
        .collect();
    factors.sort_by(|a, b| a.0.cmp(b.0));
    for (k, (name, e)) in factors.iter().enumerate() {
        if k > 0 {
            f.write_str("*")?;
        }
        if *e == 1 {
            write!(f, "{name}")?;
        } else {
            write!(f, "{name}^{e}")?;
        }
    }
    Ok(())
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms().iter().enumerate() {
            let negative = c.is_negative();
            match (k, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            if m.is_one() {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                write_monomial(f, self.ring(), m)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    ring: &'a Arc<Ring>,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.peek_raw() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek_raw(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.peek_raw()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn unexpected(&mut self) -> ParseError {
        match self.peek() {
            Some(found) => ParseError::Unexpected {
                offset: self.pos,
                found,
            },
            None => ParseError::UnexpectedEnd,
        }
    }

    fn take_while(&mut self, pred: impl Fn(char) -> bool) -> &'a str {
        self.skip_ws();
        let start = self.pos;
        while let Some(c) = self.peek_raw() {
            if pred(c) {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
        &self.src[start..self.pos]
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some('+') => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Some('-') => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.unary()?;
        while self.peek() == Some('*') {
            self.bump();
            acc = &acc * &self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Polynomial, ParseError> {
        if self.peek() == Some('-') {
            self.bump();
            return Ok(-self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<Polynomial, ParseError> {
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.bump();
            let digits = self.take_while(|c| c.is_ascii_digit());
            if digits.is_empty() {
                return Err(self.unexpected());
            }
            let e: u32 = digits
                .parse()
                .ok()
                .filter(|&e| e <= u8::MAX as u32)
                .ok_or_else(|| ParseError::BadExponent(digits.to_string()))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial, ParseError> {
        match self.peek() {
            Some('(') => {
                self.bump();
                let inner = self.expr()?;
                if self.bump() != Some(')') {
                    return Err(self.unexpected());
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let digits = self.take_while(|c| c.is_ascii_digit());
                let n: BigInt = digits.parse().expect("decimal digits");
                Ok(Polynomial::constant(self.ring, n))
            }
            Some(c) if c.is_alphabetic() => {
                let name = self.take_while(|c| c.is_alphanumeric() || c == '_');
                if self.ring.index_of(name).is_none() {
                    return Err(ParseError::UnknownVariable(name.to_string()));
                }
                Ok(Polynomial::var(self.ring, name))
            }
            _ => Err(self.unexpected()),
        }
    }
}

impl Polynomial {
    pub fn parse(ring: &Arc<Ring>, src: &str) -> Result<Polynomial, ParseError> {
        let mut parser = Parser { src, pos: 0, ring };
        let p = parser.expr()?;
        if parser.peek().is_some() {
            return Err(parser.unexpected());
        }
        Ok(p)
    }
}
