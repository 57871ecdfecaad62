use num_bigint::BigUint;
use num_traits::{One, Zero};
use thiserror::Error;

use super::Ordinal;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("{message} at position {position}")]
pub struct ParseError {
    /// Byte offset into the input (whitespace included).
    pub position: usize,
    pub message: String,
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { position: self.pos, message: message.into() })
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.src[self.pos..].chars().next() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn expect(&mut self, want: char) -> Result<(), ParseError> {
        match self.peek() {
            Some(c) if c == want => {
                self.bump();
                Ok(())
            }
            Some(c) => self.err(format!("expected '{want}', found '{c}'")),
            None => self.err(format!("expected '{want}', found end of input")),
        }
    }

    fn nat(&mut self) -> Result<BigUint, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.src[self.pos..].starts_with(|c: char| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a natural number");
        }
        Ok(self.src[start..self.pos].parse().expect("digits parse"))
    }

    fn expr(&mut self) -> Result<Ordinal, ParseError> {
        let mut acc = self.term()?;
        while self.peek() == Some('+') {
            self.bump();
            let t = self.term()?;
            acc = &acc + &t;
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Ordinal, ParseError> {
        let atom = self.atom()?;
        if self.peek() == Some('*') {
            self.bump();
            let at = {
                self.skip_ws();
                self.pos
            };
            let c = self.nat()?;
            if c.is_zero() {
                return Err(ParseError { position: at, message: "coefficient must be positive".into() });
            }
            return Ok(&atom * &Ordinal::from_biguint(c));
        }
        Ok(atom)
    }

    fn atom(&mut self) -> Result<Ordinal, ParseError> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => Ok(Ordinal::from_biguint(self.nat()?)),
            Some('w') | Some('ω') => {
                self.bump();
                if self.peek() != Some('^') {
                    return Ok(Ordinal::omega());
                }
                self.bump();
                let exponent = if self.peek() == Some('(') {
                    self.bump();
                    let e = self.expr()?;
                    self.expect(')')?;
                    e
                } else {
                    self.atom()?
                };
                Ok(Ordinal::omega_pow(exponent))
            }
            Some(c) => self.err(format!("unexpected '{c}'")),
            None => self.err("unexpected end of input"),
        }
    }
}

pub(super) fn parse_ordinal(src: &str) -> Result<Ordinal, ParseError> {
    let mut p = Parser { src, pos: 0 };
    let value = p.expr()?;
    match p.peek() {
        None => Ok(value),
        Some(c) => p.err(format!("unexpected trailing '{c}'")),
    }
}

/// Renders `a`; `top` selects `" + "` separators, nested exponents use `"+"`.
pub(super) fn format_ordinal(a: &Ordinal, top: bool) -> String {
    if a.is_zero() {
        return "0".to_string();
    }
    let sep = if top { " + " } else { "+" };
    let parts: Vec<String> = a
        .terms()
        .iter()
        .map(|t| {
            let coeff = if t.coefficient.is_one() { String::new() } else { format!("*{}", t.coefficient) };
            if t.exponent.is_zero() {
                t.coefficient.to_string()
            } else if t.exponent == Ordinal::one() {
                format!("w{coeff}")
            } else if t.exponent.as_finite().is_some() || t.exponent == Ordinal::omega() {
                format!("w^{}{coeff}", format_ordinal(&t.exponent, false))
            } else {
                format!("w^({}){coeff}", format_ordinal(&t.exponent, false))
            }
        })
        .collect();
    parts.join(sep)
}
