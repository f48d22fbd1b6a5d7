//! Expression front-end for elements of ℚ(x).
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | factor
//! factor := base ('^' '-'? integer)?
//! base   := rational | 'x' | '(' expr ')'
//! rational := integer ('/' integer)?
//! ```
//!
//! Whitespace is insignificant. A rational literal binds tighter than `^`,
//! so `2/3^2` is `4/9`.

use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use crate::error::{Error, Result};
use crate::polyalg::{Poly, Rational, RationalFunction};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at column {}: {message}", .start + 1)]
pub struct ParseError {
    pub message: String,
    /// Byte offsets into the source.
    pub start: usize,
    pub end: usize,
}

impl ParseError {
    fn new(message: impl Into<String>, start: usize, end: usize) -> Self {
        ParseError {
            message: message.into(),
            start,
            end: end.max(start + 1),
        }
    }

    /// Two-line diagnostic: the source, then carets under the offending span.
    pub fn render(&self, source: &str) -> String {
        let col = source[..self.start.min(source.len())].chars().count();
        let width = source
            .get(self.start..self.end.min(source.len()))
            .map_or(1, |s| s.chars().count().max(1));
        format!(
            "{}\n  {}\n  {}{}",
            self,
            source,
            " ".repeat(col),
            "^".repeat(width)
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    X,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Int(i) => write!(f, "{i}"),
            Tok::X => write!(f, "x"),
            Tok::Plus => write!(f, "+"),
            Tok::Minus => write!(f, "-"),
            Tok::Star => write!(f, "*"),
            Tok::Slash => write!(f, "/"),
            Tok::Caret => write!(f, "^"),
            Tok::LParen => write!(f, "("),
            Tok::RParen => write!(f, ")"),
            Tok::End => write!(f, "end of input"),
        }
    }
}

fn tokenize(src: &str) -> Result<Vec<(Tok, usize, usize)>, ParseError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = src[start..i].parse().expect("digits");
                out.push((Tok::Int(n), start, i));
                continue;
            }
            b'x' => Tok::X,
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            _ => {
                let ch = src[i..].chars().next().expect("in bounds");
                return Err(ParseError::new(
                    format!("unexpected character '{ch}'"),
                    i,
                    i + ch.len_utf8(),
                ));
            }
        };
        out.push((tok, i, i + 1));
        i += 1;
    }
    out.push((Tok::End, src.len(), src.len()));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize, usize)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn peek_at(&self, k: usize) -> &Tok {
        &self.toks[(self.pos + k).min(self.toks.len() - 1)].0
    }

    fn span(&self) -> (usize, usize) {
        let (_, s, e) = self.toks[self.pos];
        (s, e)
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn unexpected(&self, wanted: &str) -> Error {
        let (s, e) = self.span();
        ParseError::new(format!("expected {wanted}, found {}", self.peek()), s, e).into()
    }

    fn expr(&mut self) -> Result<RationalFunction> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<RationalFunction> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    acc = &acc * &self.unary()?;
                }
                Tok::Slash => {
                    self.bump();
                    let rhs = self.unary()?;
                    acc = acc.checked_div(&rhs)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<RationalFunction> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(-self.unary()?);
        }
        self.factor()
    }

    fn factor(&mut self) -> Result<RationalFunction> {
        let base = self.base()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let neg = if *self.peek() == Tok::Minus {
            self.bump();
            true
        } else {
            false
        };
        let (s, e) = self.span();
        let Tok::Int(n) = self.peek().clone() else {
            return Err(self.unexpected("integer exponent"));
        };
        self.bump();
        let n: i64 = i64::try_from(&n)
            .ok()
            .filter(|v| *v <= 100_000)
            .ok_or_else(|| ParseError::new("exponent too large", s, e))?;
        base.pow(if neg { -n } else { n })
    }

    fn base(&mut self) -> Result<RationalFunction> {
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                if *self.peek() == Tok::Slash {
                    if let Tok::Int(d) = self.peek_at(1).clone() {
                        let (_, s, e) = self.toks[self.pos + 1].clone();
                        self.bump();
                        self.bump();
                        if d == BigInt::from(0) {
                            return Err(ParseError::new("zero denominator", s, e).into());
                        }
                        return Ok(RationalFunction::constant(Rational::new(n, d)));
                    }
                }
                Ok(RationalFunction::constant(Rational::from_integer(n)))
            }
            Tok::X => {
                self.bump();
                Ok(RationalFunction::x())
            }
            Tok::LParen => {
                self.bump();
                let inner = self.expr()?;
                if *self.peek() != Tok::RParen {
                    return Err(self.unexpected("')'"));
                }
                self.bump();
                Ok(inner)
            }
            _ => Err(self.unexpected("a number, 'x' or '('")),
        }
    }
}

/// Parses an element of ℚ(x).
pub fn parse(src: &str) -> Result<RationalFunction> {
    let mut p = Parser {
        toks: tokenize(src)?,
        pos: 0,
    };
    let v = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(p.unexpected("an operator or end of input"));
    }
    Ok(v)
}

/// Parses an expression that must denote a polynomial.
pub fn parse_poly(src: &str) -> Result<Poly> {
    let f = parse(src)?;
    if !f.is_polynomial() {
        return Err(Error::NotPolynomial(src.to_string()));
    }
    Ok(f.num().clone())
}

/// Parses an expression that must denote a rational constant.
pub fn parse_rational(src: &str) -> Result<Rational> {
    let f = parse(src)?;
    f.as_constant()
        .ok_or_else(|| Error::Precondition(format!("'{src}' is not a constant")))
}
