//! Polynomial expression language.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' unary) | implicit)*      implicit: next token is X, i or '('
//! unary  := '-' unary | power
//! power  := atom ('^' integer)?
//! atom   := integer | integer '/' integer | 'i' | 'X' | '(' expr ')'
//! ```
//!
//! `^` binds tighter than unary minus, which binds tighter than `*`. A
//! rational literal `p/q` is a single token, so `1/2X` is `(1/2)X`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::arith::{GaussRat, Rat};
use crate::poly::Poly;

/// Largest exponent accepted after `^`.
pub const MAX_EXPONENT: u32 = 4096;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset into the input.
    pub offset: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "syntax error at offset {}: {}", self.offset, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PolyExpr {
    Const(GaussRat),
    X,
    Neg(Box<PolyExpr>),
    Add(Box<PolyExpr>, Box<PolyExpr>),
    Sub(Box<PolyExpr>, Box<PolyExpr>),
    Mul(Box<PolyExpr>, Box<PolyExpr>),
    Pow(Box<PolyExpr>, u32),
}

impl PolyExpr {
    pub fn eval(&self) -> Poly<GaussRat> {
        match self {
            PolyExpr::Const(c) => Poly::constant(c.clone()),
            PolyExpr::X => Poly::x(),
            PolyExpr::Neg(a) => -a.eval(),
            PolyExpr::Add(a, b) => &a.eval() + &b.eval(),
            PolyExpr::Sub(a, b) => &a.eval() - &b.eval(),
            PolyExpr::Mul(a, b) => &a.eval() * &b.eval(),
            PolyExpr::Pow(a, n) => a.eval().pow(*n),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(Rat),
    I,
    X,
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

struct Token {
    tok: Tok,
    end: usize,
}

fn err(offset: usize, message: impl Into<String>) -> ParseError {
    ParseError { offset, message: message.into() }
}

fn lex(text: &str) -> Result<Vec<Token>, ParseError> {
    let bytes = text.as_bytes();
    let digits_end = |mut j: usize| {
        while j < bytes.len() && bytes[j].is_ascii_digit() {
            j += 1;
        }
        j
    };
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let tok = match c {
            b'0'..=b'9' => {
                let mut end = digits_end(i);
                let num: BigInt = text[i..end].parse().expect("ascii digits");
                let mut value = Rat::from_integer(num);
                if end + 1 < bytes.len() && bytes[end] == b'/' && bytes[end + 1].is_ascii_digit() {
                    let den_end = digits_end(end + 1);
                    let den: BigInt = text[end + 1..den_end].parse().expect("ascii digits");
                    if den.is_zero() {
                        return Err(err(end + 1, "zero denominator"));
                    }
                    value = value / Rat::from_integer(den);
                    end = den_end;
                }
                i = end;
                Tok::Num(value)
            }
            b'i' => Tok::I,
            b'X' | b'x' => Tok::X,
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            _ => {
                let ch = text[i..].chars().next().expect("in bounds");
                return Err(err(i, format!("unexpected character '{ch}'")));
            }
        };
        if !matches!(tok, Tok::Num(_)) {
            i += 1;
        }
        out.push(Token { tok, end: i });
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.tok)
    }

    /// Errors are reported at the end of the last consumed token.
    fn here(&self) -> usize {
        if self.pos == 0 { 0 } else { self.toks[self.pos - 1].end }
    }

    fn bump(&mut self) -> &Token {
        self.pos += 1;
        &self.toks[self.pos - 1]
    }

    fn expr(&mut self) -> Result<PolyExpr, ParseError> {
        let mut lhs = self.term()?;
        while let Some(op) = self.peek().cloned() {
            match op {
                Tok::Plus => {
                    self.bump();
                    lhs = PolyExpr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Tok::Minus => {
                    self.bump();
                    lhs = PolyExpr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => break,
            }
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<PolyExpr, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                }
                Some(Tok::X | Tok::I | Tok::LParen) => {}
                _ => break,
            }
            lhs = PolyExpr::Mul(Box::new(lhs), Box::new(self.unary()?));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<PolyExpr, ParseError> {
        if self.peek() == Some(&Tok::Minus) {
            self.bump();
            return Ok(PolyExpr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<PolyExpr, ParseError> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.bump();
        let at = self.here();
        let exponent = match self.peek() {
            Some(Tok::Num(n)) if n.is_integer() => n.to_integer(),
            _ => return Err(err(at, "exponent must be a nonnegative integer")),
        };
        self.bump();
        let exponent = u32::try_from(exponent)
            .ok()
            .filter(|&e| e <= MAX_EXPONENT)
            .ok_or_else(|| err(at, format!("exponent exceeds {MAX_EXPONENT}")))?;
        Ok(PolyExpr::Pow(Box::new(base), exponent))
    }

    fn atom(&mut self) -> Result<PolyExpr, ParseError> {
        let at = self.here();
        let Some(tok) = self.peek().cloned() else {
            return Err(err(at, "unexpected end of input"));
        };
        match tok {
            Tok::Num(n) => {
                self.bump();
                Ok(PolyExpr::Const(GaussRat::from(n)))
            }
            Tok::I => {
                self.bump();
                Ok(PolyExpr::Const(GaussRat::i()))
            }
            Tok::X => {
                self.bump();
                Ok(PolyExpr::X)
            }
            Tok::LParen => {
                self.bump();
                let inner = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return Err(err(self.here(), "expected ')'"));
                }
                self.bump();
                Ok(inner)
            }
            _ => Err(err(at, "expected a number, i, X or '('")),
        }
    }
}

pub fn parse_polynomial(text: &str) -> Result<PolyExpr, ParseError> {
    let toks = lex(text)?;
    let mut p = Parser { toks, pos: 0 };
    let e = p.expr()?;
    if p.pos < p.toks.len() {
        return Err(err(p.here(), "unexpected trailing input"));
    }
    Ok(e)
}

/// Parses and evaluates in one go.
pub fn parse_poly(text: &str) -> Result<Poly<GaussRat>, ParseError> {
    Ok(parse_polynomial(text)?.eval())
}

/// The same polynomial over `Q`, when every coefficient is real.
pub fn to_rational(p: &Poly<GaussRat>) -> Option<Poly<Rat>> {
    p.coeffs()
        .iter()
        .map(|c| c.im.is_zero().then(|| c.re.clone()))
        .collect::<Option<Vec<_>>>()
        .map(Poly::from_coeffs)
}

pub fn to_gaussian(p: &Poly<Rat>) -> Poly<GaussRat> {
    p.map(|c| GaussRat::from(c.clone()))
}
