//! Recursive-descent parser for polynomial text.
//!
//! Grammar:
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary (('*' | '/') unary)*      division only by a nonzero constant
//! unary := ('+' | '-') unary | power
//! power := atom ('^' uint)?
//! atom  := integer | ident | '(' expr ')'
//! ```
//!
//! Juxtaposition such as `2x` is rejected.

use num_bigint::BigInt;
use num_traits::Zero;

use super::monomial::{valid_identifier, Vars};
use super::poly::Poly;
use super::rational::Rational;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(s: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '0'..='9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((start, Tok::Int(s[start..i].parse().unwrap())));
                continue;
            }
            c if c.is_ascii_alphabetic() => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                let name = &s[start..i];
                debug_assert!(valid_identifier(name));
                out.push((start, Tok::Ident(name.to_string())));
                continue;
            }
            other => {
                return Err(Error::Parse(format!(
                    "unexpected character `{other}` at offset {i}"
                )))
            }
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    vars: &'a Vars,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> String {
        match self.toks.get(self.pos) {
            Some((o, _)) => format!("offset {o}"),
            None => "end of input".to_string(),
        }
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    acc = &acc * &self.unary()?;
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    let at = self.offset();
                    let d = self.unary()?;
                    if !d.is_constant() {
                        return Err(Error::Parse(format!("division by a non-constant at {at}")));
                    }
                    let c = d.constant_term();
                    if c.is_zero() {
                        return Err(Error::Parse(format!("division by zero at {at}")));
                    }
                    acc = acc.scale(&c.recip());
                }
                Some(Tok::Int(_)) | Some(Tok::Ident(_)) | Some(Tok::LParen) => {
                    return Err(Error::Parse(format!(
                        "missing operator before {} (write `*` explicitly)",
                        self.offset()
                    )))
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Poly> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Poly> {
        let base = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            self.pos += 1;
            match self.toks.get(self.pos).cloned() {
                Some((_, Tok::Int(e))) => {
                    self.pos += 1;
                    let e: u32 = e
                        .try_into()
                        .map_err(|_| Error::Parse("exponent too large".to_string()))?;
                    return Ok(base.pow_u(e));
                }
                Some((_, Tok::Minus)) => {
                    return Err(Error::Parse(format!(
                        "negative exponent at {}",
                        self.offset()
                    )))
                }
                _ => {
                    return Err(Error::Parse(format!(
                        "expected a non-negative integer exponent at {}",
                        self.offset()
                    )))
                }
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Poly> {
        let at = self.offset();
        match self.toks.get(self.pos).cloned() {
            Some((_, Tok::Int(n))) => {
                self.pos += 1;
                Ok(Poly::constant(self.vars, Rational::from_integer(n)))
            }
            Some((_, Tok::Ident(name))) => {
                self.pos += 1;
                Poly::var(self.vars, &name)
            }
            Some((_, Tok::LParen)) => {
                self.pos += 1;
                let inner = self.expr()?;
                match self.peek() {
                    Some(Tok::RParen) => {
                        self.pos += 1;
                        Ok(inner)
                    }
                    _ => Err(Error::Parse(format!("expected `)` at {}", self.offset()))),
                }
            }
            _ => Err(Error::Parse(format!(
                "expected a number, variable or `(` at {at}"
            ))),
        }
    }
}

/// Parses `s` as a polynomial in `vars`. Unknown identifiers are an error.
pub fn parse_poly(s: &str, vars: &Vars) -> Result<Poly> {
    let toks = lex(s)?;
    if toks.is_empty() {
        return Err(Error::Parse("empty polynomial".to_string()));
    }
    let mut p = Parser { toks, pos: 0, vars };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!("unexpected token at {}", p.offset())));
    }
    Ok(out)
}

/// Identifiers appearing in `s`, in order of first appearance.
pub fn identifiers(s: &str) -> Result<Vec<String>> {
    let mut out: Vec<String> = Vec::new();
    for (_, t) in lex(s)? {
        if let Tok::Ident(n) = t {
            if !out.contains(&n) {
                out.push(n);
            }
        }
    }
    Ok(out)
}
