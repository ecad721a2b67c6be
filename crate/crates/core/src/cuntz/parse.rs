//! Parser for expressions such as `s1 s2* + 2 s1 s1 s2* s1* - 1/2`.
//!
//! ```text
//! expr   := ['+' | '-'] term (('+' | '-') term)*
//! term   := factor+
//! factor := integer ['/' integer] | 's' index ['*'] | '(' expr ')'
//! ```
//!
//! Juxtaposition is multiplication and `*` directly after a generator
//! denotes its adjoint.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::{CuntzElement, PathWord};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Slash,
    Plus,
    Minus,
    Open,
    Close,
    Gen { index: u32, adjoint: bool },
}

fn tokenize(src: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => out.push((start, Tok::Plus)),
            b'-' => out.push((start, Tok::Minus)),
            b'/' => out.push((start, Tok::Slash)),
            b'(' => out.push((start, Tok::Open)),
            b')' => out.push((start, Tok::Close)),
            b'0'..=b'9' => {
                while i + 1 < bytes.len() && bytes[i + 1].is_ascii_digit() {
                    i += 1;
                }
                let n = BigInt::from_str(&src[start..=i]).expect("digits");
                out.push((start, Tok::Int(n)));
            }
            b's' | b'S' => {
                let digits_start = i + 1;
                let mut j = digits_start;
                while j < bytes.len() && bytes[j].is_ascii_digit() {
                    j += 1;
                }
                if j == digits_start {
                    return Err(Error::parse(start, "expected a generator index after 's'"));
                }
                let index: u32 = src[digits_start..j]
                    .parse()
                    .map_err(|_| Error::parse(digits_start, "generator index too large"))?;
                let adjoint = j < bytes.len() && bytes[j] == b'*';
                i = if adjoint { j } else { j - 1 };
                out.push((start, Tok::Gen { index, adjoint }));
            }
            b'*' => return Err(Error::parse(start, "'*' must directly follow a generator")),
            _ => {
                let ch = src[start..].chars().next().unwrap_or('?');
                return Err(Error::parse(start, format!("unexpected character '{ch}'")));
            }
        }
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    toks: &'a [(usize, Tok)],
    pos: usize,
    end: usize,
    base: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn expr(&mut self) -> Result<CuntzElement> {
        let mut acc = CuntzElement::zero(self.base)?;
        let mut negate = match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                true
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        loop {
            let t = self.term()?;
            acc = if negate { acc.sub(&t)? } else { acc.add(&t)? };
            match self.peek() {
                Some(Tok::Plus) => negate = false,
                Some(Tok::Minus) => negate = true,
                _ => return Ok(acc),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<CuntzElement> {
        let mut acc: Option<CuntzElement> = None;
        while let Some(f) = self.factor()? {
            acc = Some(match acc {
                Some(a) => a.mul(&f)?,
                None => f,
            });
        }
        acc.ok_or_else(|| Error::parse(self.offset(), "expected a term"))
    }

    fn factor(&mut self) -> Result<Option<CuntzElement>> {
        let at = self.offset();
        let Some(tok) = self.peek().cloned() else {
            return Ok(None);
        };
        match tok {
            Tok::Int(n) => {
                self.pos += 1;
                let q = if self.peek() == Some(&Tok::Slash) {
                    self.pos += 1;
                    let den_at = self.offset();
                    match self.peek().cloned() {
                        Some(Tok::Int(m)) if !m.is_zero() => {
                            self.pos += 1;
                            BigRational::new(n, m)
                        }
                        Some(Tok::Int(_)) => return Err(Error::parse(den_at, "zero denominator")),
                        _ => return Err(Error::parse(den_at, "expected a denominator")),
                    }
                } else {
                    BigRational::from_integer(n)
                };
                Ok(Some(CuntzElement::scalar(self.base, q)?))
            }
            Tok::Gen { index, adjoint } => {
                self.pos += 1;
                if index == 0 || index as usize > self.base {
                    return Err(Error::parse(
                        at,
                        format!("generator s{index} outside s1..s{}", self.base),
                    ));
                }
                let w = PathWord::new(vec![index]);
                let (mu, nu) = if adjoint {
                    (PathWord::empty(), w)
                } else {
                    (w, PathWord::empty())
                };
                Ok(Some(CuntzElement::monomial(
                    self.base,
                    mu,
                    nu,
                    BigRational::from_integer(1.into()),
                )?))
            }
            Tok::Open => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(&Tok::Close) {
                    return Err(Error::parse(self.offset(), "expected ')'"));
                }
                self.pos += 1;
                Ok(Some(inner))
            }
            Tok::Slash => Err(Error::parse(at, "'/' must follow an integer")),
            Tok::Plus | Tok::Minus | Tok::Close => Ok(None),
        }
    }
}

/// Parses an expression over the Cuntz algebra `O_base`.
pub fn parse_element(base: usize, src: &str) -> Result<CuntzElement> {
    CuntzElement::zero(base)?;
    let toks = tokenize(src)?;
    if toks.is_empty() {
        return Err(Error::parse(0, "empty expression"));
    }
    let mut p = Parser {
        toks: &toks,
        pos: 0,
        end: src.len(),
        base,
    };
    let e = p.expr()?;
    if p.pos != toks.len() {
        return Err(Error::parse(p.offset(), "unexpected token"));
    }
    Ok(e)
}
