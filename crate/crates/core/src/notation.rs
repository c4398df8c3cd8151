//! Text notation for scalars, series and algebra entries.
//!
//! Polynomials are written as sums of terms like `3/2*u^2*v`, `-(1 + z)*x*y`
//! or `2u`. Products are evaluated left to right in the target ring, so the
//! same grammar serves the noncommutative skew algebra.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::cyclotomic::{fmt_rational, CycScalar, Rational};
use crate::error::{Error, Result};

/// Join `(coefficient, monomial)` pairs into a polynomial string.
/// An empty monomial string stands for 1.
pub fn format_terms(terms: impl IntoIterator<Item = (CycScalar, String)>) -> String {
    let mut out = String::new();
    for (c, mono) in terms {
        if c.is_zero() {
            continue;
        }
        let (neg, body) = match c.as_rational() {
            Some(q) => {
                let mag = q.abs();
                let body = if mono.is_empty() {
                    fmt_rational(&mag)
                } else if num_traits::One::is_one(&mag) {
                    mono
                } else {
                    alloc::format!("{}*{}", fmt_rational(&mag), mono)
                };
                (q.is_negative(), body)
            }
            None => {
                let body = if mono.is_empty() { alloc::format!("({c})") } else { alloc::format!("({c})*{mono}") };
                (false, body)
            }
        };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else if neg {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// `u^2*v*x` style monomial; empty for the constant monomial.
pub fn format_monomial(factors: &[(&str, u32)]) -> String {
    let parts: Vec<String> = factors
        .iter()
        .filter(|(_, k)| *k > 0)
        .map(|(name, k)| if *k == 1 { name.to_string() } else { alloc::format!("{name}^{k}") })
        .collect();
    parts.join("*")
}

/// A ring the expression parser can evaluate into.
pub trait ExprRing {
    type Elem: Clone;
    fn constant(&self, q: Rational) -> Self::Elem;
    fn variable(&self, name: char) -> Option<Self::Elem>;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn pow(&self, a: &Self::Elem, k: u32) -> Self::Elem {
        let mut acc = self.constant(Rational::from_integer(BigInt::from(1)));
        for _ in 0..k {
            acc = self.mul(&acc, a);
        }
        acc
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Var(char),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(s: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' => {
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = s[start..i].parse().map_err(|_| Error::Parse { pos: start, msg: "bad integer".into() })?;
                out.push((start, Tok::Num(n)));
            }
            'a'..='z' => {
                out.push((i, Tok::Var(c)));
                i += 1;
            }
            '+' => {
                out.push((i, Tok::Plus));
                i += 1;
            }
            '-' => {
                out.push((i, Tok::Minus));
                i += 1;
            }
            '*' => {
                out.push((i, Tok::Star));
                i += 1;
            }
            '/' => {
                out.push((i, Tok::Slash));
                i += 1;
            }
            '^' => {
                out.push((i, Tok::Caret));
                i += 1;
            }
            '(' => {
                out.push((i, Tok::LParen));
                i += 1;
            }
            ')' => {
                out.push((i, Tok::RParen));
                i += 1;
            }
            _ => return Err(Error::Parse { pos: i, msg: alloc::format!("unexpected character {c:?}") }),
        }
    }
    Ok(out)
}

struct Parser<'a, R: ExprRing> {
    ring: &'a R,
    toks: Vec<(usize, Tok)>,
    pos: usize,
    len: usize,
}

impl<R: ExprRing> Parser<'_, R> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.len, |(p, _)| *p)
    }

    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Parse { pos: self.here(), msg: msg.into() })
    }

    fn expr(&mut self) -> Result<R::Elem> {
        let mut acc = match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                let t = self.term()?;
                self.ring.neg(&t)
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    let t = self.signed_term()?;
                    acc = self.ring.add(&acc, &t);
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    let t = self.signed_term()?;
                    acc = self.ring.add(&acc, &self.ring.neg(&t));
                }
                _ => return Ok(acc),
            }
        }
    }

    // allows `a + -3*u`
    fn signed_term(&mut self) -> Result<R::Elem> {
        if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            let t = self.term()?;
            Ok(self.ring.neg(&t))
        } else {
            self.term()
        }
    }

    fn term(&mut self) -> Result<R::Elem> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    let f = self.factor()?;
                    acc = self.ring.mul(&acc, &f);
                }
                Some(Tok::Num(_)) | Some(Tok::Var(_)) | Some(Tok::LParen) => {
                    let f = self.factor()?;
                    acc = self.ring.mul(&acc, &f);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<R::Elem> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            match self.toks.get(self.pos).cloned() {
                Some((_, Tok::Num(n))) => {
                    self.pos += 1;
                    let k = u32::try_from(n).or_else(|_| self.err("exponent too large"))?;
                    Ok(self.ring.pow(&base, k))
                }
                _ => self.err("expected exponent"),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<R::Elem> {
        match self.toks.get(self.pos).cloned() {
            Some((_, Tok::Num(n))) => {
                self.pos += 1;
                if self.peek() == Some(&Tok::Slash) {
                    self.pos += 1;
                    match self.toks.get(self.pos).cloned() {
                        Some((p, Tok::Num(d))) => {
                            self.pos += 1;
                            if d == BigInt::from(0) {
                                return Err(Error::Parse { pos: p, msg: "zero denominator".into() });
                            }
                            Ok(self.ring.constant(Rational::new(n, d)))
                        }
                        _ => self.err("expected denominator"),
                    }
                } else {
                    Ok(self.ring.constant(Rational::from_integer(n)))
                }
            }
            Some((p, Tok::Var(c))) => {
                self.pos += 1;
                self.ring.variable(c).ok_or(Error::Parse { pos: p, msg: alloc::format!("unknown variable {c:?}") })
            }
            Some((_, Tok::LParen)) => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return self.err("expected ')'");
                }
                self.pos += 1;
                Ok(e)
            }
            _ => self.err("expected number, variable or '('"),
        }
    }
}

pub fn parse_expr<R: ExprRing>(ring: &R, s: &str) -> Result<R::Elem> {
    let toks = tokenize(s)?;
    let mut p = Parser { ring, toks, pos: 0, len: s.len() };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(e)
}

/// Scalars of Q(ζ) written in the variable `z`.
impl ExprRing for crate::cyclotomic::CycField {
    type Elem = CycScalar;
    fn constant(&self, q: Rational) -> CycScalar {
        self.from_rational(q)
    }
    fn variable(&self, name: char) -> Option<CycScalar> {
        (name == 'z').then(|| self.zeta())
    }
    fn add(&self, a: &CycScalar, b: &CycScalar) -> CycScalar {
        a + b
    }
    fn mul(&self, a: &CycScalar, b: &CycScalar) -> CycScalar {
        crate::cyclotomic::CycField::mul(self, a, b)
    }
    fn neg(&self, a: &CycScalar) -> CycScalar {
        -a
    }
    fn pow(&self, a: &CycScalar, k: u32) -> CycScalar {
        crate::cyclotomic::CycField::pow(self, a, k as u64)
    }
}

pub fn parse_scalar(field: &crate::cyclotomic::CycField, s: &str) -> Result<CycScalar> {
    parse_expr(field, s)
}
