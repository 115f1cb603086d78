//! Recursive-descent parser for rational expressions in `q`.
//!
//! Grammar (juxtaposition is multiplication, `^` takes an integer exponent):
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary | atom-start unary)*
//! unary  := ('-' | '+') unary | power
//! power  := atom ('^' '-'? integer)?
//! atom   := integer | 'q' | '(' expr ')'
//! ```

use num_bigint::BigInt;

use super::{Field, Rational, RationalFunction};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Q,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let bytes = s.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' => {}
            '0'..='9' => {
                let start = i;
                while i + 1 < bytes.len() && bytes[i + 1].is_ascii_digit() {
                    i += 1;
                }
                out.push(Tok::Int(s[start..=i].parse().expect("digits")));
            }
            'q' => out.push(Tok::Q),
            '+' => out.push(Tok::Plus),
            '-' => out.push(Tok::Minus),
            '*' => out.push(Tok::Star),
            '/' => out.push(Tok::Slash),
            '^' => out.push(Tok::Caret),
            '(' => out.push(Tok::LParen),
            ')' => out.push(Tok::RParen),
            _ => return Err(Error::Parse(format!("unexpected character `{c}` in `{s}`"))),
        }
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    src: &'a str,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} in `{}`", self.src))
    }

    fn expr(&mut self) -> Result<RationalFunction> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = acc.add_ref(&self.term()?);
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = acc.sub_ref(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<RationalFunction> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    acc = acc.mul_ref(&self.unary()?);
                }
                Some(Tok::Slash) => {
                    self.bump();
                    let d = self.unary()?;
                    acc = acc.checked_div(&d)?;
                }
                Some(Tok::Int(_) | Tok::Q | Tok::LParen) => {
                    acc = acc.mul_ref(&self.unary()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<RationalFunction> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.bump();
                Ok(-self.unary()?)
            }
            Some(Tok::Plus) => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<RationalFunction> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.bump();
        let neg = if self.peek() == Some(&Tok::Minus) {
            self.bump();
            true
        } else {
            false
        };
        let e = match self.bump() {
            Some(Tok::Int(n)) => i64::try_from(&n).map_err(|_| self.err("exponent too large"))?,
            _ => return Err(self.err("expected integer exponent")),
        };
        base.pow(if neg { -e } else { e })
    }

    fn atom(&mut self) -> Result<RationalFunction> {
        match self.bump() {
            Some(Tok::Int(n)) => Ok(RationalFunction::constant(Rational::from_integer(n))),
            Some(Tok::Q) => Ok(RationalFunction::q()),
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some(Tok::RParen) => Ok(inner),
                    _ => Err(self.err("unbalanced parenthesis")),
                }
            }
            _ => Err(self.err("unexpected token")),
        }
    }
}

pub(super) fn parse_rational_function(s: &str) -> Result<RationalFunction> {
    let toks = lex(s)?;
    if toks.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let mut p = Parser {
        toks,
        pos: 0,
        src: s,
    };
    let v = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(p.err("trailing input"));
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precedence() {
        let a = parse_rational_function("1/2*q^2").unwrap();
        let b = parse_rational_function("q^2/2").unwrap();
        assert_eq!(a, b);
        let c = parse_rational_function("2q + 3(q-1)").unwrap();
        assert_eq!(c, parse_rational_function("5*q-3").unwrap());
        let d = parse_rational_function("-q^2").unwrap();
        assert_eq!(d, parse_rational_function("0-q*q").unwrap());
    }

    #[test]
    fn rejects_garbage() {
        for s in ["", "q+", "(q", "x", "q^q", "1/0", "1/(q-q)"] {
            assert!(parse_rational_function(s).is_err(), "{s}");
        }
    }
}
