use super::{Elem, Ring};
use crate::error::{Error, Result};
use num_bigint::BigInt;

/// Recursive-descent parser for `+ - * / ^` expressions over a ring.
/// Division is only by units.
pub(super) fn parse_expr(ring: &Ring, s: &str) -> Result<Elem> {
    let tokens = tokenize(s)?;
    let mut p = Parser { ring, tokens, pos: 0 };
    let e = p.expr()?;
    if p.pos != p.tokens.len() {
        return Err(Error::Parse(format!("trailing input in {s:?}")));
    }
    Ok(e)
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(String),
    Ident(String),
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            out.push(Tok::Num(chars[start..i].iter().collect()));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Tok::Ident(chars[start..i].iter().collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else {
            return Err(Error::Parse(format!("unexpected character {c:?} in {s:?}")));
        }
    }
    if out.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    Ok(out)
}

struct Parser<'a> {
    ring: &'a Ring,
    tokens: Vec<Tok>,
    pos: usize,
}

impl Parser<'_> {
    fn peek_op(&self) -> Option<char> {
        match self.tokens.get(self.pos) {
            Some(Tok::Op(c)) => Some(*c),
            _ => None,
        }
    }

    fn expr(&mut self) -> Result<Elem> {
        let mut acc = self.term()?;
        while let Some(c @ ('+' | '-')) = self.peek_op() {
            self.pos += 1;
            let t = self.term()?;
            acc = if c == '+' { acc + t } else { acc - t };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Elem> {
        let mut acc = self.unary()?;
        while let Some(c @ ('*' | '/')) = self.peek_op() {
            self.pos += 1;
            let t = self.unary()?;
            if c == '*' {
                acc = acc * t;
            } else {
                let inv = t
                    .inverse()
                    .ok_or_else(|| Error::NotUnit(format!("cannot divide by {t}")))?;
                acc = acc * inv;
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Elem> {
        if self.peek_op() == Some('-') {
            self.pos += 1;
            return Ok(-self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<Elem> {
        let base = self.atom()?;
        if self.peek_op() == Some('^') {
            self.pos += 1;
            match self.tokens.get(self.pos) {
                Some(Tok::Num(n)) => {
                    let e: u32 = n
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad exponent {n}")))?;
                    self.pos += 1;
                    return Ok(base.pow(e));
                }
                _ => return Err(Error::Parse("exponent must be a literal".into())),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Elem> {
        let tok = self
            .tokens
            .get(self.pos)
            .cloned()
            .ok_or_else(|| Error::Parse("unexpected end of expression".into()))?;
        self.pos += 1;
        match tok {
            Tok::Num(n) => {
                let v: BigInt = n.parse().map_err(|_| Error::Parse(format!("bad number {n}")))?;
                Ok(self.ring.from_bigint(&v))
            }
            Tok::Ident(name) => self.ring.var(&name),
            Tok::Op('(') => {
                let e = self.expr()?;
                if self.peek_op() != Some(')') {
                    return Err(Error::Parse("missing )".into()));
                }
                self.pos += 1;
                Ok(e)
            }
            Tok::Op(c) => Err(Error::Parse(format!("unexpected {c:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precedence() {
        let r = Ring::zmod(9).unwrap();
        assert_eq!(r.parse_elem("2+3*4").unwrap().residue(), Some(5));
        assert_eq!(r.parse_elem("-2^2").unwrap().residue(), Some(5));
        assert_eq!(r.parse_elem("(1+2)*3").unwrap().residue(), Some(0));
        assert_eq!(r.parse_elem("1/2").unwrap().residue(), Some(5));
        assert!(r.parse_elem("1/3").is_err());
        assert!(r.parse_elem("x").is_err());
        assert!(r.parse_elem("2 3").is_err());
    }

    #[test]
    fn dyadic_fractions() {
        let r = Ring::dyadic();
        assert_eq!(r.parse_elem("3/2^2").unwrap().to_string(), "3/2^2");
        assert_eq!(r.parse_elem("6/4").unwrap().to_string(), "3/2^1");
    }
}
