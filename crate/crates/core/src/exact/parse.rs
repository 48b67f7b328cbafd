use num_bigint::BigInt;

use super::{MultiPoly, Rational, Var};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(Rational),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn lex(s: &str) -> Result<Vec<Tok>> {
    let b = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < b.len() {
        let ch = b[i];
        match ch {
            b' ' | b'\t' | b'\n' => i += 1,
            b'+' => {
                out.push(Tok::Plus);
                i += 1;
            }
            b'-' => {
                out.push(Tok::Minus);
                i += 1;
            }
            b'*' => {
                out.push(Tok::Star);
                i += 1;
            }
            b'^' => {
                out.push(Tok::Caret);
                i += 1;
            }
            b'(' => {
                out.push(Tok::LParen);
                i += 1;
            }
            b')' => {
                out.push(Tok::RParen);
                i += 1;
            }
            b'0'..=b'9' => {
                let start = i;
                while i < b.len() && b[i].is_ascii_digit() {
                    i += 1;
                }
                let num: BigInt = s[start..i].parse().unwrap();
                // `p/q` with digits on both sides is a single rational literal
                if i + 1 < b.len() && b[i] == b'/' && b[i + 1].is_ascii_digit() {
                    let ds = i + 1;
                    i += 1;
                    while i < b.len() && b[i].is_ascii_digit() {
                        i += 1;
                    }
                    let den: BigInt = s[ds..i].parse().unwrap();
                    if den == BigInt::from(0) {
                        return Err(Error::Parse("zero denominator".into()));
                    }
                    out.push(Tok::Num(Rational::new(num, den)));
                } else {
                    out.push(Tok::Num(Rational::from_integer(num)));
                }
            }
            c if c.is_ascii_alphabetic() => {
                let start = i;
                while i < b.len() && b[i].is_ascii_alphanumeric() {
                    i += 1;
                }
                out.push(Tok::Ident(s[start..i].to_string()));
            }
            _ => return Err(Error::Parse(format!("unexpected character {:?}", ch as char))),
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<MultiPoly> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = acc + self.term()?;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = acc - self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly> {
        let mut acc = self.unary()?;
        while self.peek() == Some(&Tok::Star) {
            self.pos += 1;
            acc = acc * self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<MultiPoly> {
        if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            return Ok(-self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<MultiPoly> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            match self.next() {
                Some(Tok::Num(n)) if n.is_integer() => {
                    let e: u32 = n
                        .to_integer()
                        .try_into()
                        .map_err(|_| Error::Parse("exponent out of range".into()))?;
                    return Ok(base.pow(e));
                }
                _ => return Err(Error::Parse("expected a natural exponent after '^'".into())),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<MultiPoly> {
        match self.next() {
            Some(Tok::Num(n)) => Ok(MultiPoly::constant(n)),
            Some(Tok::Ident(name)) => Ok(MultiPoly::var(Var::parse(&name)?)),
            Some(Tok::LParen) => {
                let e = self.expr()?;
                match self.next() {
                    Some(Tok::RParen) => Ok(e),
                    _ => Err(Error::Parse("missing ')'".into())),
                }
            }
            other => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

/// Parses a polynomial expression such as `x^8`, `c0^2 + l1` or
/// `-1/2*c0*x + 3`. Variables are `x`, `t`, `c<i>` and `l<i>`.
pub fn parse_poly(s: &str) -> Result<MultiPoly> {
    let toks = lex(s)?;
    if toks.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let mut p = Parser { toks, pos: 0 };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!("trailing input in {s:?}")));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_basic_forms() {
        assert_eq!(parse_poly("x^8").unwrap(), MultiPoly::x().pow(8));
        assert_eq!(parse_poly("(x+1)^2").unwrap().to_string(), "x^2 + 2*x + 1");
        assert_eq!(parse_poly("-3/6*c0").unwrap().to_string(), "-1/2*c0");
        assert_eq!(parse_poly("2 - -1").unwrap(), MultiPoly::from_int(3));
        assert!(parse_poly("x^").is_err());
        assert!(parse_poly("x +").is_err());
        assert!(parse_poly("l0").is_err());
        assert!(parse_poly("").is_err());
        assert!(parse_poly("(x").is_err());
    }
}
