//! Polynomial text grammar:
//!
//! ```text
//! poly   := term (("+"|"-") term)* | "-" term (("+"|"-") term)*
//! term   := coeff ("*" factor)* | factor ("*" factor)*
//! factor := var ("^" uint)?
//! coeff  := uint
//! ```
//!
//! Whitespace is ignored. Juxtaposition (`2x`, `x y`) is rejected.

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MAX_VARS};
use crate::poly::{PolyRing, Polynomial};

#[derive(Debug, Clone, PartialEq)]
enum Tok<'a> {
    Uint(&'a str),
    Ident(&'a str),
    Plus,
    Minus,
    Star,
    Caret,
}

fn lex(text: &str) -> Result<Vec<(usize, Tok<'_>)>> {
    let bytes = text.as_bytes();
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
            b'*' => out.push((start, Tok::Star)),
            b'^' => out.push((start, Tok::Caret)),
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((start, Tok::Uint(&text[start..i])));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(&text[start..i])));
                continue;
            }
            _ => {
                return Err(Error::Syntax {
                    position: start,
                    message: format!(
                        "unexpected character `{}`",
                        text[start..].chars().next().unwrap()
                    ),
                })
            }
        }
        i += 1;
    }
    Ok(out)
}

struct Parser<'a, 'r> {
    toks: Vec<(usize, Tok<'a>)>,
    pos: usize,
    end: usize,
    ring: &'r PolyRing,
}

impl<'a> Parser<'a, '_> {
    fn peek(&self) -> Option<&Tok<'a>> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            position: self.offset(),
            message: message.into(),
        })
    }

    fn coeff(&self, digits: &str) -> u32 {
        let p = self.ring.field().characteristic() as u64;
        digits
            .bytes()
            .fold(0u64, |acc, d| (acc * 10 + (d - b'0') as u64) % p) as u32
    }

    fn factor(&mut self, exps: &mut [u16; MAX_VARS]) -> Result<()> {
        let name = match self.peek() {
            Some(Tok::Ident(n)) => *n,
            _ => return self.err("expected a variable"),
        };
        let idx = self
            .ring
            .var_index(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        self.pos += 1;
        let mut e: u32 = 1;
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            match self.peek() {
                Some(Tok::Uint(d)) => {
                    e = d
                        .parse()
                        .ok()
                        .filter(|&v| v <= u16::MAX as u32)
                        .map_or_else(|| self.err(format!("exponent `{d}` is too large")), Ok)?;
                    self.pos += 1;
                }
                _ => return self.err("expected an exponent after `^`"),
            }
        }
        let total = exps[idx] as u32 + e;
        if total > u16::MAX as u32 {
            return self.err("exponent overflow");
        }
        exps[idx] = total as u16;
        Ok(())
    }

    fn term(&mut self) -> Result<(Monomial, u32)> {
        let mut exps = [0u16; MAX_VARS];
        let mut c = 1;
        match self.peek() {
            Some(Tok::Uint(d)) => {
                c = self.coeff(d);
                self.pos += 1;
            }
            Some(Tok::Ident(_)) => self.factor(&mut exps)?,
            _ => return self.err("expected a coefficient or variable"),
        }
        while self.peek() == Some(&Tok::Star) {
            self.pos += 1;
            self.factor(&mut exps)?;
        }
        Ok((Monomial::from_exponents(&exps[..self.ring.nvars()])?, c))
    }

    fn poly(&mut self) -> Result<Polynomial> {
        let fp = *self.ring.field();
        let mut terms = Vec::new();
        let mut negate = false;
        if self.peek() == Some(&Tok::Minus) {
            negate = true;
            self.pos += 1;
        }
        loop {
            let (m, c) = self.term()?;
            terms.push((m, if negate { fp.neg(c) } else { c }));
            match self.peek() {
                None => break,
                Some(Tok::Plus) => negate = false,
                Some(Tok::Minus) => negate = true,
                Some(_) => return self.err("expected `+`, `-`, `*` or end of input"),
            }
            self.pos += 1;
        }
        Ok(self.ring.from_terms(terms))
    }
}

/// Parses `text` into a canonical polynomial of `ring`.
pub fn parse_polynomial(text: &str, ring: &PolyRing) -> Result<Polynomial> {
    let toks = lex(text)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: text.len(),
        ring,
    };
    p.poly()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::Monomial;

    fn ring() -> PolyRing {
        PolyRing::with_vars(32003, &["x", "y", "z"]).unwrap()
    }

    #[test]
    fn literal_transcription() {
        let r = ring();
        let f = r.parse("x^2 + x*y").unwrap();
        let expected = r.from_terms([
            (Monomial::from_exponents(&[2, 0, 0]).unwrap(), 1),
            (Monomial::from_exponents(&[1, 1, 0]).unwrap(), 1),
        ]);
        assert_eq!(f, expected);
    }

    #[test]
    fn zero_and_cancellation() {
        let r = ring();
        assert!(r.parse("0").unwrap().is_zero());
        assert!(r.parse("x - x").unwrap().is_zero());
        // coefficient divisible by p drops silently
        assert!(r.parse("32003*x").unwrap().is_zero());
        assert!(r.parse("  - 3 * x^0 + 3").unwrap().is_zero());
    }

    #[test]
    fn reports_positions() {
        let r = ring();
        match r.parse("x + 2x") {
            Err(Error::Syntax { position, .. }) => assert_eq!(position, 5),
            other => panic!("unexpected {other:?}"),
        }
        match r.parse("x y") {
            Err(Error::Syntax { position, .. }) => assert_eq!(position, 2),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            r.parse(""),
            Err(Error::Syntax { position: 0, .. })
        ));
        assert!(matches!(r.parse("x +"), Err(Error::Syntax { .. })));
        assert!(matches!(r.parse("x^"), Err(Error::Syntax { .. })));
        assert!(matches!(r.parse("2*3"), Err(Error::Syntax { .. })));
        assert!(matches!(
            r.parse("x # y"),
            Err(Error::Syntax { position: 2, .. })
        ));
        assert!(matches!(r.parse("--x"), Err(Error::Syntax { .. })));
    }

    #[test]
    fn unknown_variable() {
        let r = ring();
        assert_eq!(r.parse("x + w"), Err(Error::UnknownVariable("w".into())));
    }

    #[test]
    fn repeated_factors_accumulate() {
        let r = ring();
        assert_eq!(r.parse("x*x^2*y").unwrap(), r.parse("x^3*y").unwrap());
        assert_eq!(r.parse("5*x - 7*x").unwrap(), r.parse("-2*x").unwrap());
    }
}
