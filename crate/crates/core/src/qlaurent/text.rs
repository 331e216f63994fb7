//! Text encoding: ascending exponents, `c*q^e` with `q^0` elided and `q^1`
//! written `q`, unit coefficients elided, e.g. `q^-2 + 2 + 3*q`.
//! Rational values render as `(num)/(den)`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::poly::LaurentPoly;
use super::rational::RationalQ;
use crate::error::{Error, Result};

fn write_term(f: &mut fmt::Formatter<'_>, c: &BigInt, e: i64) -> fmt::Result {
    let abs = c.abs();
    if e == 0 {
        return write!(f, "{abs}");
    }
    if !abs.is_one() {
        write!(f, "{abs}*")?;
    }
    if e == 1 {
        write!(f, "q")
    } else {
        write!(f, "q^{e}")
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms().enumerate() {
            match (i, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            write_term(f, c, e)?;
        }
        Ok(())
    }
}

impl fmt::Display for RationalQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom().is_one() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "({})/({})", self.numer(), self.denom())
        }
    }
}

struct Lexer<'a> {
    s: &'a [u8],
    pos: usize,
    base: usize,
}

impl<'a> Lexer<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn err(&self, msg: &str) -> Error {
        Error::parse(self.base + self.pos, msg)
    }

    fn digits(&mut self) -> Option<&'a str> {
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.s[start..self.pos]).unwrap())
    }

    fn exponent(&mut self) -> Result<i64> {
        self.skip_ws();
        let neg = match self.s.get(self.pos) {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        self.skip_ws();
        let d = self.digits().ok_or_else(|| self.err("expected exponent"))?;
        let e: i64 = d.parse().map_err(|_| self.err("exponent out of range"))?;
        Ok(if neg { -e } else { e })
    }

    /// `q` optionally followed by `^e`; assumes the `q` is next.
    fn q_power(&mut self) -> Result<i64> {
        self.pos += 1;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.exponent()
        } else {
            Ok(1)
        }
    }

    fn term(&mut self) -> Result<(i64, BigInt)> {
        match self.peek() {
            Some(b'q') => Ok((self.q_power()?, BigInt::one())),
            Some(c) if c.is_ascii_digit() => {
                let d = self.digits().unwrap();
                let c: BigInt = d.parse().map_err(|_| self.err("bad integer"))?;
                if self.peek() == Some(b'*') {
                    self.pos += 1;
                    if self.peek() != Some(b'q') {
                        return Err(self.err("expected 'q' after '*'"));
                    }
                    Ok((self.q_power()?, c))
                } else if self.peek() == Some(b'q') {
                    Ok((self.q_power()?, c))
                } else {
                    Ok((0, c))
                }
            }
            _ => Err(self.err("expected a term")),
        }
    }

    fn poly(&mut self) -> Result<LaurentPoly> {
        let mut terms = Vec::new();
        let mut sign = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -1
            }
            Some(b'+') => {
                self.pos += 1;
                1
            }
            _ => 1,
        };
        loop {
            let (e, c) = self.term()?;
            terms.push((e, if sign < 0 { -c } else { c }));
            match self.peek() {
                Some(b'+') => sign = 1,
                Some(b'-') => sign = -1,
                _ => break,
            }
            self.pos += 1;
        }
        Ok(LaurentPoly::from_terms(terms))
    }
}

pub(crate) fn parse_laurent_at(s: &str, base: usize) -> Result<LaurentPoly> {
    let mut lx = Lexer {
        s: s.as_bytes(),
        pos: 0,
        base,
    };
    let p = lx.poly()?;
    if lx.peek().is_some() {
        return Err(lx.err("unexpected trailing input"));
    }
    Ok(p)
}

impl FromStr for LaurentPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_laurent_at(s, 0)
    }
}

fn matching_paren(s: &str, open: usize) -> Option<usize> {
    let mut depth = 0usize;
    for (i, ch) in s.char_indices().skip_while(|(i, _)| *i < open) {
        match ch {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth == 0 {
                    return Some(i);
                }
            }
            _ => {}
        }
    }
    None
}

impl FromStr for RationalQ {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let Some(slash) = s.find('/') else {
            return Ok(parse_laurent_at(s, 0)?.into());
        };
        let (num_s, num_at) = strip_parens(&s[..slash], 0)?;
        let (den_s, den_at) = strip_parens(&s[slash + 1..], slash + 1)?;
        let num = parse_laurent_at(num_s, num_at)?;
        let den = parse_laurent_at(den_s, den_at)?;
        RationalQ::new(num, den).map_err(|_| Error::parse(slash, "zero denominator"))
    }
}

fn strip_parens(s: &str, base: usize) -> Result<(&str, usize)> {
    let t = s.trim_start();
    let lead = s.len() - t.len();
    let t = t.trim_end();
    if t.starts_with('(') {
        let close = matching_paren(t, 0).ok_or_else(|| Error::parse(base + lead, "unbalanced '('"))?;
        if close != t.len() - 1 {
            return Err(Error::parse(base + lead + close + 1, "unexpected input after ')'"));
        }
        Ok((&t[1..close], base + lead + 1))
    } else {
        Ok((t, base + lead))
    }
}
