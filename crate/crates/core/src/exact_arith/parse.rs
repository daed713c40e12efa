//! Reader for polynomial / rational-function expressions such as
//! `l14*l23 - l13*l24 + l12*l34` or the serialized form
//! `(1 * l23 * l45 + -1 * l24 * l35) / (1 * l14 * l23)`.

use std::sync::Arc;

use num_bigint::BigInt;
use thiserror::Error;

use super::{ExactRational, RatFunc, SparsePoly, VarSpace};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("unexpected character {0:?} at byte {1}")]
    Unexpected(char, usize),
    #[error("unexpected end of input")]
    Eof,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("expression is not a polynomial")]
    NotPolynomial,
}

pub fn parse_ratfunc(space: &Arc<VarSpace>, src: &str) -> Result<RatFunc, ParseError> {
    let mut p = Parser { src: src.as_bytes(), pos: 0, space };
    let r = p.expr()?;
    p.skip_ws();
    match p.peek() {
        None => Ok(r),
        Some(c) => Err(ParseError::Unexpected(c as char, p.pos)),
    }
}

pub fn parse_poly(space: &Arc<VarSpace>, src: &str) -> Result<SparsePoly, ParseError> {
    let r = parse_ratfunc(space, src)?;
    if !r.is_polynomial() {
        return Err(ParseError::NotPolynomial);
    }
    let c = r.denom().as_constant().unwrap();
    Ok(r.numer().scale(&c.recip()))
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    space: &'a Arc<VarSpace>,
}

impl Parser<'_> {
    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn expr(&mut self) -> Result<RatFunc, ParseError> {
        let mut acc = self.term()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<RatFunc, ParseError> {
        let mut acc = self.factor()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = &acc * &self.factor()?;
                }
                Some(b'/') => {
                    self.pos += 1;
                    let d = self.factor()?;
                    acc = acc.checked_div(&d).map_err(|_| ParseError::DivisionByZero)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<RatFunc, ParseError> {
        self.skip_ws();
        if self.peek() == Some(b'-') {
            self.pos += 1;
            return Ok(-&self.factor()?);
        }
        let base = self.atom()?;
        self.skip_ws();
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let e = self.integer()?;
            let e: u32 = e.try_into().map_err(|_| ParseError::Unexpected('^', self.pos))?;
            let mut out = RatFunc::one(self.space);
            for _ in 0..e {
                out = &out * &base;
            }
            return Ok(out);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<RatFunc, ParseError> {
        self.skip_ws();
        match self.peek() {
            None => Err(ParseError::Eof),
            Some(b'(') => {
                self.pos += 1;
                let r = self.expr()?;
                self.skip_ws();
                match self.peek() {
                    Some(b')') => {
                        self.pos += 1;
                        Ok(r)
                    }
                    Some(c) => Err(ParseError::Unexpected(c as char, self.pos)),
                    None => Err(ParseError::Eof),
                }
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(RatFunc::constant(self.space, ExactRational::from_integer(n)))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.peek().is_some_and(|c| c.is_ascii_alphanumeric()) {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                let idx = self.space.lookup(name).ok_or_else(|| ParseError::UnknownVariable(name.to_string()))?;
                Ok(RatFunc::var(self.space, idx))
            }
            Some(c) => Err(ParseError::Unexpected(c as char, self.pos)),
        }
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return match self.peek() {
                Some(c) => Err(ParseError::Unexpected(c as char, self.pos)),
                None => Err(ParseError::Eof),
            };
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(digits.parse().expect("ascii digits"))
    }
}
