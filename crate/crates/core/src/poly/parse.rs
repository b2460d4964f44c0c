//! Text format: sums of terms `c*z_1^e1*...*z_n^en`.
//!
//! Accepts signed integer coefficients (reduced mod p), `^` powers, `*`
//! products, parentheses, and arbitrary whitespace.

use std::sync::Arc;

use super::polynomial::Polynomial;
use super::ring::Ring;
use crate::error::{Error, Result};

pub fn parse_polynomial(ring: &Arc<Ring>, text: &str) -> Result<Polynomial> {
    let mut p = Parser { ring, src: text.as_bytes(), pos: 0 };
    let f = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return p.err("unexpected trailing input");
    }
    Ok(f)
}

struct Parser<'a> {
    ring: &'a Arc<Ring>,
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Parse { pos: self.pos, msg: msg.to_string() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = Polynomial::zero(self.ring);
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
            let t = self.term()?;
            acc = if sign < 0 { &acc - &t } else { &acc + &t };
            match self.peek() {
                Some(b'+') => sign = 1,
                Some(b'-') => sign = -1,
                _ => return Ok(acc),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.power()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            let f = self.power()?;
            acc = &acc * &f;
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let e = self.integer()?;
            let e = u32::try_from(e).map_err(|_| Error::Parse { pos: self.pos, msg: "exponent too large".into() })?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<u64> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected an integer");
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse::<u64>()
            .map_err(|_| Error::Parse { pos: start, msg: "integer out of range".into() })
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return self.err("expected `)`");
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let v = self.integer()?;
                let p = self.ring.field().modulus();
                Ok(Polynomial::constant(self.ring, (v % p) as i64))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                match self.ring.index_of(name) {
                    Some(i) => Ok(Polynomial::var(self.ring, i)),
                    None => Err(Error::Parse { pos: start, msg: format!("unknown variable `{name}`") }),
                }
            }
            _ => self.err("expected a term"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_canonical_output() {
        let r = Ring::standard(101, 3).unwrap();
        let f = parse_polynomial(&r, "3*z_1^2*z_2 + 100*z_3 + 5").unwrap();
        assert_eq!(f.to_string(), "3*z_1^2*z_2 - z_3 + 5");
        let g = parse_polynomial(&r, &f.to_string()).unwrap();
        assert_eq!(f, g);
        assert_eq!(f.to_canonical_string(), "3*z_1^2*z_2 + 100*z_3 + 5");
        assert_eq!(parse_polynomial(&r, &f.to_canonical_string()).unwrap(), f);
    }

    #[test]
    fn whitespace_signs_and_parens() {
        let r = Ring::standard(101, 2).unwrap();
        let f = parse_polynomial(&r, " - z_1 ^ 2 *z_2+ (z_1 - z_2)^2 ").unwrap();
        let g = parse_polynomial(&r, "100*z_1^2*z_2 + z_1^2 + 99*z_1*z_2 + z_2^2").unwrap();
        assert_eq!(f, g);
    }

    #[test]
    fn reports_bad_input() {
        let r = Ring::standard(101, 2).unwrap();
        assert!(matches!(parse_polynomial(&r, "z_3"), Err(Error::Parse { pos: 0, .. })));
        assert!(matches!(parse_polynomial(&r, "z_1 +"), Err(Error::Parse { .. })));
        assert!(matches!(parse_polynomial(&r, "z_1 z_2"), Err(Error::Parse { .. })));
    }
}
