//! Text form of Laurent polynomials: `poly := term (("+"|"-") term)*`,
//! `term := int? ("q" ("^" int)?)?`. A leading sign is accepted.

use std::str::FromStr;

use num_bigint::BigInt;

use super::{LaurentPoly, QArithError};

/// Byte cursor shared by the small hand-written parsers in this crate.
#[derive(Debug, Clone)]
pub(crate) struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
    /// Added to reported positions when parsing a substring.
    base: usize,
}

impl<'a> Cursor<'a> {
    pub(crate) fn new(src: &'a str) -> Self {
        Self::with_base(src, 0)
    }

    pub(crate) fn with_base(src: &'a str, base: usize) -> Self {
        Self {
            src: src.as_bytes(),
            pos: 0,
            base,
        }
    }

    pub(crate) fn pos(&self) -> usize {
        self.base + self.pos
    }

    pub(crate) fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    pub(crate) fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    pub(crate) fn peek_at(&self, k: usize) -> Option<u8> {
        self.src.get(self.pos + k).copied()
    }

    pub(crate) fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    pub(crate) fn bump(&mut self) -> Option<u8> {
        let c = self.peek()?;
        self.pos += 1;
        Some(c)
    }

    pub(crate) fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    pub(crate) fn eat_str(&mut self, s: &str) -> bool {
        if self.src[self.pos..].starts_with(s.as_bytes()) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    pub(crate) fn rest(&self) -> &'a str {
        std::str::from_utf8(&self.src[self.pos..]).unwrap_or("")
    }

    /// Unsigned decimal digits, if any.
    pub(crate) fn digits(&mut self) -> Option<&'a str> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.src[start..self.pos]).unwrap())
    }

    /// Optionally signed integer.
    pub(crate) fn int(&mut self) -> Option<i64> {
        let save = self.pos;
        let neg = self.eat(b'-');
        match self.digits().and_then(|d| d.parse::<i64>().ok()) {
            Some(v) => Some(if neg { -v } else { v }),
            None => {
                self.pos = save;
                None
            }
        }
    }

    pub(crate) fn error(&self, message: impl Into<String>) -> QArithError {
        QArithError::Parse {
            position: self.pos(),
            message: message.into(),
        }
    }
}

pub(crate) fn parse_poly(cur: &mut Cursor<'_>) -> Result<LaurentPoly, QArithError> {
    let mut acc = LaurentPoly::zero();
    cur.skip_ws();
    let mut negate = if cur.eat(b'-') {
        true
    } else {
        cur.eat(b'+');
        false
    };
    loop {
        cur.skip_ws();
        let term = parse_term(cur)?;
        if negate {
            acc -= &term;
        } else {
            acc += &term;
        }
        cur.skip_ws();
        match cur.peek() {
            Some(b'+') => negate = false,
            Some(b'-') => negate = true,
            _ => break,
        }
        cur.bump();
    }
    Ok(acc)
}

fn parse_term(cur: &mut Cursor<'_>) -> Result<LaurentPoly, QArithError> {
    let coeff = cur.digits().map(|d| d.parse::<BigInt>().expect("digits"));
    cur.skip_ws();
    let exp = if cur.eat(b'q') {
        cur.skip_ws();
        if cur.eat(b'^') {
            cur.skip_ws();
            Some(cur.int().ok_or_else(|| cur.error("expected exponent after '^'"))?)
        } else {
            Some(1)
        }
    } else {
        None
    };
    match (coeff, exp) {
        (None, None) => Err(cur.error("expected a term")),
        (c, e) => Ok(LaurentPoly::monomial(
            c.unwrap_or_else(|| BigInt::from(1)),
            e.unwrap_or(0),
        )),
    }
}

impl FromStr for LaurentPoly {
    type Err = QArithError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut cur = Cursor::new(s);
        let p = parse_poly(&mut cur)?;
        cur.skip_ws();
        if !cur.at_end() {
            return Err(cur.error("unexpected trailing input"));
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_canonical_forms() {
        let p: LaurentPoly = "q^2 + 1 - q^-2".parse().unwrap();
        assert_eq!(
            p,
            LaurentPoly::from_terms([(2, 1), (0, 1), (-2, -1)])
        );
        let p: LaurentPoly = "-3q + 2q^-1".parse().unwrap();
        assert_eq!(p, LaurentPoly::from_terms([(1, -3), (-1, 2)]));
        assert_eq!("0".parse::<LaurentPoly>().unwrap(), LaurentPoly::zero());
        assert_eq!("q + q".parse::<LaurentPoly>().unwrap().to_string(), "2q");
    }

    #[test]
    fn reports_position_on_error() {
        match "q + ^".parse::<LaurentPoly>() {
            Err(QArithError::Parse { position, .. }) => assert_eq!(position, 4),
            other => panic!("unexpected {other:?}"),
        }
        assert!("q^".parse::<LaurentPoly>().is_err());
        assert!("q q".parse::<LaurentPoly>().is_err());
    }
}
