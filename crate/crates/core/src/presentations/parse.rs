//! Text syntax for elements:
//!
//! ```text
//! element := "0" | ["+"|"-"] term { ("+"|"-") term }
//! term    := [ "(" poly ")" [ "/" "(" poly ")" ] ] gen { gen }
//! gen     := "E" ["-"] int [ "^(" int ")" ] | "Ed" | "E-d"
//!          | "1_(" int { "," int } ")" | "R" | "R^-1" | "1"
//! ```
//!
//! A lone `1` is the empty word. Coefficient fractions are accepted so that
//! every rendered element parses back.

use crate::qarith::parse::{parse_poly, Cursor};
use crate::qarith::RatFunc;
use crate::weightlat::{Color, Composition};

use super::{Element, Generator, PresentationError, Sign, Word};

fn err(cur: &Cursor<'_>, message: impl Into<String>) -> PresentationError {
    PresentationError::Parse {
        position: cur.pos(),
        message: message.into(),
    }
}

/// Parses an element of the rank-`n`, degree-`r` algebra.
pub fn parse_element(text: &str, n: usize, r: u32) -> Result<Element, PresentationError> {
    let mut cur = Cursor::new(text);
    cur.skip_ws();
    if cur.rest().trim() == "0" {
        return Ok(Element::zero());
    }
    let mut out = Element::zero();
    let mut negate = if cur.eat(b'-') {
        true
    } else {
        cur.eat(b'+');
        false
    };
    loop {
        cur.skip_ws();
        let (coeff, word) = parse_term(&mut cur, n, r)?;
        out.add_term(word, if negate { -&coeff } else { coeff });
        cur.skip_ws();
        match cur.peek() {
            None => break,
            Some(b'+') => negate = false,
            Some(b'-') => negate = true,
            Some(_) => return Err(err(&cur, "expected '+', '-' or end of input")),
        }
        cur.bump();
    }
    Ok(out)
}

fn parse_term(
    cur: &mut Cursor<'_>,
    n: usize,
    r: u32,
) -> Result<(RatFunc, Word), PresentationError> {
    let mut coeff = RatFunc::one();
    if cur.eat(b'(') {
        let num = parse_poly(cur)?;
        cur.skip_ws();
        if !cur.eat(b')') {
            return Err(err(cur, "expected ')' after coefficient"));
        }
        coeff = RatFunc::from(num);
        cur.skip_ws();
        if cur.eat(b'/') {
            cur.skip_ws();
            let start = cur.clone();
            if !cur.eat(b'(') {
                return Err(err(cur, "expected '(' after '/'"));
            }
            let den = parse_poly(cur)?;
            cur.skip_ws();
            if !cur.eat(b')') {
                return Err(err(cur, "expected ')' after denominator"));
            }
            coeff = coeff
                .div(&RatFunc::from(den))
                .map_err(|_| err(&start, "zero denominator"))?;
        }
        cur.skip_ws();
    }
    let mut gens = Vec::new();
    let mut identity = false;
    loop {
        cur.skip_ws();
        match cur.peek() {
            Some(b'E') | Some(b'R') => gens.push(parse_gen(cur, n, r)?),
            Some(b'1') => {
                if cur.peek_at(1) == Some(b'_') {
                    gens.push(parse_gen(cur, n, r)?);
                } else {
                    cur.bump();
                    identity = true;
                }
            }
            _ => break,
        }
    }
    if gens.is_empty() && !identity {
        return Err(err(cur, "expected a generator"));
    }
    Ok((coeff, Word::new(gens)))
}

fn color(cur: &mut Cursor<'_>, n: usize) -> Result<Color, PresentationError> {
    let position = cur.pos();
    let Some(digits) = cur.digits() else {
        return Err(err(cur, "expected a color index"));
    };
    let i: i64 = digits
        .parse()
        .map_err(|_| PresentationError::Parse {
            position,
            message: "color index too large".into(),
        })?;
    if i < 1 || i > n as i64 {
        return Err(PresentationError::UnknownColor {
            color: i,
            rank: n,
            position,
        });
    }
    Ok(Color::new(i, n))
}

fn parse_gen(cur: &mut Cursor<'_>, n: usize, r: u32) -> Result<Generator, PresentationError> {
    let start = cur.pos();
    if cur.eat_str("R^-1") {
        return Ok(Generator::RShift(Sign::Minus));
    }
    if cur.eat(b'R') {
        return Ok(Generator::RShift(Sign::Plus));
    }
    if cur.eat_str("1_(") {
        let mut entries = Vec::new();
        loop {
            cur.skip_ws();
            let x = cur.int().ok_or_else(|| err(cur, "expected an integer"))?;
            entries.push(x);
            cur.skip_ws();
            if cur.eat(b')') {
                break;
            }
            if !cur.eat(b',') {
                return Err(err(cur, "expected ',' or ')'"));
            }
        }
        let shown = format!(
            "({})",
            entries
                .iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        );
        let invalid = |reason: String| PresentationError::InvalidWeight {
            weight: shown.clone(),
            position: start,
            reason,
        };
        if entries.len() != n {
            return Err(invalid(format!("expected {n} entries")));
        }
        let lam = Composition::new(entries)
            .map_err(|_| invalid("entries must be nonnegative".into()))?;
        if lam.size() != r as i64 {
            return Err(invalid(format!("entries must sum to {r}")));
        }
        return Ok(Generator::Idem(lam));
    }
    if !cur.eat(b'E') {
        return Err(err(cur, "expected a generator"));
    }
    let sign = if cur.eat(b'-') {
        Sign::Minus
    } else {
        Sign::Plus
    };
    if cur.eat(b'd') {
        return Ok(match sign {
            Sign::Plus => Generator::EDeltaPlus,
            Sign::Minus => Generator::EDeltaMinus,
        });
    }
    let c = color(cur, n)?;
    if cur.eat_str("^(") {
        cur.skip_ws();
        let a = cur
            .int()
            .ok_or_else(|| err(cur, "expected a divided-power exponent"))?;
        if a < 1 {
            return Err(err(cur, "divided-power exponent must be positive"));
        }
        cur.skip_ws();
        if !cur.eat(b')') {
            return Err(err(cur, "expected ')' after exponent"));
        }
        return Ok(Generator::divided_power(sign, c, a as u32));
    }
    Ok(Generator::e(sign, c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qarith::LaurentPoly;

    #[test]
    fn parses_words() {
        let e = parse_element("E1 E-2 1_(1,1,1)", 3, 3).unwrap();
        let w = Word::new(vec![
            Generator::EPlus(Color::new(1, 3)),
            Generator::EMinus(Color::new(2, 3)),
            Generator::Idem(Composition::ones(3)),
        ]);
        assert_eq!(e, Element::from(w));
    }

    #[test]
    fn parses_coefficients_and_divided_powers() {
        let e = parse_element("(q+q^-1) E1 E2 E1 1_(1,1,1)", 3, 3).unwrap();
        assert_eq!(e.num_terms(), 1);
        let (_, c) = e.terms().next().unwrap();
        assert_eq!(c.as_laurent(), Some(&"q + q^-1".parse::<LaurentPoly>().unwrap()));

        let e = parse_element("E2^(2) E1 E3 1_(1,1,1)", 3, 3).unwrap();
        let (w, _) = e.terms().next().unwrap();
        assert_eq!(
            w.factors()[0],
            Generator::DividedPower {
                sign: Sign::Plus,
                color: Color::new(2, 3),
                exponent: 2
            }
        );
        let e = parse_element("E2^(1)", 3, 3).unwrap();
        assert_eq!(e.to_string(), "E2");
    }

    #[test]
    fn parses_special_generators() {
        let e = parse_element("R 1_(1,1,1) - R^-1 + Ed E-d - 1", 3, 3).unwrap();
        assert_eq!(e.num_terms(), 4);
        assert_eq!(
            parse_element("-E1 + (2) E2", 3, 3).unwrap().to_string(),
            "-E1 + (2) E2"
        );
        assert!(parse_element("0", 3, 3).unwrap().is_zero());
    }

    #[test]
    fn reports_errors() {
        assert!(matches!(
            parse_element("E4", 3, 3),
            Err(PresentationError::UnknownColor { color: 4, position: 1, .. })
        ));
        assert!(matches!(
            parse_element("E0", 3, 3),
            Err(PresentationError::UnknownColor { color: 0, .. })
        ));
        assert!(matches!(
            parse_element("E1 1_(1,1)", 3, 3),
            Err(PresentationError::InvalidWeight { position: 3, .. })
        ));
        assert!(matches!(
            parse_element("1_(4,0,0)", 3, 3),
            Err(PresentationError::InvalidWeight { .. })
        ));
        assert!(matches!(
            parse_element("1_(4,-1,0)", 3, 3),
            Err(PresentationError::InvalidWeight { .. })
        ));
        assert!(matches!(
            parse_element("E1^(0)", 3, 3),
            Err(PresentationError::Parse { .. })
        ));
        assert!(matches!(
            parse_element("E1 + ", 3, 3),
            Err(PresentationError::Parse { position: 5, .. })
        ));
        assert!(matches!(
            parse_element("(q E1", 3, 3),
            Err(PresentationError::Parse { .. })
        ));
        assert!(matches!(
            parse_element("E1 x", 3, 3),
            Err(PresentationError::Parse { position: 3, .. })
        ));
    }

    #[test]
    fn render_round_trip() {
        for text in [
            "E1 E-2 1_(1,1,1)",
            "(q + q^-1) E1 E2 E1 1_(1,1,1) - E2^(2) E1 E3 1_(1,1,1)",
            "(q)/(q^2 + 1) E3 E3 + R R^-1 - 1",
        ] {
            let e = parse_element(text, 3, 3).unwrap();
            let again = parse_element(&e.to_string(), 3, 3).unwrap();
            assert_eq!(e, again, "{text}");
        }
    }
}
