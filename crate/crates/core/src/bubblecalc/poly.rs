//! Polynomials in dotted-bubble symbols.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::weightlat::Color;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    Cw,
    Ccw,
}

impl Orientation {
    pub fn opposite(self) -> Self {
        match self {
            Orientation::Cw => Orientation::Ccw,
            Orientation::Ccw => Orientation::Cw,
        }
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Orientation::Cw => write!(f, "cw"),
            Orientation::Ccw => write!(f, "ccw"),
        }
    }
}

/// Values of the degree-zero bubbles at the region label `(1^n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BubbleConvention {
    pub cw0: i64,
    pub ccw0: i64,
}

impl Default for BubbleConvention {
    fn default() -> Self {
        Self { cw0: 1, ccw0: -1 }
    }
}

impl BubbleConvention {
    pub fn degree_zero(&self, o: Orientation) -> i64 {
        match o {
            Orientation::Cw => self.cw0,
            Orientation::Ccw => self.ccw0,
        }
    }
}

/// A bubble of positive dot offset; the ordering is by color, then
/// orientation, then offset.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BubbleSym {
    pub color: Color,
    pub orientation: Orientation,
    pub offset: u32,
}

impl BubbleSym {
    pub fn new(color: Color, orientation: Orientation, offset: u32) -> Self {
        assert!(offset >= 1, "offset-0 bubbles are scalars");
        Self {
            color,
            orientation,
            offset,
        }
    }
}

impl fmt::Display for BubbleSym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]_{}", self.orientation, self.color, self.offset)
    }
}

/// An integer polynomial in commuting bubble symbols. Monomials are sorted
/// multisets of symbols; the empty monomial is the constant term.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct BubblePoly {
    terms: BTreeMap<Vec<BubbleSym>, BigInt>,
}

impl BubblePoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero();
        p.add_term(Vec::new(), c.into());
        p
    }

    pub fn symbol(s: BubbleSym) -> Self {
        let mut p = Self::zero();
        p.add_term(vec![s], BigInt::one());
        p
    }

    /// The bubble of the given offset: zero for negative offsets, the
    /// convention scalar at offset zero, a symbol otherwise.
    pub fn bubble(color: Color, o: Orientation, offset: i64, conv: &BubbleConvention) -> Self {
        match offset {
            x if x < 0 => Self::zero(),
            0 => Self::constant(conv.degree_zero(o)),
            x => Self::symbol(BubbleSym::new(color, o, x as u32)),
        }
    }

    fn add_term(&mut self, mut mono: Vec<BubbleSym>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        mono.sort();
        match self.terms.get_mut(&mono) {
            Some(x) => {
                *x += c;
                if x.is_zero() {
                    self.terms.remove(&mono);
                }
            }
            None => {
                self.terms.insert(mono, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The constant value, if the polynomial has no symbols.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => self.terms.get(&Vec::new()).cloned(),
            _ => None,
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<BubbleSym>, &BigInt)> {
        self.terms.iter()
    }

    pub fn symbols(&self) -> impl Iterator<Item = &BubbleSym> {
        self.terms.keys().flatten()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut out = Self::zero();
        for (m, x) in &self.terms {
            out.add_term(m.clone(), x * c);
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Ring homomorphism sending each symbol to `f(symbol)`.
    pub fn substitute<E>(
        &self,
        mut f: impl FnMut(&BubbleSym) -> Result<BubblePoly, E>,
    ) -> Result<BubblePoly, E> {
        let mut out = Self::zero();
        for (mono, c) in &self.terms {
            let mut acc = Self::constant(c.clone());
            for s in mono {
                acc = &acc * &f(s)?;
            }
            out = &out + &acc;
        }
        Ok(out)
    }
}

impl Add<&BubblePoly> for &BubblePoly {
    type Output = BubblePoly;
    fn add(self, rhs: &BubblePoly) -> BubblePoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub<&BubblePoly> for &BubblePoly {
    type Output = BubblePoly;
    fn sub(self, rhs: &BubblePoly) -> BubblePoly {
        self + &(-rhs)
    }
}

impl Neg for &BubblePoly {
    type Output = BubblePoly;
    fn neg(self) -> BubblePoly {
        BubblePoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Mul<&BubblePoly> for &BubblePoly {
    type Output = BubblePoly;
    fn mul(self, rhs: &BubblePoly) -> BubblePoly {
        let mut out = BubblePoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                let mut m = m1.clone();
                m.extend(m2.iter().copied());
                out.add_term(m, c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for BubblePoly {
    /// E.g. `-1·ccw[1]_1·ccw[3]_1 + 2·cw[2]_2`; constants print bare.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (mono, c)) in self.terms.iter().enumerate() {
            if k == 0 {
                write!(f, "{c}")?;
            } else if c.is_negative() {
                write!(f, " - {}", c.abs())?;
            } else {
                write!(f, " + {c}")?;
            }
            for s in mono {
                write!(f, "·{s}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(c: i64, o: Orientation, a: u32) -> BubblePoly {
        BubblePoly::symbol(BubbleSym::new(Color::new(c, 3), o, a))
    }

    #[test]
    fn renders_canonically() {
        let p = &(&sym(3, Orientation::Ccw, 1) * &sym(1, Orientation::Ccw, 1)).scale(&(-1).into())
            + &sym(2, Orientation::Cw, 2).scale(&2.into());
        assert_eq!(p.to_string(), "-1·ccw[1]_1·ccw[3]_1 + 2·cw[2]_2");
        assert_eq!(BubblePoly::constant(-3).to_string(), "-3");
        assert_eq!(BubblePoly::zero().to_string(), "0");
        let q = &BubblePoly::one() - &sym(1, Orientation::Cw, 1);
        assert_eq!(q.to_string(), "1 - 1·cw[1]_1");
    }

    #[test]
    fn scalars_and_zero_offsets() {
        let conv = BubbleConvention::default();
        let c = Color::new(2, 3);
        assert_eq!(
            BubblePoly::bubble(c, Orientation::Ccw, 0, &conv),
            BubblePoly::constant(-1)
        );
        assert_eq!(
            BubblePoly::bubble(c, Orientation::Cw, 0, &conv),
            BubblePoly::one()
        );
        assert!(BubblePoly::bubble(c, Orientation::Cw, -2, &conv).is_zero());
    }

    #[test]
    fn arithmetic_cancels() {
        let a = sym(1, Orientation::Cw, 1);
        let b = sym(2, Orientation::Ccw, 3);
        let ab = &a * &b;
        assert_eq!(ab, &b * &a);
        assert!((&ab - &ab).is_zero());
        let sq = (&a + &b).pow(2);
        let expanded = &(&a.pow(2) + &ab.scale(&2.into())) + &b.pow(2);
        assert_eq!(sq, expanded);
    }

    #[test]
    fn substitution_is_multiplicative() {
        let a = sym(1, Orientation::Cw, 1);
        let b = sym(2, Orientation::Ccw, 1);
        let p = &(&a * &b) + &a;
        let swapped = p
            .substitute(|s| -> Result<_, ()> {
                Ok(if s.color.index() == 1 {
                    BubblePoly::constant(2)
                } else {
                    BubblePoly::symbol(*s)
                })
            })
            .unwrap();
        assert_eq!(swapped, &b.scale(&2.into()) + &BubblePoly::constant(2));
    }
}
