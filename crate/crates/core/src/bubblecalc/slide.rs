//! Bubble slides between the clockwise `i` and counter-clockwise `i+1`
//! families.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::binomial;

use super::digon::{y_poly, z_poly};
use super::{BubbleConvention, BubbleError, BubblePoly, BubbleSym, Orientation};
use crate::weightlat::Color;

/// `Σ_k coeff_k·⟨color, orientation, k⟩` with every bubble of the family,
/// including offset zero, kept as a formal basis element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BubbleFamily {
    pub color: Color,
    pub orientation: Orientation,
    coeffs: BTreeMap<u32, BubblePoly>,
}

impl BubbleFamily {
    pub fn new(color: Color, orientation: Orientation) -> Self {
        Self {
            color,
            orientation,
            coeffs: BTreeMap::new(),
        }
    }

    /// The single family bubble at `offset`.
    pub fn bubble(color: Color, orientation: Orientation, offset: u32) -> Self {
        let mut f = Self::new(color, orientation);
        f.add(offset, &BubblePoly::one());
        f
    }

    pub fn add(&mut self, offset: u32, c: &BubblePoly) {
        let entry = self.coeffs.entry(offset).or_default();
        *entry = &*entry + c;
        if entry.is_zero() {
            self.coeffs.remove(&offset);
        }
    }

    pub fn coeff(&self, offset: u32) -> BubblePoly {
        self.coeffs.get(&offset).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &BubblePoly)> {
        self.coeffs.iter().map(|(k, v)| (*k, v))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Replaces every family bubble by its value: the convention scalar at
    /// offset zero and a symbol otherwise.
    pub fn evaluate(&self, conv: &BubbleConvention) -> BubblePoly {
        let mut acc = BubblePoly::zero();
        for (&k, c) in &self.coeffs {
            let b = BubblePoly::bubble(self.color, self.orientation, k as i64, conv);
            acc = &acc + &(c * &b);
        }
        acc
    }
}

impl fmt::Display for BubbleFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (k, (off, c)) in self.coeffs.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})·⟨{}[{}]_{off}⟩", self.orientation, self.color)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SlideDirection {
    /// Clockwise `i` family to counter-clockwise `i+1` family.
    ToCcw,
    /// Counter-clockwise `i+1` family to clockwise `i` family.
    ToCw,
}

fn unsupported(s: &BubbleSym, context: &str) -> BubbleError {
    BubbleError::UnsupportedSymbol {
        symbol: s.to_string(),
        context: context.to_string(),
    }
}

/// Slides a family across the strand between colors `i` and `i+1`.
///
/// `ToCcw` rewrites `⟨CW(i,k)⟩ = Σ_j binom(k,j)·y_i^j·⟨CCW(i+1,k−j)⟩` and
/// sends coefficient bubbles `CCW(m,1) ↦ −CW(m+1,1)` for `m ≠ i`. `ToCw`
/// rewrites `⟨CCW(i+1,s)⟩ = Σ_j binom(s,j)·z_{i+1}^j·⟨CW(i,s−j)⟩` and sends
/// `CW(m,1) ↦ −CCW(m−1,1)` for `m ≠ i+1`. Coefficients must be polynomials in
/// the offset-one bubbles that can slide, i.e. in the `z`s or `y`s.
pub fn slide_convert(f: &BubbleFamily, dir: SlideDirection) -> Result<BubbleFamily, BubbleError> {
    let (expected, i) = match dir {
        SlideDirection::ToCcw => (Orientation::Cw, f.color),
        SlideDirection::ToCw => (Orientation::Ccw, f.color.pred()),
    };
    if f.orientation != expected {
        return Err(BubbleError::WrongFamily {
            expected: expected.to_string(),
            got: f.orientation.to_string(),
        });
    }
    let (target_color, target_o, shift) = match dir {
        SlideDirection::ToCcw => (i.succ(), Orientation::Ccw, y_poly(i, i)),
        SlideDirection::ToCw => (i, Orientation::Cw, z_poly(i.succ(), i)),
    };
    let sub = |s: &BubbleSym| -> Result<BubblePoly, BubbleError> {
        if s.offset != 1 {
            return Err(unsupported(s, "only offset-one coefficient bubbles slide"));
        }
        match (dir, s.orientation) {
            (SlideDirection::ToCcw, Orientation::Ccw) if s.color != i => Ok(-&BubblePoly::symbol(
                BubbleSym::new(s.color.succ(), Orientation::Cw, 1),
            )),
            (SlideDirection::ToCw, Orientation::Cw) if s.color != i.succ() => Ok(-&BubblePoly::symbol(
                BubbleSym::new(s.color.pred(), Orientation::Ccw, 1),
            )),
            _ => Err(unsupported(s, "coefficient outside the slidable family")),
        }
    };
    let mut out = BubbleFamily::new(target_color, target_o);
    for (&k, c) in &f.coeffs {
        let c = c.substitute(sub)?;
        let mut power = BubblePoly::one();
        for j in 0..=k {
            let b = BigInt::from(binomial(u64::from(k), u64::from(j)));
            out.add(k - j, &(&c * &power.scale(&b)));
            power = &power * &shift;
        }
    }
    Ok(out)
}
