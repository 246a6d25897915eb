//! Bubble calculus at the region label `(1^n)`.
//!
//! Bubbles are indexed by color, orientation and dot offset. Offset-zero
//! bubbles are the scalars of a [`BubbleConvention`], negative offsets vanish,
//! and the two orientations of one color are tied by the infinite
//! Grassmannian relation `Σ_{a=0}^{b} CCW_{b−a}·CW_a = −δ_{b,0}`.

mod digon;
mod poly;
mod slide;

pub use digon::{
    digon_closed_form_y, digon_closed_form_z, digon_family_y, digon_family_z,
    digon_reduce_recursive, recursion_step, y_poly, z_poly, DigonState,
};
pub use poly::{BubbleConvention, BubblePoly, BubbleSym, Orientation};
pub use slide::{slide_convert, BubbleFamily, SlideDirection};

use std::collections::BTreeMap;

use num_bigint::BigInt;
use thiserror::Error;

use crate::weightlat::Color;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BubbleError {
    #[error("expected {expected} dot counts, got {got}")]
    WrongLength { expected: usize, got: usize },
    #[error("digons need rank at least 3, got {0}")]
    RankTooSmall(usize),
    #[error("symbol {symbol} is not allowed here: {context}")]
    UnsupportedSymbol { symbol: String, context: String },
    #[error("expected a {expected} family, got {got}")]
    WrongFamily { expected: String, got: String },
    #[error("degree-zero term {0} is not a unit")]
    NonUnitDegreeZero(String),
}

/// Given the offsets `0..=d` of one orientation of a bubble color, returns
/// the offsets `0..=d` of the opposite orientation solving the Grassmannian
/// relation for `1 ≤ b ≤ d`. The offset-zero output is the convention scalar,
/// so the `b = 0` relation holds only for a consistent convention.
pub fn grassmannian_convert(
    series: &[BubblePoly],
    from: Orientation,
    conv: &BubbleConvention,
) -> Result<Vec<BubblePoly>, BubbleError> {
    let Some(first) = series.first() else {
        return Ok(Vec::new());
    };
    let unit = match first.as_constant() {
        Some(c) if c == BigInt::from(1) || c == BigInt::from(-1) => c,
        _ => return Err(BubbleError::NonUnitDegreeZero(first.to_string())),
    };
    let mut out = vec![BubblePoly::constant(conv.degree_zero(from.opposite()))];
    for b in 1..series.len() {
        let mut acc = BubblePoly::zero();
        for a in 1..=b {
            acc = &acc + &(&series[a] * &out[b - a]);
        }
        // in_0 is ±1, hence its own inverse.
        out.push(acc.scale(&-&unit));
    }
    Ok(out)
}

/// The bubbles of one color and orientation at offsets `0..=degree`.
pub fn bubble_series(
    color: Color,
    o: Orientation,
    degree: u32,
    conv: &BubbleConvention,
) -> Vec<BubblePoly> {
    (0..=degree as i64)
        .map(|a| BubblePoly::bubble(color, o, a, conv))
        .collect()
}

/// Rewrites every symbol of the orientation opposite to `target` through the
/// Grassmannian relation, leaving a polynomial in `target` bubbles only.
pub fn to_basis(
    p: &BubblePoly,
    target: Orientation,
    conv: &BubbleConvention,
) -> Result<BubblePoly, BubbleError> {
    let mut need: BTreeMap<Color, u32> = BTreeMap::new();
    for s in p.symbols() {
        if s.orientation != target {
            let d = need.entry(s.color).or_default();
            *d = (*d).max(s.offset);
        }
    }
    let mut tables = BTreeMap::new();
    for (&c, &d) in &need {
        let series = bubble_series(c, target, d, conv);
        tables.insert(c, grassmannian_convert(&series, target, conv)?);
    }
    p.substitute(|s| -> Result<_, BubbleError> {
        if s.orientation == target {
            Ok(BubblePoly::symbol(*s))
        } else {
            Ok(tables[&s.color][s.offset as usize].clone())
        }
    })
}

pub fn to_ccw_basis(p: &BubblePoly, conv: &BubbleConvention) -> Result<BubblePoly, BubbleError> {
    to_basis(p, Orientation::Ccw, conv)
}

/// `Σ_{a=0}^{b} CCW_{b−a}·CW_a + δ_{b,0}` for one color, written in the
/// counter-clockwise basis. Zero for every `b` under a consistent convention.
pub fn grassmannian_residual(
    color: Color,
    b: u32,
    conv: &BubbleConvention,
) -> Result<BubblePoly, BubbleError> {
    let mut acc = BubblePoly::constant(i64::from(b == 0));
    for a in 0..=b as i64 {
        let ccw = BubblePoly::bubble(color, Orientation::Ccw, b as i64 - a, conv);
        let cw = BubblePoly::bubble(color, Orientation::Cw, a, conv);
        acc = &acc + &(&ccw * &cw);
    }
    to_ccw_basis(&acc, conv)
}
