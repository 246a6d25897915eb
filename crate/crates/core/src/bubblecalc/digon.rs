//! Dotted digons and their reduction to bubble polynomials.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::binomial;

use super::slide::BubbleFamily;
use super::{BubbleConvention, BubbleError, BubblePoly, BubbleSym, Orientation};
use crate::weightlat::Color;

/// `z_m = −Σ CCW(c, 1)` over `c = i−1, i−2, …, m`; `z_i = 0`.
pub fn z_poly(m: Color, i: Color) -> BubblePoly {
    if m == i {
        return BubblePoly::zero();
    }
    let mut acc = BubblePoly::zero();
    for c in i.pred().descending_to(m) {
        acc = &acc - &BubblePoly::symbol(BubbleSym::new(c, Orientation::Ccw, 1));
    }
    acc
}

/// `y_m = −Σ CW(c, 1)` over `c = m, m−1, …, i+2`; `y_{i+1} = 0`.
pub fn y_poly(m: Color, i: Color) -> BubblePoly {
    if m == i.succ() {
        return BubblePoly::zero();
    }
    let mut acc = BubblePoly::zero();
    for c in m.descending_to(i.succ().succ()) {
        acc = &acc - &BubblePoly::symbol(BubbleSym::new(c, Orientation::Cw, 1));
    }
    acc
}

/// A digon of base color `i` with a number of dots on each strand. Strands
/// are colored `i, i−1, …, i+1`; `dots[c − 1]` is the count on color `c`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DigonState {
    i: Color,
    dots: Vec<u32>,
}

impl DigonState {
    pub fn new(i: Color, dots: Vec<u32>) -> Result<Self, BubbleError> {
        if i.rank() < 3 {
            return Err(BubbleError::RankTooSmall(i.rank()));
        }
        if dots.len() != i.rank() {
            return Err(BubbleError::WrongLength {
                expected: i.rank(),
                got: dots.len(),
            });
        }
        Ok(Self { i, dots })
    }

    pub fn base(&self) -> Color {
        self.i
    }

    pub fn rank(&self) -> usize {
        self.i.rank()
    }

    pub fn dots(&self) -> &[u32] {
        &self.dots
    }

    pub fn dots_on(&self, c: Color) -> u32 {
        self.dots[c.index() - 1]
    }

    pub fn total(&self) -> u32 {
        self.dots.iter().sum()
    }

    fn with(&self, c: Color, delta: i64) -> Self {
        let mut dots = self.dots.clone();
        let k = c.index() - 1;
        dots[k] = (dots[k] as i64 + delta) as u32;
        Self { i: self.i, dots }
    }

    /// Every state of rank `n` and base color `i` with at most `max_total` dots.
    pub fn enumerate(i: Color, max_total: u32) -> Vec<Self> {
        let n = i.rank();
        let mut out = Vec::new();
        let mut cur = vec![0u32; n];
        fn go(k: usize, left: u32, cur: &mut Vec<u32>, i: Color, out: &mut Vec<DigonState>) {
            if k == cur.len() {
                out.push(DigonState {
                    i,
                    dots: cur.clone(),
                });
                return;
            }
            for d in 0..=left {
                cur[k] = d;
                go(k + 1, left - d, cur, i, out);
            }
            cur[k] = 0;
        }
        go(0, max_total, &mut cur, i, &mut out);
        out
    }
}

impl fmt::Display for DigonState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "i={} dots=(", self.i)?;
        for (k, d) in self.dots.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, ")")
    }
}

/// One induction step: for the first strand `m` in the order `i−1, …, i+1`
/// carrying dots, `D = D(s_i+1, s_m−1) + z_m·D(s_m−1)`. `None` once only the
/// `i` strand carries dots.
pub fn recursion_step(d: &DigonState) -> Option<(Color, DigonState, DigonState)> {
    let i = d.i;
    let m = i
        .pred()
        .descending_to(i.succ())
        .into_iter()
        .find(|&c| d.dots_on(c) > 0)?;
    let moved = d.with(m, -1).with(i, 1);
    let dropped = d.with(m, -1);
    Some((m, moved, dropped))
}

/// Reduces a digon by the induction step until only the `i` strand has dots,
/// which closes to `CW(i, t)`.
pub fn digon_reduce_recursive(d: &DigonState, conv: &BubbleConvention) -> BubblePoly {
    fn go(
        d: &DigonState,
        conv: &BubbleConvention,
        memo: &mut HashMap<Vec<u32>, BubblePoly>,
    ) -> BubblePoly {
        if let Some(p) = memo.get(&d.dots) {
            return p.clone();
        }
        let out = match recursion_step(d) {
            None => BubblePoly::bubble(d.i, Orientation::Cw, d.dots_on(d.i) as i64, conv),
            Some((m, moved, dropped)) => {
                let a = go(&moved, conv, memo);
                let b = go(&dropped, conv, memo);
                &a + &(&z_poly(m, d.i) * &b)
            }
        };
        memo.insert(d.dots.clone(), out.clone());
        out
    }
    go(d, conv, &mut HashMap::new())
}

/// `Σ_j Π_m binom(s_m, j_m)·x_m^{j_m} ⟨base, Σs − Σj⟩` over `m ≠ skip`.
fn closed_family(
    d: &DigonState,
    skip: Color,
    x: impl Fn(Color) -> BubblePoly,
    base: Color,
    o: Orientation,
) -> BubbleFamily {
    let colors: Vec<Color> = Color::all(d.rank()).filter(|&c| c != skip).collect();
    let total = d.total();
    let mut fam = BubbleFamily::new(base, o);
    fn go(
        k: usize,
        colors: &[Color],
        d: &DigonState,
        x: &dyn Fn(Color) -> BubblePoly,
        coeff: BubblePoly,
        used: u32,
        total: u32,
        fam: &mut BubbleFamily,
    ) {
        if k == colors.len() {
            fam.add(total - used, &coeff);
            return;
        }
        let m = colors[k];
        let s = d.dots_on(m);
        let xm = x(m);
        let mut power = BubblePoly::one();
        for j in 0..=s {
            let b = BigInt::from(binomial(u64::from(s), u64::from(j)));
            let c = &coeff * &power.scale(&b);
            go(k + 1, colors, d, x, c, used + j, total, fam);
            power = &power * &xm;
        }
    }
    go(0, &colors, d, &x, BubblePoly::one(), 0, total, &mut fam);
    fam
}

/// The closed form in clockwise `i` bubbles with `z` coefficients, as a
/// family with the degree-zero bubble kept symbolic.
pub fn digon_family_z(d: &DigonState) -> BubbleFamily {
    let i = d.i;
    closed_family(d, i, |m| z_poly(m, i), i, Orientation::Cw)
}

/// The closed form in counter-clockwise `i+1` bubbles with `y` coefficients.
pub fn digon_family_y(d: &DigonState) -> BubbleFamily {
    let i = d.i;
    closed_family(d, i.succ(), |m| y_poly(m, i), i.succ(), Orientation::Ccw)
}

pub fn digon_closed_form_z(d: &DigonState, conv: &BubbleConvention) -> BubblePoly {
    digon_family_z(d).evaluate(conv)
}

pub fn digon_closed_form_y(d: &DigonState, conv: &BubbleConvention) -> BubblePoly {
    digon_family_y(d).evaluate(conv)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ccw(c: i64, n: usize) -> BubblePoly {
        BubblePoly::symbol(BubbleSym::new(Color::new(c, n), Orientation::Ccw, 1))
    }

    fn cw(c: i64, a: u32, n: usize) -> BubblePoly {
        BubblePoly::symbol(BubbleSym::new(Color::new(c, n), Orientation::Cw, a))
    }

    #[test]
    fn z_and_y_examples() {
        let i = Color::new(2, 4);
        assert!(z_poly(i, i).is_zero());
        assert_eq!(z_poly(Color::new(1, 4), i), -&ccw(1, 4));
        let expected = -&(&(&ccw(1, 4) + &ccw(4, 4)) + &ccw(3, 4));
        assert_eq!(z_poly(Color::new(3, 4), i), expected);
        assert!(y_poly(Color::new(3, 4), i).is_zero());
        assert_eq!(y_poly(Color::new(4, 4), i), -&cw(4, 1, 4));
    }

    #[test]
    fn base_cases() {
        let conv = BubbleConvention::default();
        let i = Color::new(1, 3);
        let d = DigonState::new(i, vec![0, 0, 0]).unwrap();
        assert_eq!(digon_reduce_recursive(&d, &conv), BubblePoly::one());
        let d = DigonState::new(i, vec![2, 0, 0]).unwrap();
        assert_eq!(digon_reduce_recursive(&d, &conv), cw(1, 2, 3));
        assert_eq!(digon_closed_form_z(&d, &conv), cw(1, 2, 3));
        let d = DigonState::new(i, vec![0, 0, 0]).unwrap();
        assert_eq!(digon_closed_form_y(&d, &conv), BubblePoly::constant(-1));
    }

    #[test]
    fn one_step() {
        let conv = BubbleConvention::default();
        let i = Color::new(1, 3);
        // One dot on strand 3 = i−1.
        let d = DigonState::new(i, vec![0, 0, 1]).unwrap();
        let expected = &cw(1, 1, 3) + &z_poly(Color::new(3, 3), i);
        assert_eq!(digon_reduce_recursive(&d, &conv), expected);
        assert_eq!(digon_closed_form_z(&d, &conv), expected);
    }

    #[test]
    fn recursive_matches_closed_form_small() {
        let conv = BubbleConvention::default();
        for i in Color::all(3) {
            for d in DigonState::enumerate(i, 3) {
                assert_eq!(
                    digon_reduce_recursive(&d, &conv),
                    digon_closed_form_z(&d, &conv),
                    "{d}"
                );
            }
        }
    }

    #[test]
    fn enumerate_counts() {
        // Compositions of at most 2 into 3 parts: C(5,3) = 10.
        assert_eq!(DigonState::enumerate(Color::new(1, 3), 2).len(), 10);
        assert!(matches!(
            DigonState::new(Color::new(1, 3), vec![1, 2]),
            Err(BubbleError::WrongLength { .. })
        ));
    }
}
