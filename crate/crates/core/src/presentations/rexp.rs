//! `R^{±1}` as sums of divided-power monomials, and divided-power expansion.

use crate::qarith::RatFunc;
use crate::weightlat::{enumerate_compositions, rotate, Color, Composition};

use super::relations::{chain_down, chain_up_minus};
use super::{inverse_factorial, Element, Generator, Sign, Word};

/// The monomial of the `R^{±1}` expansion attached to the composition `a`
/// and the zero position `i` (`a_i = 0`), together with the weight it acts on.
///
/// `sign = Minus` gives `E_{i-1}^{(a_{i-1})}⋯E_1^{(a_1)}E_n^{(a_n)}⋯E_{i+1}^{(a_{i+1})} 1_{rotate(a)}`,
/// `sign = Plus` gives `E_{-(i+1)}^{(a_{i+1})}⋯E_{-n}^{(a_n)}E_{-1}^{(a_1)}⋯E_{-(i-1)}^{(a_{i-1})} 1_a`.
/// Raising must empty color `i−1` into the empty color `i` first, so the
/// colors are taken in the opposite order to the lowering monomial.
fn expansion_monomial(a: &Composition, i: Color, sign: Sign) -> (Composition, Word) {
    let e_sign = match sign {
        Sign::Minus => Sign::Plus,
        Sign::Plus => Sign::Minus,
    };
    let source = match sign {
        Sign::Minus => Composition::try_from(rotate(a.weight())).expect("rotation"),
        Sign::Plus => a.clone(),
    };
    let colors = match sign {
        Sign::Minus => chain_down(i),
        Sign::Plus => chain_up_minus(i),
    };
    let mut gens: Vec<Generator> = colors
        .into_iter()
        .filter(|&c| a.at(c) > 0)
        .map(|c| Generator::divided_power(e_sign, c, a.at(c) as u32))
        .collect();
    gens.push(Generator::Idem(source.clone()));
    (source, Word::new(gens))
}

fn delta_term(n: usize, sign: Sign) -> (Composition, Word) {
    let ones = Composition::ones(n);
    let d = match sign {
        Sign::Minus => Generator::EDeltaPlus,
        Sign::Plus => Generator::EDeltaMinus,
    };
    (ones.clone(), Word::new(vec![d, Generator::Idem(ones)]))
}

/// The terms of the expansion of `R^{sign}` in degree `n`, one per weight:
/// `(λ, word)` with `word = R^{sign} 1_λ`. Compositions with several zero
/// entries contribute once, using their first zero position.
pub fn r_expansion_terms(n: usize, sign: Sign) -> Vec<(Composition, Word)> {
    let mut out = vec![delta_term(n, sign)];
    for a in enumerate_compositions(n, n as u32) {
        let Some(pos) = a.entries().iter().position(|&x| x == 0) else {
            continue;
        };
        out.push(expansion_monomial(&a, Color::new(pos as i64 + 1, n), sign));
    }
    out.sort();
    out
}

/// `R^{sign}` as an element: `E_{∓δ}1_n` plus one monomial per composition
/// of `n` with a zero entry.
pub fn r_expansion(n: usize, sign: Sign) -> Element {
    let mut e = Element::zero();
    for (_, w) in r_expansion_terms(n, sign) {
        e.add_term(w, RatFunc::one());
    }
    e
}

/// The literal double sum over zero positions `i` and compositions with
/// `a_i = 0`, without merging repeated monomials.
pub fn r_expansion_raw(n: usize, sign: Sign) -> Element {
    let mut e = Element::zero();
    e.add_term(delta_term(n, sign).1, RatFunc::one());
    for i in Color::all(n) {
        for a in enumerate_compositions(n, n as u32) {
            if a.at(i) == 0 {
                e.add_term(expansion_monomial(&a, i, sign).1, RatFunc::one());
            }
        }
    }
    e
}

/// Replaces each `E_{±i}^{(a)}` by `E_{±i}^a` with coefficient `1/[a]!`.
pub fn expand_divided_powers(w: &Word) -> Element {
    let mut coeff = RatFunc::one();
    let mut gens = Vec::with_capacity(w.effective_length());
    for g in w.factors() {
        match *g {
            Generator::DividedPower {
                sign,
                color,
                exponent,
            } => {
                coeff = &coeff * &inverse_factorial(exponent);
                gens.extend(std::iter::repeat(Generator::e(sign, color)).take(exponent as usize));
            }
            _ => gens.push(g.clone()),
        }
    }
    Element::monomial(coeff, Word::new(gens))
}
