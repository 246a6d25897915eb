//! Formal generators, words and elements of the affine q-Schur algebras, with
//! catalogs of their defining relations.

mod iota;
mod parse;
mod relations;
mod rexp;

pub use iota::iota_image;
pub use parse::parse_element;
pub use relations::{
    chain_down, chain_up_minus, delta_relation_catalog, lambda_shift, r_corollary_catalog,
    schur_relation_catalog, RelationPair,
};
pub use rexp::{expand_divided_powers, r_expansion, r_expansion_raw, r_expansion_terms};

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use thiserror::Error;

use crate::qarith::{quantum_factorial, LaurentPoly, QArithError, RatFunc};
use crate::weightlat::{root, rotate, unrotate, Color, Composition, Weight};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PresentationError {
    #[error("parse error at {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("unknown color {color} at {position}: colors run from 1 to {rank}")]
    UnknownColor {
        color: i64,
        rank: usize,
        position: usize,
    },
    #[error("invalid weight {weight} at {position}: {reason}")]
    InvalidWeight {
        weight: String,
        position: usize,
        reason: String,
    },
    #[error("generator {0} has no image without R-expansion rewriting")]
    UnmappedGenerator(String),
}

impl From<QArithError> for PresentationError {
    fn from(e: QArithError) -> Self {
        match e {
            QArithError::Parse { position, message } => Self::Parse { position, message },
            other => Self::Parse {
                position: 0,
                message: other.to_string(),
            },
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

/// A single generator. `EPlus(i)` is `E_i`, `EMinus(i)` is `E_{-i}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    EPlus(Color),
    EMinus(Color),
    Idem(Composition),
    RShift(Sign),
    EDeltaPlus,
    EDeltaMinus,
    DividedPower {
        sign: Sign,
        color: Color,
        exponent: u32,
    },
}

impl Generator {
    pub fn e(sign: Sign, color: Color) -> Self {
        match sign {
            Sign::Plus => Generator::EPlus(color),
            Sign::Minus => Generator::EMinus(color),
        }
    }

    /// `E_{±i}^{(a)}`; exponent 1 gives the plain generator.
    ///
    /// # Panics
    /// If `exponent` is zero.
    pub fn divided_power(sign: Sign, color: Color, exponent: u32) -> Self {
        assert!(exponent >= 1, "divided power exponent must be positive");
        if exponent == 1 {
            Self::e(sign, color)
        } else {
            Generator::DividedPower {
                sign,
                color,
                exponent,
            }
        }
    }

    /// `(sign, color, multiplicity)` for Chevalley-type generators.
    pub fn chevalley(&self) -> Option<(Sign, Color, u32)> {
        match *self {
            Generator::EPlus(c) => Some((Sign::Plus, c, 1)),
            Generator::EMinus(c) => Some((Sign::Minus, c, 1)),
            Generator::DividedPower {
                sign,
                color,
                exponent,
            } => Some((sign, color, exponent)),
            _ => None,
        }
    }

    /// Number of elementary steps this generator moves a tensor index.
    pub fn effective_length(&self) -> usize {
        match self {
            Generator::Idem(_) => 0,
            Generator::DividedPower { exponent, .. } => *exponent as usize,
            _ => 1,
        }
    }

    /// Weight reached from `source`, or `None` if the generator kills it.
    pub fn target_weight(&self, source: &Weight) -> Option<Weight> {
        let n = source.rank();
        let out = match self {
            Generator::Idem(lam) => (lam.weight() == source).then(|| source.clone())?,
            Generator::RShift(Sign::Plus) => rotate(source),
            Generator::RShift(Sign::Minus) => unrotate(source),
            Generator::EDeltaPlus | Generator::EDeltaMinus => {
                (source == Composition::ones(n).weight()).then(|| source.clone())?
            }
            _ => {
                let (sign, color, a) = self.chevalley().expect("chevalley generator");
                source + &root(color).scale(sign.as_i64() * a as i64)
            }
        };
        out.is_composition().then_some(out)
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::EPlus(c) => write!(f, "E{c}"),
            Generator::EMinus(c) => write!(f, "E-{c}"),
            Generator::Idem(lam) => write!(f, "1_{lam}"),
            Generator::RShift(Sign::Plus) => write!(f, "R"),
            Generator::RShift(Sign::Minus) => write!(f, "R^-1"),
            Generator::EDeltaPlus => write!(f, "Ed"),
            Generator::EDeltaMinus => write!(f, "E-d"),
            Generator::DividedPower {
                sign,
                color,
                exponent,
            } => match sign {
                Sign::Plus => write!(f, "E{color}^({exponent})"),
                Sign::Minus => write!(f, "E-{color}^({exponent})"),
            },
        }
    }
}

/// A product of generators, written left to right; it acts right to left.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Generator>);

impl Word {
    pub fn new(factors: Vec<Generator>) -> Self {
        Self(factors)
    }

    pub fn identity() -> Self {
        Self(Vec::new())
    }

    pub fn factors(&self) -> &[Generator] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Total number of elementary index moves, counting `E^{(a)}` as `a`.
    pub fn effective_length(&self) -> usize {
        self.0.iter().map(Generator::effective_length).sum()
    }

    pub fn then(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend(other.0.iter().cloned());
        Word(v)
    }

    /// The signed sequence of a word built from Chevalley generators only,
    /// with divided powers repeated.
    pub fn signed_sequence(&self) -> Option<Vec<(Sign, Color)>> {
        let mut out = Vec::new();
        for g in &self.0 {
            match g {
                Generator::Idem(_) => {}
                _ => {
                    let (s, c, a) = g.chevalley()?;
                    out.extend(std::iter::repeat((s, c)).take(a as usize));
                }
            }
        }
        Some(out)
    }

    /// Weight reached by acting on `source`, or `None` if the word is zero there.
    pub fn target_weight(&self, source: &Weight) -> Option<Weight> {
        self.0
            .iter()
            .rev()
            .try_fold(source.clone(), |w, g| g.target_weight(&w))
    }

    /// The idempotent at the right end, if any.
    pub fn source_idempotent(&self) -> Option<&Composition> {
        match self.0.last() {
            Some(Generator::Idem(lam)) => Some(lam),
            _ => None,
        }
    }
}

impl FromIterator<Generator> for Word {
    fn from_iter<I: IntoIterator<Item = Generator>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (k, g) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

/// A finite `Q(q)`-linear combination of words.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Element {
    terms: BTreeMap<Word, RatFunc>,
}

impl Element {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn identity() -> Self {
        Word::identity().into()
    }

    pub fn monomial(coeff: impl Into<RatFunc>, word: Word) -> Self {
        let mut e = Self::zero();
        e.add_term(word, coeff.into());
        e
    }

    pub fn add_term(&mut self, word: Word, coeff: RatFunc) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&word) {
            Some(c) => {
                *c = &*c + &coeff;
                if c.is_zero() {
                    self.terms.remove(&word);
                }
            }
            None => {
                self.terms.insert(word, coeff);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &RatFunc)> {
        self.terms.iter()
    }

    pub fn coeff(&self, word: &Word) -> Option<&RatFunc> {
        self.terms.get(word)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn scale(&self, c: &RatFunc) -> Element {
        let mut out = Element::zero();
        for (w, x) in &self.terms {
            out.add_term(w.clone(), x * c);
        }
        out
    }

    pub fn effective_length(&self) -> usize {
        self.terms
            .keys()
            .map(Word::effective_length)
            .max()
            .unwrap_or(0)
    }

    /// Common denominator of all coefficients: the lcm of their denominators.
    pub fn common_denominator(&self) -> LaurentPoly {
        let mut d = LaurentPoly::one();
        for c in self.terms.values() {
            let den = c.denom();
            if den.is_one() {
                continue;
            }
            let g = crate::qarith::laurent_gcd(&d, den);
            d = &d * &den.exact_divide(&g).expect("gcd divides");
        }
        d
    }

    /// Applies `f` to each word and sums the images, scaled by the coefficients.
    pub fn try_map_words<E>(
        &self,
        mut f: impl FnMut(&Word) -> Result<Element, E>,
    ) -> Result<Element, E> {
        let mut out = Element::zero();
        for (w, c) in &self.terms {
            out = &out + &f(w)?.scale(c);
        }
        Ok(out)
    }
}

impl From<Word> for Element {
    fn from(w: Word) -> Self {
        Element::monomial(RatFunc::one(), w)
    }
}

impl From<Generator> for Element {
    fn from(g: Generator) -> Self {
        Word::new(vec![g]).into()
    }
}

impl Add<&Element> for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl Sub<&Element> for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        self + &(-rhs)
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        Element {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }
}

/// Concatenation of words, bilinear in the coefficients.
impl Mul<&Element> for &Element {
    type Output = Element;
    fn mul(self, rhs: &Element) -> Element {
        let mut out = Element::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &rhs.terms {
                out.add_term(w1.then(w2), c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            let neg = c
                .numer()
                .leading_coeff()
                .is_some_and(|x| x.sign() == num_bigint::Sign::Minus);
            let abs = if neg { -c } else { c.clone() };
            let coeff = (!abs.is_one()).then_some(&abs);
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if let Some(c) = coeff {
                match c.as_laurent() {
                    Some(p) => write!(f, "({p}) ")?,
                    None => write!(f, "({})/({}) ", c.numer(), c.denom())?,
                }
            }
            write!(f, "{w}")?;
        }
        Ok(())
    }
}

/// `1 / [a]!` as a field element.
pub(crate) fn inverse_factorial(a: u32) -> RatFunc {
    RatFunc::from(quantum_factorial(a as i64).expect("nonnegative"))
        .inv()
        .expect("nonzero factorial")
}
