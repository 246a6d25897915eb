//! Elements of `Q(q)` as normalized fractions of Laurent polynomials.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::laurent::{from_dense, to_dense};
use super::{LaurentPoly, QArithError};

/// `numerator / denominator`, kept in lowest terms.
///
/// Normal form: the denominator is a polynomial with nonzero constant term and
/// positive leading coefficient, and shares no nonunit factor with the
/// numerator. Zero is `0 / 1`.
#[derive(Clone, Hash)]
pub struct RatFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RatFunc {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, QArithError> {
        if den.is_zero() {
            return Err(QArithError::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    pub fn zero() -> Self {
        Self {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from(LaurentPoly::one())
    }

    pub fn numer(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denom(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// Returns the Laurent polynomial when the denominator is a unit.
    pub fn as_laurent(&self) -> Option<&LaurentPoly> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn inv(&self) -> Result<Self, QArithError> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, rhs: &RatFunc) -> Result<Self, QArithError> {
        Ok(self * &rhs.inv()?)
    }

    fn normalized(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = laurent_gcd(&num, &den);
        let mut num = num.exact_divide(&g).expect("gcd divides numerator");
        let mut den = den.exact_divide(&g).expect("gcd divides denominator");
        // Monomials are units: move the denominator's lowest power to the numerator.
        let lo = den.min_exp().expect("nonzero denominator");
        num = num.shift(-lo);
        den = den.shift(-lo);
        if den.leading_coeff().expect("nonzero").is_negative() {
            num = -num;
            den = -den;
        }
        Self { num, den }
    }
}

/// gcd in `Z[q, q^-1]`, normalized to a polynomial with nonzero constant term
/// and positive leading coefficient.
pub fn laurent_gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    match (a.min_exp(), b.min_exp()) {
        (None, None) => LaurentPoly::zero(),
        (Some(lo), None) => normalize_sign(a.shift(-lo)),
        (None, Some(lo)) => normalize_sign(b.shift(-lo)),
        (Some(la), Some(lb)) => {
            let g = poly_gcd(to_dense(a, la), to_dense(b, lb));
            normalize_sign(from_dense(&g, 0))
        }
    }
}

fn normalize_sign(p: LaurentPoly) -> LaurentPoly {
    match p.leading_coeff() {
        Some(c) if c.is_negative() => -p,
        _ => p,
    }
}

fn trim(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn dense_content(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
}

fn primitive_part(v: &[BigInt]) -> Vec<BigInt> {
    let c = dense_content(v);
    if c.is_zero() || c.is_one() {
        return v.to_vec();
    }
    v.iter().map(|x| x / &c).collect()
}

/// Pseudo-remainder of `a` by `b` (both trimmed, `b` nonzero).
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lb = &b[db];
    while r.len() > db && !r.is_empty() {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        for c in r.iter_mut() {
            *c *= lb;
        }
        let shift = dr - db;
        for (j, bj) in b.iter().enumerate() {
            r[shift + j] -= &lr * bj;
        }
        trim(&mut r);
    }
    r
}

/// gcd over `Z[x]` of dense polynomials via primitive remainder sequences.
fn poly_gcd(mut a: Vec<BigInt>, mut b: Vec<BigInt>) -> Vec<BigInt> {
    trim(&mut a);
    trim(&mut b);
    if a.is_empty() {
        return b;
    }
    if b.is_empty() {
        return a;
    }
    let content = dense_content(&a).gcd(&dense_content(&b));
    let mut a = primitive_part(&a);
    let mut b = primitive_part(&b);
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let r = pseudo_rem(&a, &b);
        a = b;
        b = primitive_part(&r);
    }
    a.iter().map(|c| c * &content).collect()
}

impl From<LaurentPoly> for RatFunc {
    fn from(p: LaurentPoly) -> Self {
        Self::normalized(p, LaurentPoly::one())
    }
}

impl From<i64> for RatFunc {
    fn from(c: i64) -> Self {
        Self::from(LaurentPoly::constant(c))
    }
}

impl PartialEq for RatFunc {
    /// Cross-multiplication, independent of normalization.
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for RatFunc {}

impl Add<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.den == rhs.den {
            return RatFunc::normalized(&self.num + &rhs.num, self.den.clone());
        }
        RatFunc::normalized(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Mul<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::normalized(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}
