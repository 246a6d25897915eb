//! The `gl_n` weight lattice `Z^n`, cyclic colors, and compositions `Λ(n,r)`.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeightError {
    #[error("rank must be at least 3, got {0}")]
    RankTooSmall(usize),
    #[error("expected {expected} entries, got {got}")]
    WrongLength { expected: usize, got: usize },
    #[error("composition entries must be nonnegative: {0}")]
    NegativeEntry(Weight),
}

/// A color `i ∈ {1..n}`. All arithmetic wraps modulo the rank.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Color {
    index: usize,
    rank: usize,
}

impl Color {
    /// The color congruent to `i` modulo `rank`.
    pub fn new(i: i64, rank: usize) -> Self {
        let index = (i - 1).rem_euclid(rank as i64) as usize + 1;
        Self { index, rank }
    }

    pub fn index(self) -> usize {
        self.index
    }

    pub fn rank(self) -> usize {
        self.rank
    }

    pub fn shift(self, k: i64) -> Self {
        Self::new(self.index as i64 + k, self.rank)
    }

    pub fn succ(self) -> Self {
        self.shift(1)
    }

    pub fn pred(self) -> Self {
        self.shift(-1)
    }

    /// All colors `1..=rank`.
    pub fn all(rank: usize) -> impl Iterator<Item = Color> {
        (1..=rank as i64).map(move |i| Color::new(i, rank))
    }

    /// `self, self-1, self-2, ...` stopping after `to` (inclusive), cyclically.
    pub fn descending_to(self, to: Color) -> Vec<Color> {
        let mut out = vec![self];
        let mut c = self;
        while c != to {
            c = c.pred();
            out.push(c);
        }
        out
    }

    /// `self, self+1, ...` stopping after `to` (inclusive), cyclically.
    pub fn ascending_to(self, to: Color) -> Vec<Color> {
        let mut out = vec![self];
        let mut c = self;
        while c != to {
            c = c.succ();
            out.push(c);
        }
        out
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.index)
    }
}

impl fmt::Debug for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(mod {})", self.index, self.rank)
    }
}

/// The color of the basis vector `e_t`: the unique `i ∈ 1..n` with `i ≡ t (mod n)`.
pub fn residue(t: i64, n: usize) -> Color {
    Color::new(t, n)
}

/// An integer `n`-tuple.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(Vec<i64>);

impl Weight {
    pub fn new(entries: Vec<i64>) -> Result<Self, WeightError> {
        if entries.len() < 3 {
            return Err(WeightError::RankTooSmall(entries.len()));
        }
        Ok(Self(entries))
    }

    pub fn zero(n: usize) -> Self {
        Self(vec![0; n])
    }

    /// The basis vector `ε_i`.
    pub fn epsilon(i: Color) -> Self {
        let mut v = vec![0; i.rank()];
        v[i.index() - 1] = 1;
        Self(v)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    /// Entry at a color (1-based).
    pub fn at(&self, i: Color) -> i64 {
        self.0[i.index() - 1]
    }

    pub fn sum(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn inner(&self, other: &Weight) -> i64 {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn scale(&self, k: i64) -> Self {
        Self(self.0.iter().map(|x| x * k).collect())
    }

    /// Appends a trailing entry, `λ ↦ (λ, x)`.
    pub fn extend(&self, x: i64) -> Self {
        let mut v = self.0.clone();
        v.push(x);
        Self(v)
    }

    pub fn is_composition(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }
}

impl Add<&Weight> for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        assert_eq!(self.rank(), rhs.rank(), "rank mismatch");
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub<&Weight> for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        assert_eq!(self.rank(), rhs.rank(), "rank mismatch");
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }
}

fn fmt_tuple(v: &[i64], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    write!(f, "(")?;
    for (k, x) in v.iter().enumerate() {
        if k > 0 {
            write!(f, ",")?;
        }
        write!(f, "{x}")?;
    }
    write!(f, ")")
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_tuple(&self.0, f)
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_tuple(&self.0, f)
    }
}

impl Serialize for Weight {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// A member of `Λ(n,r)`: a nonnegative weight whose entries sum to `r`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition(Weight);

impl Composition {
    pub fn new(entries: Vec<i64>) -> Result<Self, WeightError> {
        Self::try_from(Weight::new(entries)?)
    }

    /// `(1,1,...,1)`.
    pub fn ones(n: usize) -> Self {
        Self(Weight(vec![1; n]))
    }

    pub fn weight(&self) -> &Weight {
        &self.0
    }

    pub fn entries(&self) -> &[i64] {
        self.0.entries()
    }

    pub fn rank(&self) -> usize {
        self.0.rank()
    }

    pub fn size(&self) -> i64 {
        self.0.sum()
    }

    pub fn at(&self, i: Color) -> i64 {
        self.0.at(i)
    }

    pub fn extend(&self, x: u32) -> Self {
        Self(self.0.extend(x as i64))
    }
}

impl TryFrom<Weight> for Composition {
    type Error = WeightError;
    fn try_from(w: Weight) -> Result<Self, WeightError> {
        if w.is_composition() {
            Ok(Self(w))
        } else {
            Err(WeightError::NegativeEntry(w))
        }
    }
}

impl From<Composition> for Weight {
    fn from(c: Composition) -> Weight {
        c.0
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl Serialize for Composition {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

/// Weight of `e_{t_1} ⊗ ... ⊗ e_{t_r}`: the sum of `ε_{residue(t_j)}`.
pub fn weight_of(tuple: &[i64], n: usize) -> Composition {
    let mut v = vec![0; n];
    for &t in tuple {
        v[residue(t, n).index() - 1] += 1;
    }
    Composition(Weight(v))
}

/// The simple root `α_i = ε_i − ε_{i+1}` (indices mod n).
pub fn root(i: Color) -> Weight {
    &Weight::epsilon(i) - &Weight::epsilon(i.succ())
}

/// Solves `λ_i − λ_{i+1} = μ_i` (i < n) with `Σλ = r`; `None` is the star value.
pub fn phi(mu: &[i64], n: usize, r: i64) -> Option<Weight> {
    assert_eq!(mu.len() + 1, n, "sl weight must have n-1 entries");
    // λ_k = λ_n + Σ_{j≥k} μ_j, hence n·λ_n + Σ_j j·μ_j = r.
    let weighted: i64 = mu.iter().enumerate().map(|(j, m)| (j as i64 + 1) * m).sum();
    let rest = r - weighted;
    if rest.rem_euclid(n as i64) != 0 {
        return None;
    }
    let last = rest / n as i64;
    let mut lam = vec![0; n];
    lam[n - 1] = last;
    for k in (0..n - 1).rev() {
        lam[k] = lam[k + 1] + mu[k];
    }
    Some(Weight(lam))
}

/// `(λ_1,…,λ_n) ↦ (λ_n, λ_1, …, λ_{n−1})`.
pub fn rotate(lam: &Weight) -> Weight {
    let mut v = lam.0.clone();
    v.rotate_right(1);
    Weight(v)
}

/// Inverse of [`rotate`].
pub fn unrotate(lam: &Weight) -> Weight {
    let mut v = lam.0.clone();
    v.rotate_left(1);
    Weight(v)
}

pub fn rotate_composition(lam: &Composition) -> Composition {
    Composition(rotate(&lam.0))
}

/// All of `Λ(n,r)` in lexicographic order.
pub fn enumerate_compositions(n: usize, r: u32) -> Vec<Composition> {
    fn go(n: usize, r: i64, prefix: &mut Vec<i64>, out: &mut Vec<Composition>) {
        if prefix.len() == n - 1 {
            prefix.push(r);
            out.push(Composition(Weight(prefix.clone())));
            prefix.pop();
            return;
        }
        for x in 0..=r {
            prefix.push(x);
            go(n, r - x, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, r as i64, &mut Vec::with_capacity(n), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(v: &[i64]) -> Weight {
        Weight::new(v.to_vec()).unwrap()
    }

    #[test]
    fn residue_examples() {
        assert_eq!(residue(5, 3).index(), 2);
        assert_eq!(residue(3, 3).index(), 3);
        assert_eq!(residue(0, 3).index(), 3);
        assert_eq!(residue(-1, 3).index(), 2);
    }

    #[test]
    fn weight_of_examples() {
        assert_eq!(weight_of(&[1, 2, 3], 3).entries(), &[1, 1, 1]);
        assert_eq!(weight_of(&[1, 1], 3).entries(), &[2, 0, 0]);
        assert_eq!(weight_of(&[4], 3).entries(), &[1, 0, 0]);
    }

    #[test]
    fn roots() {
        assert_eq!(root(Color::new(1, 3)), w(&[1, -1, 0]));
        assert_eq!(root(Color::new(3, 3)), w(&[-1, 0, 1]));
        assert_eq!(Weight::epsilon(Color::new(1, 3)).inner(&root(Color::new(1, 3))), 1);
        for n in 3..7 {
            let total = Color::all(n).fold(Weight::zero(n), |acc, c| &acc + &root(c));
            assert_eq!(total, Weight::zero(n));
        }
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi(&[0, 0], 3, 3), Some(w(&[1, 1, 1])));
        assert_eq!(phi(&[1, 0], 3, 3), None);
        assert_eq!(phi(&[0, 0, 0], 4, 4), Some(w(&[1, 1, 1, 1])));
    }

    #[test]
    fn phi_matches_brute_force() {
        for n in 3..=4usize {
            let r = n as i64;
            let range = -2..=2i64;
            let mut mus = vec![vec![]];
            for _ in 0..n - 1 {
                mus = mus
                    .into_iter()
                    .flat_map(|m| {
                        range.clone().map(move |x| {
                            let mut m = m.clone();
                            m.push(x);
                            m
                        })
                    })
                    .collect();
            }
            for mu in mus {
                // Any solution has |λ_i| ≤ |r| + Σ|μ|, so this box is exhaustive.
                let bound = r.abs() + mu.iter().map(|x| x.abs()).sum::<i64>();
                let mut found = None;
                let mut lam = vec![-bound; n];
                'search: loop {
                    let ok = (0..n - 1).all(|i| lam[i] - lam[i + 1] == mu[i])
                        && lam.iter().sum::<i64>() == r;
                    if ok {
                        found = Some(w(&lam));
                        break;
                    }
                    for k in 0..n {
                        lam[k] += 1;
                        if lam[k] <= bound {
                            continue 'search;
                        }
                        lam[k] = -bound;
                    }
                    break;
                }
                assert_eq!(phi(&mu, n, r), found, "mu={mu:?}");
            }
        }
    }

    #[test]
    fn rotation() {
        assert_eq!(rotate(&w(&[1, 1, 1])), w(&[1, 1, 1]));
        assert_eq!(rotate(&w(&[3, 0, 0])), w(&[0, 3, 0]));
        let lam = w(&[4, -1, 2, 7]);
        let mut x = lam.clone();
        for _ in 0..4 {
            x = rotate(&x);
        }
        assert_eq!(x, lam);
        assert_eq!(unrotate(&rotate(&lam)), lam);
    }

    #[test]
    fn shifting_tuple_rotates_weight() {
        for tuple in [vec![1, 2, 2], vec![0, -4, 7], vec![5, 5, 5]] {
            let shifted: Vec<i64> = tuple.iter().map(|t| t + 1).collect();
            assert_eq!(
                weight_of(&shifted, 3).weight(),
                &rotate(weight_of(&tuple, 3).weight())
            );
        }
    }

    #[test]
    fn compositions() {
        assert_eq!(enumerate_compositions(3, 0), vec![Composition::new(vec![0, 0, 0]).unwrap()]);
        let c: Vec<Vec<i64>> = enumerate_compositions(3, 1)
            .iter()
            .map(|c| c.entries().to_vec())
            .collect();
        assert_eq!(c, vec![vec![0, 0, 1], vec![0, 1, 0], vec![1, 0, 0]]);
        assert_eq!(enumerate_compositions(3, 3).len(), 10);
        assert_eq!(enumerate_compositions(4, 4).len(), 35);
        assert_eq!(enumerate_compositions(5, 3).len(), 35);
    }

    #[test]
    fn color_wraps() {
        let c = Color::new(1, 4);
        assert_eq!(c.pred().index(), 4);
        assert_eq!(Color::new(4, 4).succ().index(), 1);
        let down: Vec<usize> = Color::new(1, 4)
            .descending_to(Color::new(3, 4))
            .iter()
            .map(|c| c.index())
            .collect();
        assert_eq!(down, vec![1, 4, 3]);
        assert!(Weight::new(vec![1, 2]).is_err());
        assert!(Composition::new(vec![1, -1, 0]).is_err());
    }
}
