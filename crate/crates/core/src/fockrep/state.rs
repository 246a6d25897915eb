//! Finitely supported vectors of `V^{⊗r}`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Sub};

use num_traits::Signed;

use crate::qarith::{LaurentPoly, QArithError};

/// A finite combination of pure tensors `e_{t_1} ⊗ … ⊗ e_{t_r}`, keyed by the
/// index tuple. Zero amplitudes are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TensorState {
    amps: BTreeMap<Vec<i64>, LaurentPoly>,
}

impl TensorState {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The pure tensor with coefficient 1.
    pub fn basis(tuple: &[i64]) -> Self {
        let mut s = Self::zero();
        s.add_term(tuple.to_vec(), LaurentPoly::one());
        s
    }

    pub fn add_term(&mut self, tuple: Vec<i64>, amp: LaurentPoly) {
        if amp.is_zero() {
            return;
        }
        match self.amps.get_mut(&tuple) {
            Some(a) => {
                *a += &amp;
                if a.is_zero() {
                    self.amps.remove(&tuple);
                }
            }
            None => {
                self.amps.insert(tuple, amp);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.amps.is_empty()
    }

    pub fn len(&self) -> usize {
        self.amps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.amps.is_empty()
    }

    pub fn amplitude(&self, tuple: &[i64]) -> LaurentPoly {
        self.amps.get(tuple).cloned().unwrap_or_default()
    }

    /// Terms in lexicographic order of the index tuples.
    pub fn iter(&self) -> impl Iterator<Item = (&Vec<i64>, &LaurentPoly)> {
        self.amps.iter()
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let mut out = Self::zero();
        if c.is_zero() {
            return out;
        }
        for (t, a) in &self.amps {
            out.amps.insert(t.clone(), a * c);
        }
        out
    }

    /// Divides every amplitude exactly by `d`.
    pub fn exact_divide(&self, d: &LaurentPoly) -> Result<Self, QArithError> {
        let mut out = Self::zero();
        for (t, a) in &self.amps {
            out.amps.insert(t.clone(), a.exact_divide(d)?);
        }
        Ok(out)
    }
}

impl Add<&TensorState> for &TensorState {
    type Output = TensorState;
    fn add(self, rhs: &TensorState) -> TensorState {
        let mut out = self.clone();
        for (t, a) in &rhs.amps {
            out.add_term(t.clone(), a.clone());
        }
        out
    }
}

impl Sub<&TensorState> for &TensorState {
    type Output = TensorState;
    fn sub(self, rhs: &TensorState) -> TensorState {
        let mut out = self.clone();
        for (t, a) in &rhs.amps {
            out.add_term(t.clone(), -a);
        }
        out
    }
}

pub(crate) fn fmt_tuple(t: &[i64], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if t.is_empty() {
        return write!(f, "1");
    }
    for (k, x) in t.iter().enumerate() {
        if k > 0 {
            write!(f, "⊗")?;
        }
        write!(f, "e{x}")?;
    }
    Ok(())
}

impl fmt::Display for TensorState {
    /// E.g. `e1⊗e2 - (q + q^-1)·e0⊗e3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.amps.is_empty() {
            return write!(f, "0");
        }
        for (k, (t, a)) in self.amps.iter().enumerate() {
            let neg = a.leading_coeff().is_some_and(|c| c.is_negative());
            let abs = if neg { -a } else { a.clone() };
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if !abs.is_one() {
                if abs.num_terms() == 1 {
                    write!(f, "{abs}·")?;
                } else {
                    write!(f, "({abs})·")?;
                }
            }
            fmt_tuple(t, f)?;
        }
        Ok(())
    }
}
