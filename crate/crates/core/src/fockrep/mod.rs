//! The tensor-space representation `V^{⊗r}`, truncated to a window of basis
//! indices, used as the ground truth for every relation check.
//!
//! Conventions: `E_i e_{t+1} = e_t` and `E_{-i} e_t = e_{t+1}` when
//! `i ≡ t (mod n)`; `R^{±1} e_t = e_{t±1}`. On `r` tensor legs `E_i` acts on
//! leg `k` with a factor `q^{±1}` from each leg to its right (`q` on color `i`,
//! `q^{-1}` on color `i+1`), and `E_{-i}` acts on leg `k` with factors from
//! the legs to its left (`q^{-1}` on color `i`, `q` on color `i+1`). Words act
//! right to left.

mod action;
mod state;
mod verify;

pub use action::{apply_element, apply_element_scaled, apply_generator, apply_word};
pub use state::TensorState;
pub use verify::{residual, safe_basis, verify_pair, Status, VerifyReport, Witness};

use serde::Serialize;
use thiserror::Error;

use crate::qarith::QArithError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FockError {
    #[error("index tuple {tuple:?} left the window [{lo}, {hi}]")]
    WindowOverflow { tuple: Vec<i64>, lo: i64, hi: i64 },
    #[error("divided power is not integral: {0}")]
    NotDivisible(QArithError),
    #[error("result {state} is not divisible by the coefficient denominator {denominator}")]
    NonIntegral { state: String, denominator: String },
    #[error("expected rank {expected_n} and degree {expected_r}, got rank {n} and degree {r}")]
    RankMismatch {
        expected_n: usize,
        expected_r: u32,
        n: usize,
        r: u32,
    },
    #[error("window [{lo}, {hi}] with margin {margin} leaves no safe interior for rank {n}")]
    EmptySafeInterior {
        lo: i64,
        hi: i64,
        margin: usize,
        n: usize,
    },
    #[error("relation needs margin {needed} but the configuration has {margin}")]
    MarginTooSmall { needed: usize, margin: usize },
    #[error("vector {tuple:?} has length {len}, expected {r}")]
    TupleLength { tuple: Vec<i64>, len: usize, r: u32 },
}

/// Rank, degree and the window `[lo, hi]` of allowed basis indices.
///
/// Vectors tested against a relation are drawn from the safe interior
/// `[lo + margin, hi − margin]`, so that words with at most `margin`
/// elementary steps never leave the window.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RepConfig {
    pub n: usize,
    pub r: u32,
    pub lo: i64,
    pub hi: i64,
    pub margin: usize,
}

impl RepConfig {
    /// Checks `hi − lo + 1 ≥ 2·margin + n`.
    pub fn new(n: usize, r: u32, lo: i64, hi: i64, margin: usize) -> Result<Self, FockError> {
        let cfg = Self {
            n,
            r,
            lo,
            hi,
            margin,
        };
        if hi - lo + 1 < 2 * margin as i64 + n as i64 {
            return Err(FockError::EmptySafeInterior {
                lo,
                hi,
                margin,
                n,
            });
        }
        Ok(cfg)
    }

    /// The window `[−(margin+3), max(r,n) + margin + 3]`.
    pub fn auto(n: usize, r: u32, margin: usize) -> Self {
        let m = margin as i64;
        let top = (r as i64).max(n as i64);
        Self::new(n, r, -(m + 3), top + m + 3, margin).expect("auto window is large enough")
    }

    pub fn with_window(self, lo: i64, hi: i64) -> Result<Self, FockError> {
        Self::new(self.n, self.r, lo, hi, self.margin)
    }

    /// `[lo + margin, hi − margin]`.
    pub fn interior(&self) -> (i64, i64) {
        (self.lo + self.margin as i64, self.hi - self.margin as i64)
    }

    pub fn contains(&self, t: i64) -> bool {
        (self.lo..=self.hi).contains(&t)
    }

    /// Same rank and degree, window grown symmetrically to twice its length.
    pub fn doubled(&self) -> Self {
        let len = self.hi - self.lo + 1;
        let left = len / 2;
        let right = len - left;
        Self {
            lo: self.lo - left,
            hi: self.hi + right,
            ..*self
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn auto_window() {
        let cfg = RepConfig::auto(3, 3, 3);
        assert_eq!((cfg.lo, cfg.hi), (-6, 9));
        assert_eq!(cfg.interior(), (-3, 6));
        let d = cfg.doubled();
        assert_eq!(d.hi - d.lo + 1, 2 * (cfg.hi - cfg.lo + 1));
    }

    #[test]
    fn rejects_small_windows() {
        assert!(matches!(
            RepConfig::new(3, 3, 0, 7, 3),
            Err(FockError::EmptySafeInterior { .. })
        ));
        assert!(RepConfig::new(3, 3, 0, 8, 3).is_ok());
    }
}
