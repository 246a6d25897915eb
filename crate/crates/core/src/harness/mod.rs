//! Suites, configuration and reports, plus the entry points used by the
//! command-line tool.

mod config;
mod report;
mod suites;

pub use config::{parse_window, Selection, Suite, SuiteConfig};
pub use report::{ConfigEcho, Conventions, SuiteReport, Summary};
pub use suites::{r_expansion_pairs, run_suite};

use thiserror::Error;

use crate::bubblecalc::{
    digon_closed_form_z, BubbleConvention, BubbleError, BubblePoly, DigonState,
};
use crate::fockrep::{apply_element, FockError, RepConfig, TensorState};
use crate::presentations::{parse_element, PresentationError};
use crate::weightlat::Color;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("configuration error: {0}")]
    Config(String),
    #[error(transparent)]
    Presentation(#[from] PresentationError),
    #[error(transparent)]
    Fock(#[from] FockError),
    #[error(transparent)]
    Bubble(#[from] BubbleError),
}

/// Applies a parsed element to one basis vector, in a window wide enough
/// that no word of the element can leave it.
pub fn compute(n: usize, r: u32, element: &str, tuple: &[i64]) -> Result<TensorState, HarnessError> {
    if tuple.len() != r as usize {
        return Err(HarnessError::Config(format!(
            "vector has {} entries, expected {r}",
            tuple.len()
        )));
    }
    let e = parse_element(element, n, r)?;
    let margin = e.effective_length().max(1);
    let lo = tuple.iter().copied().min().unwrap_or(0) - margin as i64;
    let hi = (tuple.iter().copied().max().unwrap_or(0) + margin as i64).max(lo + n as i64);
    let cfg = RepConfig::new(n, r, lo - margin as i64, hi + margin as i64, margin)?;
    Ok(apply_element(&e, &TensorState::basis(tuple), &cfg)?)
}

/// The closed form of a digon with base color `i` and the given dots.
pub fn bubble_reduce(n: usize, i: i64, dots: &[u32]) -> Result<BubblePoly, HarnessError> {
    if !(1..=n as i64).contains(&i) {
        return Err(HarnessError::Config(format!("base color {i} outside 1..{n}")));
    }
    let d = DigonState::new(Color::new(i, n), dots.to_vec())?;
    Ok(digon_closed_form_z(&d, &BubbleConvention::default()))
}
