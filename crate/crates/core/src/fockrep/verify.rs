//! Deciding relations on the safe interior of the window.

use std::fmt;

use serde::Serialize;

use crate::presentations::{Element, RelationPair};
use crate::qarith::LaurentPoly;
use crate::weightlat::{residue, Composition};

use super::action::apply_element_scaled;
use super::{FockError, RepConfig, TensorState};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// A basis vector on which a check failed and what was left over.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub tuple: Vec<i64>,
    pub residual: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub suite: String,
    pub relation: String,
    pub lambda: Option<String>,
    pub vectors: usize,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = match self.status {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
        };
        write!(f, "{status} {} ({} vectors)", self.relation, self.vectors)?;
        if let Some(w) = &self.witness {
            write!(f, " at {:?}: {}", w.tuple, w.residual)?;
        }
        Ok(())
    }
}

/// All tuples of weight `lam` with every index in `[lo + margin, hi − margin]`.
/// Words with at most `margin` elementary steps cannot leave the window
/// from these vectors.
pub fn safe_basis(
    cfg: &RepConfig,
    lam: &Composition,
    margin: usize,
) -> Result<Vec<Vec<i64>>, FockError> {
    let n = cfg.n;
    let a = cfg.lo + margin as i64;
    let b = cfg.hi - margin as i64;
    if b - a + 1 < n as i64 {
        return Err(FockError::EmptySafeInterior {
            lo: cfg.lo,
            hi: cfg.hi,
            margin,
            n,
        });
    }
    assert_eq!(lam.rank(), n, "weight of the wrong rank");
    let mut by_color: Vec<Vec<i64>> = vec![Vec::new(); n];
    for t in a..=b {
        by_color[residue(t, n).index() - 1].push(t);
    }
    let mut remaining: Vec<i64> = lam.entries().to_vec();
    let r = lam.size() as usize;
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(r);

    fn go(
        by_color: &[Vec<i64>],
        remaining: &mut [i64],
        cur: &mut Vec<i64>,
        r: usize,
        out: &mut Vec<Vec<i64>>,
    ) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for c in 0..remaining.len() {
            if remaining[c] == 0 {
                continue;
            }
            remaining[c] -= 1;
            for &t in &by_color[c] {
                cur.push(t);
                go(by_color, remaining, cur, r, out);
                cur.pop();
            }
            remaining[c] += 1;
        }
    }
    go(&by_color, &mut remaining, &mut cur, r, &mut out);
    Ok(out)
}

fn check_shape(p: &RelationPair, cfg: &RepConfig) -> Result<(), FockError> {
    if p.n != cfg.n || p.r != cfg.r {
        return Err(FockError::RankMismatch {
            expected_n: cfg.n,
            expected_r: cfg.r,
            n: p.n,
            r: p.r,
        });
    }
    let needed = p.effective_length();
    if needed > cfg.margin {
        return Err(FockError::MarginTooSmall {
            needed,
            margin: cfg.margin,
        });
    }
    Ok(())
}

fn render_residual(state: &TensorState, d: &LaurentPoly) -> String {
    if d.is_one() {
        return state.to_string();
    }
    match state.exact_divide(d) {
        Ok(s) => s.to_string(),
        Err(_) => format!("[{state}] / ({d})"),
    }
}

/// `(lhs − rhs)·D` applied to one basis vector, with the denominator `D`.
pub fn residual(
    p: &RelationPair,
    tuple: &[i64],
    cfg: &RepConfig,
) -> Result<(TensorState, LaurentPoly), FockError> {
    check_shape(p, cfg)?;
    if tuple.len() != p.r as usize {
        return Err(FockError::TupleLength {
            tuple: tuple.to_vec(),
            len: tuple.len(),
            r: p.r,
        });
    }
    apply_element_scaled(&p.difference(), &TensorState::basis(tuple), cfg)
}

/// Applies `lhs − rhs` to every safe basis vector of every source weight.
/// Stops at the first nonzero residual.
pub fn verify_pair(p: &RelationPair, cfg: &RepConfig) -> Result<VerifyReport, FockError> {
    check_shape(p, cfg)?;
    let diff: Element = p.difference();
    let mut vectors = 0;
    let mut witness = None;
    'outer: for lam in p.source_weights() {
        for tuple in safe_basis(cfg, lam, cfg.margin)? {
            vectors += 1;
            let (state, d) = apply_element_scaled(&diff, &TensorState::basis(&tuple), cfg)?;
            if !state.is_zero() {
                witness = Some(Witness {
                    residual: render_residual(&state, &d),
                    tuple,
                });
                break 'outer;
            }
        }
    }
    Ok(VerifyReport {
        suite: String::new(),
        relation: p.id.clone(),
        lambda: p.lambda.as_ref().map(|l| l.to_string()),
        vectors,
        status: if witness.is_none() {
            Status::Pass
        } else {
            Status::Fail
        },
        witness,
    })
}
