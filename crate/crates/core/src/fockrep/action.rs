//! Action of generators, words and elements on tensor states.

use crate::presentations::{Element, Generator, Sign, Word};
use crate::qarith::{quantum_factorial, LaurentPoly};
use crate::weightlat::{residue, weight_of, Color, Composition};

use super::{FockError, RepConfig, TensorState};

fn check_rank(c: Color, cfg: &RepConfig) -> Result<(), FockError> {
    if c.rank() != cfg.n {
        return Err(FockError::RankMismatch {
            expected_n: cfg.n,
            expected_r: cfg.r,
            n: c.rank(),
            r: cfg.r,
        });
    }
    Ok(())
}

fn checked(tuple: Vec<i64>, cfg: &RepConfig) -> Result<Vec<i64>, FockError> {
    if tuple.iter().all(|&t| cfg.contains(t)) {
        Ok(tuple)
    } else {
        Err(FockError::WindowOverflow {
            tuple,
            lo: cfg.lo,
            hi: cfg.hi,
        })
    }
}

/// One application of `E_{±i}` through the iterated coproduct.
fn apply_chevalley(
    sign: Sign,
    i: Color,
    s: &TensorState,
    cfg: &RepConfig,
) -> Result<TensorState, FockError> {
    let n = cfg.n;
    let up = i.succ();
    let mut out = TensorState::zero();
    for (tuple, amp) in s.iter() {
        let colors: Vec<Color> = tuple.iter().map(|&t| residue(t, n)).collect();
        // K-type factor contributed by one leg.
        let weight = |c: Color| -> i64 {
            if c == i {
                1
            } else if c == up {
                -1
            } else {
                0
            }
        };
        match sign {
            Sign::Plus => {
                // Running exponent from the legs right of k.
                let mut right: i64 = 0;
                for k in (0..tuple.len()).rev() {
                    if residue(tuple[k] - 1, n) == i {
                        let mut t = tuple.clone();
                        t[k] -= 1;
                        out.add_term(checked(t, cfg)?, amp.shift(right));
                    }
                    right += weight(colors[k]);
                }
            }
            Sign::Minus => {
                let mut left: i64 = 0;
                for k in 0..tuple.len() {
                    if colors[k] == i {
                        let mut t = tuple.clone();
                        t[k] += 1;
                        out.add_term(checked(t, cfg)?, amp.shift(left));
                    }
                    left -= weight(colors[k]);
                }
            }
        }
    }
    Ok(out)
}

fn project(s: &TensorState, lam: &Composition) -> TensorState {
    let mut out = TensorState::zero();
    for (t, a) in s.iter() {
        if &weight_of(t, lam.rank()) == lam {
            out.add_term(t.clone(), a.clone());
        }
    }
    out
}

fn shift_all(s: &TensorState, by: i64, cfg: &RepConfig) -> Result<TensorState, FockError> {
    let mut out = TensorState::zero();
    for (t, a) in s.iter() {
        let moved = t.iter().map(|x| x + by).collect();
        out.add_term(checked(moved, cfg)?, a.clone());
    }
    Ok(out)
}

/// Applies one generator. `E_{+δ}` is `R^{-1}` restricted to weight `(1^n)`,
/// `E_{-δ}` is `R` restricted to `(1^n)`.
pub fn apply_generator(
    g: &Generator,
    s: &TensorState,
    cfg: &RepConfig,
) -> Result<TensorState, FockError> {
    match g {
        Generator::EPlus(i) => {
            check_rank(*i, cfg)?;
            apply_chevalley(Sign::Plus, *i, s, cfg)
        }
        Generator::EMinus(i) => {
            check_rank(*i, cfg)?;
            apply_chevalley(Sign::Minus, *i, s, cfg)
        }
        Generator::Idem(lam) => {
            if lam.rank() != cfg.n {
                return Err(FockError::RankMismatch {
                    expected_n: cfg.n,
                    expected_r: cfg.r,
                    n: lam.rank(),
                    r: lam.size() as u32,
                });
            }
            Ok(project(s, lam))
        }
        Generator::RShift(sign) => shift_all(s, sign.as_i64(), cfg),
        Generator::EDeltaPlus => shift_all(&project(s, &Composition::ones(cfg.n)), -1, cfg),
        Generator::EDeltaMinus => shift_all(&project(s, &Composition::ones(cfg.n)), 1, cfg),
        Generator::DividedPower {
            sign,
            color,
            exponent,
        } => {
            check_rank(*color, cfg)?;
            let mut cur = s.clone();
            for _ in 0..*exponent {
                cur = apply_chevalley(*sign, *color, &cur, cfg)?;
            }
            let fact = quantum_factorial(*exponent as i64).expect("positive exponent");
            cur.exact_divide(&fact).map_err(FockError::NotDivisible)
        }
    }
}

/// Applies a word, rightmost generator first.
pub fn apply_word(w: &Word, s: &TensorState, cfg: &RepConfig) -> Result<TensorState, FockError> {
    let mut cur = s.clone();
    for g in w.factors().iter().rev() {
        if cur.is_zero() {
            break;
        }
        cur = apply_generator(g, &cur, cfg)?;
    }
    Ok(cur)
}

/// Applies `D·e` for the common denominator `D` of the coefficients of `e`,
/// returning the state together with `D`. The action of `e` itself is the
/// state divided by `D`.
pub fn apply_element_scaled(
    e: &Element,
    s: &TensorState,
    cfg: &RepConfig,
) -> Result<(TensorState, LaurentPoly), FockError> {
    let d = e.common_denominator();
    let mut out = TensorState::zero();
    for (w, c) in e.terms() {
        let factor = c.numer() * &d.exact_divide(c.denom()).expect("lcm is a multiple");
        let image = apply_word(w, s, cfg)?;
        out = &out + &image.scale(&factor);
    }
    Ok((out, d))
}

/// Linear extension of the word action. Fails with
/// [`FockError::NonIntegral`] if the result has non-Laurent amplitudes.
pub fn apply_element(
    e: &Element,
    s: &TensorState,
    cfg: &RepConfig,
) -> Result<TensorState, FockError> {
    let (state, d) = apply_element_scaled(e, s, cfg)?;
    if d.is_one() {
        return Ok(state);
    }
    state.exact_divide(&d).map_err(|_| FockError::NonIntegral {
        state: state.to_string(),
        denominator: d.to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentations::parse_element;

    fn cfg(n: usize, r: u32) -> RepConfig {
        RepConfig::auto(n, r, 4)
    }

    fn gen_e(sign: Sign, i: i64, n: usize) -> Generator {
        Generator::e(sign, Color::new(i, n))
    }

    #[test]
    fn lowering_single_leg() {
        let c = cfg(3, 1);
        let out = apply_generator(&gen_e(Sign::Plus, 1, 3), &TensorState::basis(&[2]), &c).unwrap();
        assert_eq!(out, TensorState::basis(&[1]));
        let out = apply_generator(&gen_e(Sign::Minus, 1, 3), &TensorState::basis(&[1]), &c).unwrap();
        assert_eq!(out, TensorState::basis(&[2]));
        let out = apply_generator(&gen_e(Sign::Plus, 2, 3), &TensorState::basis(&[2]), &c).unwrap();
        assert!(out.is_zero());
    }

    #[test]
    fn coproduct_on_two_legs() {
        let c = cfg(3, 2);
        // Only leg 2 is active; nothing to its right.
        let out =
            apply_generator(&gen_e(Sign::Plus, 1, 3), &TensorState::basis(&[1, 2]), &c).unwrap();
        assert_eq!(out, TensorState::basis(&[1, 1]));
        // Leg 1 active with a color-1 leg to its right: factor q.
        let out =
            apply_generator(&gen_e(Sign::Plus, 1, 3), &TensorState::basis(&[2, 1]), &c).unwrap();
        let mut expected = TensorState::zero();
        expected.add_term(vec![1, 1], LaurentPoly::q_pow(1));
        assert_eq!(out, expected);
    }

    #[test]
    fn shift_and_projection() {
        let c = cfg(3, 2);
        let out = apply_generator(
            &Generator::RShift(Sign::Plus),
            &TensorState::basis(&[0, 1]),
            &c,
        )
        .unwrap();
        assert_eq!(out, TensorState::basis(&[1, 2]));
        let c = cfg(3, 3);
        let e = parse_element("1_(1,1,1)", 3, 3).unwrap();
        assert!(apply_element(&e, &TensorState::basis(&[1, 1, 2]), &c)
            .unwrap()
            .is_zero());
        let e = parse_element("Ed", 3, 3).unwrap();
        assert_eq!(
            apply_element(&e, &TensorState::basis(&[1, 2, 3]), &c).unwrap(),
            TensorState::basis(&[0, 1, 2])
        );
        assert!(apply_element(&e, &TensorState::basis(&[1, 1, 3]), &c)
            .unwrap()
            .is_zero());
    }

    #[test]
    fn commutator_on_weight_space() {
        let c = cfg(3, 3);
        let e = parse_element("E1 E-1 1_(2,1,0) - E-1 E1 1_(2,1,0)", 3, 3).unwrap();
        let v = TensorState::basis(&[1, 4, 2]);
        assert_eq!(apply_element(&e, &v, &c).unwrap(), v);
        assert!(apply_element(&Element::zero(), &v, &c).unwrap().is_zero());
    }

    #[test]
    fn divided_powers_divide() {
        let c = cfg(3, 3);
        let e = parse_element("E3^(3)", 3, 3).unwrap();
        let out = apply_element(&e, &TensorState::basis(&[1, 4, 7]), &c).unwrap();
        assert_eq!(out, TensorState::basis(&[0, 3, 6]));
        // The same through a field coefficient.
        let e = parse_element("(1)/(q^3 + 2q + 2q^-1 + q^-3) E3 E3 E3", 3, 3).unwrap();
        let out = apply_element(&e, &TensorState::basis(&[1, 4, 7]), &c).unwrap();
        assert_eq!(out, TensorState::basis(&[0, 3, 6]));
        let e = parse_element("(1)/(q + 1) E3", 3, 3).unwrap();
        assert!(matches!(
            apply_element(&e, &TensorState::basis(&[1, 4, 7]), &c),
            Err(FockError::NonIntegral { .. })
        ));
    }

    #[test]
    fn window_overflow_reported() {
        let c = RepConfig::new(3, 1, 0, 5, 1).unwrap();
        assert!(matches!(
            apply_generator(&gen_e(Sign::Plus, 2, 3), &TensorState::basis(&[0]), &c),
            Err(FockError::WindowOverflow { .. })
        ));
        let wrong_rank = Generator::EPlus(Color::new(1, 4));
        assert!(matches!(
            apply_generator(&wrong_rank, &TensorState::basis(&[1]), &c),
            Err(FockError::RankMismatch { .. })
        ));
    }
}
