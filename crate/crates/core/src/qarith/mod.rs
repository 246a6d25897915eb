//! Exact arithmetic over `Z[q, q^-1]` and `Q(q)`, and quantum integers.

mod laurent;
pub(crate) mod parse;
mod ratfunc;

pub use laurent::LaurentPoly;
pub use ratfunc::{laurent_gcd, RatFunc};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QArithError {
    #[error("{dividend} is not divisible by {divisor} in Z[q,q^-1]")]
    NotDivisible { dividend: String, divisor: String },
    #[error("division by zero")]
    DivisionByZero,
    #[error("quantum factorial of negative integer {0}")]
    NegativeFactorial(i64),
    #[error("parse error at {position}: {message}")]
    Parse { position: usize, message: String },
}

/// The quantum integer `[a] = (q^a - q^-a) / (q - q^-1)`.
pub fn quantum_int(a: i64) -> LaurentPoly {
    let sign = a.signum();
    let m = a.abs();
    LaurentPoly::from_terms((0..m).map(|k| (m - 1 - 2 * k, sign)))
}

/// `[a]! = [1][2]...[a]`, with `[0]! = 1`.
pub fn quantum_factorial(a: i64) -> Result<LaurentPoly, QArithError> {
    if a < 0 {
        return Err(QArithError::NegativeFactorial(a));
    }
    Ok((1..=a).fold(LaurentPoly::one(), |acc, k| &acc * &quantum_int(k)))
}

/// Quantum binomial `[a choose b]` for any integer `a`, via
/// `[a][a-1]...[a-b+1] / [b]!`.
pub fn quantum_binomial(a: i64, b: u32) -> LaurentPoly {
    let num = (0..b as i64).fold(LaurentPoly::one(), |acc, k| &acc * &quantum_int(a - k));
    let den = quantum_factorial(b as i64).expect("nonnegative");
    num.exact_divide(&den)
        .expect("quantum binomials are Laurent polynomials")
}

/// Exact quotient in `Z[q, q^-1]`; see [`LaurentPoly::exact_divide`].
pub fn exact_divide(p: &LaurentPoly, d: &LaurentPoly) -> Result<LaurentPoly, QArithError> {
    p.exact_divide(d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    /// Polynomial long division of q^{2a} - 1 by q^2 - 1, shifted, as an
    /// independent route to [a].
    fn quantum_int_by_division(a: i64) -> LaurentPoly {
        let num = &LaurentPoly::q_pow(a) - &LaurentPoly::q_pow(-a);
        let den = &LaurentPoly::q_pow(1) - &LaurentPoly::q_pow(-1);
        num.exact_divide(&den).unwrap()
    }

    #[test]
    fn quantum_int_examples() {
        assert!(quantum_int(0).is_zero());
        assert_eq!(quantum_int(2), lp("q + q^-1"));
        assert_eq!(quantum_int(3), lp("q^2 + 1 + q^-2"));
        assert_eq!(quantum_int(-3), -lp("q^2 + 1 + q^-2"));
        for a in -6..=6 {
            assert_eq!(quantum_int(a), quantum_int_by_division(a), "a={a}");
        }
    }

    #[test]
    fn factorial_examples() {
        assert_eq!(quantum_factorial(0).unwrap(), LaurentPoly::one());
        assert_eq!(quantum_factorial(2).unwrap(), lp("q + q^-1"));
        // [2][3] = (q + q^-1)(q^2 + 1 + q^-2)
        assert_eq!(quantum_factorial(3).unwrap(), lp("q^3 + 2q + 2q^-1 + q^-3"));
        assert_eq!(
            quantum_factorial(-1),
            Err(QArithError::NegativeFactorial(-1))
        );
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(quantum_binomial(2, 1), lp("q + q^-1"));
        assert_eq!(quantum_binomial(0, 0), LaurentPoly::one());
        assert_eq!(quantum_binomial(4, 2), lp("q^4 + q^2 + 2 + q^-2 + q^-4"));
        assert!(quantum_binomial(2, 3).is_zero());
        // [-1 choose 2] = [-1][-2]/[2]! = [1][2]/[2] = 1
        assert_eq!(quantum_binomial(-1, 2), LaurentPoly::one());
    }

    #[test]
    fn exact_divide_examples() {
        assert_eq!(
            exact_divide(&lp("q^2 - q^-2"), &lp("q - q^-1")).unwrap(),
            lp("q + q^-1")
        );
        assert_eq!(
            exact_divide(&lp("q + q^-1"), &lp("q + q^-1")).unwrap(),
            LaurentPoly::one()
        );
        let f3 = quantum_factorial(3).unwrap();
        let p = &f3 * &LaurentPoly::q_pow(5);
        assert_eq!(exact_divide(&p, &f3).unwrap(), LaurentPoly::q_pow(5));
        assert!(matches!(
            exact_divide(&lp("q + 1"), &lp("q + q^-1")),
            Err(QArithError::NotDivisible { .. })
        ));
        assert!(matches!(
            exact_divide(&lp("3q"), &lp("2")),
            Err(QArithError::NotDivisible { .. })
        ));
        assert_eq!(
            exact_divide(&lp("1"), &LaurentPoly::zero()),
            Err(QArithError::DivisionByZero)
        );
    }

    #[test]
    fn renders_decreasing() {
        assert_eq!(lp("-q^-2 + 1 + q^2").to_string(), "q^2 + 1 - q^-2");
        assert_eq!(lp("-2q + 3").to_string(), "-2q + 3");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(lp("q^-1").to_string(), "q^-1");
    }
}
