use super::poly::LaurentPoly;
use crate::error::{Error, Result};

/// Balanced quantum integer `[n] = q^(n-1) + q^(n-3) + ... + q^(1-n)`.
///
/// Extended to negative `n` by `[-n] = -[n]`, which is what the commutator
/// `(K - K^-1)/(q - q^-1)` produces on weight vectors.
pub fn qint(n: i64) -> LaurentPoly {
    if n < 0 {
        return -qint(-n);
    }
    LaurentPoly::from_terms((0..n).map(|j| (n - 1 - 2 * j, 1)))
}

/// `[n]! = [1][2]...[n]`, with `[0]! = 1`.
pub fn qfactorial(n: u32) -> LaurentPoly {
    (1..=n as i64).fold(LaurentPoly::one(), |acc, j| &acc * &qint(j))
}

/// Gaussian binomial `[n choose k]` in the balanced convention.
pub fn qbinom(n: i64, k: i64) -> Result<LaurentPoly> {
    if k < 0 || n < 0 || k > n {
        return Err(Error::InvalidArgument(format!(
            "qbinom needs 0 <= k <= n, got n={n}, k={k}"
        )));
    }
    // product of [n-k+i]/[i]; each partial product is itself a binomial
    let mut acc = LaurentPoly::one();
    for i in 1..=k {
        acc = (&acc * &qint(n - k + i)).div_exact(&qint(i))?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn small_quantum_integers() {
        assert_eq!(qint(0), LaurentPoly::zero());
        assert_eq!(qint(1), LaurentPoly::one());
        assert_eq!(qint(2), lp(&[(1, 1), (-1, 1)]));
        // [3] * (q - q^-1) == q^3 - q^-3
        let three = qint(3);
        assert_eq!(three, lp(&[(2, 1), (0, 1), (-2, 1)]));
        assert_eq!(
            &three * &lp(&[(1, 1), (-1, -1)]),
            lp(&[(3, 1), (-3, -1)])
        );
    }

    /// Binomials by q-Pascal recurrence only; never calls qbinom.
    fn pascal(n: i64, k: i64) -> LaurentPoly {
        if k == 0 || k == n {
            return LaurentPoly::one();
        }
        &pascal(n - 1, k).shift(k) + &pascal(n - 1, k - 1).shift(k - n)
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(qbinom(5, 0).unwrap(), LaurentPoly::one());
        assert_eq!(qbinom(2, 1).unwrap(), qint(2));
        let want = lp(&[(4, 1), (2, 1), (0, 2), (-2, 1), (-4, 1)]);
        assert_eq!(pascal(4, 2), want);
        assert_eq!(qbinom(4, 2).unwrap(), want);
        assert!(qbinom(2, 3).is_err());
        assert!(qbinom(2, -1).is_err());
    }

    #[test]
    fn pascal_recurrences_and_bar_invariance() {
        for n in 1..=10 {
            assert!(qint(n).is_bar_invariant());
            for k in 0..=n {
                let b = qbinom(n, k).unwrap();
                assert!(b.is_bar_invariant());
                assert_eq!(b, pascal(n, k));
                if k >= 1 && k < n {
                    let left = &qbinom(n - 1, k).unwrap().shift(k)
                        + &qbinom(n - 1, k - 1).unwrap().shift(k - n);
                    let right = &qbinom(n - 1, k).unwrap().shift(-k)
                        + &qbinom(n - 1, k - 1).unwrap().shift(n - k);
                    assert_eq!(b, left);
                    assert_eq!(b, right);
                }
            }
        }
    }

    #[test]
    fn factorial_matches_binomial() {
        for n in 0..=6u32 {
            for k in 0..=n {
                let lhs = &(&qfactorial(k) * &qfactorial(n - k)) * &qbinom(n as i64, k as i64).unwrap();
                assert_eq!(lhs, qfactorial(n));
            }
        }
    }
}
