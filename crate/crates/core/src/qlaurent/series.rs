use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::LaurentPoly;
use super::rational::RationalQ;

/// Truncated Laurent expansion of a rational function at `q = 0`.
///
/// `coefficients[i]` is the coefficient of `q^(lowest_exponent + i)`, listed
/// through `truncation_order` inclusive. `lowest_exponent` is the exact
/// valuation of the expanded function, so the first coefficient is nonzero
/// whenever any are listed. The zero function has no coefficients and
/// `lowest_exponent = truncation_order + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSeriesTrunc {
    pub lowest_exponent: i64,
    pub coefficients: Vec<BigRational>,
    pub truncation_order: i64,
}

impl PowerSeriesTrunc {
    pub(crate) fn expand(x: &RationalQ, order: i64) -> Self {
        let Some(val) = x.numer().low_exponent() else {
            return PowerSeriesTrunc {
                lowest_exponent: order + 1,
                coefficients: Vec::new(),
                truncation_order: order,
            };
        };
        let (_, num) = x.numer().dense();
        let (_, den) = x.denom().dense();
        let len = (order - val + 1).max(0) as usize;
        let d0 = BigRational::from_integer(den[0].clone());
        let mut out: Vec<BigRational> = Vec::with_capacity(len);
        for j in 0..len {
            let mut acc = BigRational::from_integer(num.get(j).cloned().unwrap_or_default());
            for i in 1..=j.min(den.len() - 1) {
                acc -= &out[j - i] * BigRational::from_integer(den[i].clone());
            }
            out.push(acc / &d0);
        }
        PowerSeriesTrunc {
            lowest_exponent: val,
            coefficients: out,
            truncation_order: order,
        }
    }

    pub fn coeff(&self, e: i64) -> BigRational {
        if e < self.lowest_exponent || e > self.truncation_order {
            return BigRational::zero();
        }
        self.coefficients[(e - self.lowest_exponent) as usize].clone()
    }

    /// Sum of the listed terms, as an element of `Q(q)`.
    pub fn to_rational(&self) -> RationalQ {
        let denom = self
            .coefficients
            .iter()
            .fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        let num = LaurentPoly::from_terms(self.coefficients.iter().enumerate().map(|(i, c)| {
            (
                self.lowest_exponent + i as i64,
                c.numer() * (&denom / c.denom()),
            )
        }));
        RationalQ::new(num, LaurentPoly::constant(denom)).expect("nonzero denominator")
    }

    /// The terms of nonpositive exponent, provided all are integers.
    pub fn principal_part(&self) -> Option<LaurentPoly> {
        let mut terms = Vec::new();
        for (i, c) in self.coefficients.iter().enumerate() {
            let e = self.lowest_exponent + i as i64;
            if e > 0 {
                break;
            }
            if !c.is_integer() {
                return None;
            }
            terms.push((e, c.to_integer()));
        }
        Some(LaurentPoly::from_terms(terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    fn int(c: i64) -> BigRational {
        BigRational::from_integer(c.into())
    }

    #[test]
    fn geometric_series() {
        let x = RationalQ::new(lp(&[(0, 1)]), lp(&[(0, 1), (1, -1)])).unwrap();
        let s = x.series_at_zero(2);
        assert_eq!(s.lowest_exponent, 0);
        assert_eq!(s.coefficients, vec![int(1), int(1), int(1)]);
    }

    #[test]
    fn pole_at_zero() {
        let s = RationalQ::q_pow(-1).series_at_zero(0);
        assert_eq!(s.lowest_exponent, -1);
        assert_eq!(s.coefficients, vec![int(1), int(0)]);
        assert_eq!(s.coeff(-1), int(1));
    }

    #[test]
    fn simplifies_before_expanding() {
        // (q + q^3) / (1 + q^2) = q exactly; check the oracle first.
        let x = RationalQ::new(lp(&[(1, 1), (3, 1)]), lp(&[(0, 1), (2, 1)])).unwrap();
        assert_eq!(x, RationalQ::q_pow(1));
        let s = x.series_at_zero(3);
        assert_eq!(s.lowest_exponent, 1);
        assert_eq!(s.coefficients, vec![int(1), int(0), int(0)]);
    }

    #[test]
    fn rational_coefficients() {
        // 1 / (2 - q) = 1/2 + q/4 + q^2/8 + ...
        let x = RationalQ::new(lp(&[(0, 1)]), lp(&[(0, 2), (1, -1)])).unwrap();
        let s = x.series_at_zero(2);
        assert_eq!(
            s.coefficients,
            vec![
                BigRational::new(1.into(), 2.into()),
                BigRational::new(1.into(), 4.into()),
                BigRational::new(1.into(), 8.into())
            ]
        );
        assert!(s.principal_part().is_none());
    }

    #[test]
    fn zero_series() {
        let s = RationalQ::zero().series_at_zero(3);
        assert!(s.coefficients.is_empty());
        assert_eq!(s.lowest_exponent, 4);
        assert_eq!(s.to_rational(), RationalQ::zero());
    }
}
