use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::poly::{poly_divrem, poly_gcd, LaurentPoly};
use super::series::PowerSeriesTrunc;
use crate::error::{Error, Result};

/// An element of `Q(q)` in canonical form.
///
/// The denominator is an ordinary polynomial with nonzero constant term and
/// positive leading coefficient; all powers of `q` live in the numerator.
/// Numerator and denominator are coprime in `Z[q]` (no common polynomial
/// factor and no common integer content), so equal values have equal
/// representations.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalQ {
    num: LaurentPoly,
    den: LaurentPoly,
}

/// Ring-membership predicates of a rational function.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Membership {
    /// Regular at `q = 0`.
    pub in_a: bool,
    /// Regular and vanishing at `q = 0`.
    pub in_m: bool,
    /// A polynomial in `q` with integer coefficients.
    pub in_zq: bool,
    /// A Laurent polynomial with nonnegative integer coefficients.
    pub in_nqq: bool,
    /// A Laurent polynomial with integer coefficients.
    pub in_zqq: bool,
    /// `x / q` is in `Z[q]`.
    pub divisible_by_q: bool,
    pub bar_invariant: bool,
}

impl Default for RationalQ {
    fn default() -> Self {
        Self::zero()
    }
}

impl RationalQ {
    pub fn zero() -> Self {
        RationalQ {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        }
    }

    pub fn one() -> Self {
        LaurentPoly::one().into()
    }

    pub fn q_pow(e: i64) -> Self {
        LaurentPoly::q_pow(e).into()
    }

    pub fn from_int(c: i64) -> Self {
        LaurentPoly::constant(c).into()
    }

    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize(num, den))
    }

    pub fn from_rational(r: &BigRational) -> Self {
        Self::normalize(
            LaurentPoly::constant(r.numer().clone()),
            LaurentPoly::constant(r.denom().clone()),
        )
    }

    fn normalize(mut num: LaurentPoly, mut den: LaurentPoly) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return Self::zero();
        }
        let s = den.low_exponent().unwrap();
        if s != 0 {
            den.shift_in_place(-s);
            num.shift_in_place(-s);
        }
        if !den.is_constant() {
            let (nlow, ncoeffs) = num.dense();
            let (_, dcoeffs) = den.dense();
            let g = poly_gcd(ncoeffs, dcoeffs);
            if g.len() > 1 {
                let (nq, _) = poly_divrem(ncoeffs, &g).expect("gcd divides numerator");
                let (dq, _) = poly_divrem(dcoeffs, &g).expect("gcd divides denominator");
                num = LaurentPoly::from_dense(nlow, nq);
                den = LaurentPoly::from_dense(0, dq);
            }
        }
        let c = num.content().gcd(&den.content());
        if !c.is_one() {
            num = num.div_scalar_exact(&c).expect("content divides");
            den = den.div_scalar_exact(&c).expect("content divides");
        }
        if den.leading_coeff().unwrap().is_negative() {
            num = -num;
            den = -den;
        }
        RationalQ { num, den }
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

    /// True when the value is a Laurent polynomial over Z.
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_laurent(&self) -> Option<&LaurentPoly> {
        self.is_laurent().then_some(&self.num)
    }

    pub fn into_laurent(self) -> Option<LaurentPoly> {
        self.den.is_one().then_some(self.num)
    }

    pub fn bar(&self) -> Self {
        if self.den.is_constant() {
            return RationalQ {
                num: self.num.bar(),
                den: self.den.clone(),
            };
        }
        // den(q^-1) = q^-deg * rev(den); rev(den) has nonzero constant term.
        let deg = self.den.high_exponent().unwrap();
        let num = self.num.bar().shift(deg);
        let den = self.den.bar().shift(deg);
        if den.leading_coeff().unwrap().is_negative() {
            RationalQ {
                num: -num,
                den: -den,
            }
        } else {
            RationalQ { num, den }
        }
    }

    /// Multiplies by `q^e` without renormalizing.
    pub fn shift(&self, e: i64) -> Self {
        RationalQ {
            num: self.num.shift(e),
            den: self.den.clone(),
        }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &RationalQ) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    /// Divides by a Laurent polynomial. A Laurent dividend must be divisible
    /// exactly in `Z[q, q^-1]`; otherwise the quotient is taken in `Q(q)`.
    pub fn div_laurent_exact(&self, d: &LaurentPoly) -> Result<Self> {
        if self.is_laurent() {
            return Ok(self.num.div_exact(d)?.into());
        }
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize(self.num.clone(), &self.den * d))
    }

    pub fn mul_laurent(&self, p: &LaurentPoly) -> Self {
        if self.den.is_one() {
            return (&self.num * p).into();
        }
        Self::normalize(&self.num * p, self.den.clone())
    }

    /// Value at `q = 0`, if regular there.
    pub fn value_at_zero(&self) -> Option<BigRational> {
        match self.num.low_exponent() {
            None => Some(BigRational::zero()),
            Some(l) if l < 0 => None,
            Some(_) => Some(BigRational::new(
                self.num.coeff(0),
                self.den.trailing_coeff().unwrap().clone(),
            )),
        }
    }

    pub fn membership(&self) -> Membership {
        let low = self.num.low_exponent();
        let in_a = low.is_none_or(|l| l >= 0);
        let in_m = low.is_none_or(|l| l >= 1);
        let laurent = self.den.is_one();
        Membership {
            in_a,
            in_m,
            in_zq: laurent && in_a,
            in_nqq: laurent && self.num.has_nonnegative_coeffs(),
            in_zqq: laurent,
            divisible_by_q: laurent && in_m,
            bar_invariant: self.bar() == *self,
        }
    }

    pub fn series_at_zero(&self, order: i64) -> PowerSeriesTrunc {
        PowerSeriesTrunc::expand(self, order)
    }
}

impl From<LaurentPoly> for RationalQ {
    fn from(num: LaurentPoly) -> Self {
        RationalQ {
            num,
            den: LaurentPoly::one(),
        }
    }
}

impl From<i64> for RationalQ {
    fn from(c: i64) -> Self {
        RationalQ::from_int(c)
    }
}

impl From<BigInt> for RationalQ {
    fn from(c: BigInt) -> Self {
        LaurentPoly::constant(c).into()
    }
}

impl fmt::Debug for RationalQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalQ({self})")
    }
}

impl Add for &RationalQ {
    type Output = RationalQ;
    fn add(self, rhs: &RationalQ) -> RationalQ {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return (&self.num + &rhs.num).into();
        }
        if self.den == rhs.den {
            return RationalQ::normalize(&self.num + &rhs.num, self.den.clone());
        }
        RationalQ::normalize(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RationalQ {
    type Output = RationalQ;
    fn sub(self, rhs: &RationalQ) -> RationalQ {
        self + &(-rhs)
    }
}

impl Neg for &RationalQ {
    type Output = RationalQ;
    fn neg(self) -> RationalQ {
        RationalQ {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RationalQ {
    type Output = RationalQ;
    fn neg(self) -> RationalQ {
        RationalQ {
            num: -self.num,
            den: self.den,
        }
    }
}

impl Mul for &RationalQ {
    type Output = RationalQ;
    fn mul(self, rhs: &RationalQ) -> RationalQ {
        if self.is_zero() || rhs.is_zero() {
            return RationalQ::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return (&self.num * &rhs.num).into();
        }
        RationalQ::normalize(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Add for RationalQ {
    type Output = RationalQ;
    fn add(self, rhs: RationalQ) -> RationalQ {
        &self + &rhs
    }
}

impl Sub for RationalQ {
    type Output = RationalQ;
    fn sub(self, rhs: RationalQ) -> RationalQ {
        &self - &rhs
    }
}

impl Mul for RationalQ {
    type Output = RationalQ;
    fn mul(self, rhs: RationalQ) -> RationalQ {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    fn rq(n: &[(i64, i64)], d: &[(i64, i64)]) -> RationalQ {
        RationalQ::new(lp(n), lp(d)).unwrap()
    }

    #[test]
    fn canonical_form_cancels() {
        // (q^2 - 1) / (q - 1) = q + 1
        let x = rq(&[(2, 1), (0, -1)], &[(1, 1), (0, -1)]);
        assert!(x.is_laurent());
        assert_eq!(x.numer(), &lp(&[(0, 1), (1, 1)]));
        // q-powers migrate to the numerator
        let y = rq(&[(0, 1)], &[(1, 1), (3, 1)]);
        assert_eq!(y.denom(), &lp(&[(0, 1), (2, 1)]));
        assert_eq!(y.numer(), &lp(&[(-1, 1)]));
        // content and sign
        let z = rq(&[(0, 2)], &[(0, -4), (1, -4)]);
        assert_eq!(z.numer(), &lp(&[(0, -1)]));
        assert_eq!(z.denom(), &lp(&[(0, 2), (1, 2)]));
    }

    #[test]
    fn membership_examples() {
        let qinv = RationalQ::q_pow(-1);
        assert!(!qinv.membership().in_a);
        let x = rq(&[(1, 1)], &[(0, 1), (1, 1)]);
        let m = x.membership();
        assert!(m.in_a && m.in_m && !m.in_zq);
        let y: RationalQ = lp(&[(0, 1), (1, 1)]).into();
        let m = y.membership();
        assert!(m.in_zq && !m.divisible_by_q && m.in_nqq);
        assert!(RationalQ::zero().membership().divisible_by_q);
    }

    #[test]
    fn bar_of_rational() {
        let x = rq(&[(1, 1)], &[(0, 1), (1, 1)]);
        // bar(q/(1+q)) = q^-1/(1+q^-1) = 1/(1+q)
        assert_eq!(x.bar(), rq(&[(0, 1)], &[(0, 1), (1, 1)]));
        assert_eq!(x.bar().bar(), x);
        let bi = rq(&[(1, 1)], &[(0, 1), (2, 1)]);
        assert!(bi.membership().bar_invariant);
    }

    #[test]
    fn field_ops() {
        let x = rq(&[(0, 1)], &[(0, 1), (1, -1)]);
        let y = rq(&[(1, 3)], &[(0, 2), (2, 1)]);
        let s = &x + &y;
        assert_eq!(&s - &y, x);
        let p = &x * &y;
        assert_eq!(p.checked_div(&y).unwrap(), x);
        assert_eq!((&x * &x.inv().unwrap()), RationalQ::one());
    }
}
