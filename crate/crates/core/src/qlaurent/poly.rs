use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// An integer Laurent polynomial in `q`.
///
/// Stored densely: `coeffs[i]` is the coefficient of `q^(low + i)`. The first
/// and last stored coefficients are nonzero; the zero polynomial has no
/// coefficients and `low == 0`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    low: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * q^e`.
    pub fn monomial(c: impl Into<BigInt>, e: i64) -> Self {
        Self::from_dense(e, vec![c.into()])
    }

    /// `q^e`.
    pub fn q_pow(e: i64) -> Self {
        Self::monomial(1, e)
    }

    /// Builds from `coeffs[i]` = coefficient of `q^(low + i)`.
    pub fn from_dense(low: i64, coeffs: Vec<BigInt>) -> Self {
        let mut p = LaurentPoly { low, coeffs };
        p.trim();
        p
    }

    /// Builds from `(exponent, coefficient)` pairs; repeated exponents are summed.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let terms: Vec<(i64, BigInt)> = terms.into_iter().map(|(e, c)| (e, c.into())).collect();
        let Some(lo) = terms.iter().map(|t| t.0).min() else {
            return Self::zero();
        };
        let hi = terms.iter().map(|t| t.0).max().unwrap();
        let mut coeffs = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (e, c) in terms {
            coeffs[(e - lo) as usize] += c;
        }
        Self::from_dense(lo, coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i64;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// True for a nonzero constant or the zero polynomial.
    pub fn is_constant(&self) -> bool {
        self.is_zero() || (self.low == 0 && self.coeffs.len() == 1)
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn low_exponent(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.low)
    }

    /// Highest exponent with a nonzero coefficient.
    pub fn high_exponent(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i64 - 1)
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        if e < self.low {
            return BigInt::zero();
        }
        self.coeffs
            .get((e - self.low) as usize)
            .cloned()
            .unwrap_or_default()
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn trailing_coeff(&self) -> Option<&BigInt> {
        self.coeffs.first()
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.low + i as i64, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    /// Multiplies by `q^e`.
    pub fn shift(&self, e: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            low: self.low + e,
            coeffs: self.coeffs.clone(),
        }
    }

    pub(crate) fn shift_in_place(&mut self, e: i64) {
        if !self.is_zero() {
            self.low += e;
        }
    }

    /// The substitution `q -> q^-1`.
    pub fn bar(&self) -> Self {
        match self.high_exponent() {
            None => Self::zero(),
            Some(hi) => {
                let mut coeffs = self.coeffs.clone();
                coeffs.reverse();
                LaurentPoly { low: -hi, coeffs }
            }
        }
    }

    pub fn is_bar_invariant(&self) -> bool {
        *self == self.bar()
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Gcd of the coefficients (nonnegative; zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            low: self.low,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Divides every coefficient by `c`, which must divide all of them.
    pub fn div_scalar_exact(&self, c: &BigInt) -> Result<Self> {
        if c.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut out = Vec::with_capacity(self.coeffs.len());
        for x in &self.coeffs {
            let (d, r) = x.div_rem(c);
            if !r.is_zero() {
                return Err(Error::InexactDivision(format!("{self} by {c}")));
            }
            out.push(d);
        }
        Ok(LaurentPoly {
            low: self.low,
            coeffs: out,
        })
    }

    /// Exact quotient `self / d` in `Z[q, q^-1]`; errors if `d` does not divide `self`.
    pub fn div_exact(&self, d: &LaurentPoly) -> Result<LaurentPoly> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        if d.coeffs.len() == 1 {
            let q = self.div_scalar_exact(&d.coeffs[0])?;
            return Ok(q.shift(-d.low));
        }
        match poly_divrem(&self.coeffs, &d.coeffs) {
            Some((quot, rem)) if rem.iter().all(Zero::is_zero) => {
                Ok(LaurentPoly::from_dense(self.low - d.low, quot))
            }
            _ => Err(Error::InexactDivision(format!("{self} by {d}"))),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Dense coefficients from exponent `low` upward, together with `low`.
    pub(crate) fn dense(&self) -> (i64, &[BigInt]) {
        (self.low, &self.coeffs)
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::constant(c)
    }
}

impl From<BigInt> for LaurentPoly {
    fn from(c: BigInt) -> Self {
        LaurentPoly::constant(c)
    }
}

fn add_into(acc: &mut LaurentPoly, other: &LaurentPoly, negate: bool) {
    if other.is_zero() {
        return;
    }
    if acc.is_zero() {
        *acc = if negate { -other } else { other.clone() };
        return;
    }
    let lo = acc.low.min(other.low);
    let hi = acc.high_exponent().unwrap().max(other.high_exponent().unwrap());
    if lo < acc.low {
        let pad = (acc.low - lo) as usize;
        let mut v = vec![BigInt::zero(); pad];
        v.append(&mut acc.coeffs);
        acc.coeffs = v;
        acc.low = lo;
    }
    acc.coeffs.resize((hi - lo + 1) as usize, BigInt::zero());
    let off = (other.low - lo) as usize;
    for (i, c) in other.coeffs.iter().enumerate() {
        if negate {
            acc.coeffs[off + i] -= c;
        } else {
            acc.coeffs[off + i] += c;
        }
    }
    acc.trim();
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        add_into(self, rhs, false);
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        add_into(self, rhs, true);
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self -= &rhs;
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            low: self.low,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for c in &mut self.coeffs {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly::from_dense(self.low + rhs.low, poly_mul(&self.coeffs, &rhs.coeffs))
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl PartialOrd for LaurentPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Total order used only for deterministic sorting.
impl Ord for LaurentPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.low
            .cmp(&other.low)
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

// Dense polynomial helpers over Z. Index = degree.

pub(crate) fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_trim(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

/// Division with remainder over Z; `None` if some step needs a non-integral quotient.
pub(crate) fn poly_divrem(a: &[BigInt], d: &[BigInt]) -> Option<(Vec<BigInt>, Vec<BigInt>)> {
    let mut rem: Vec<BigInt> = a.to_vec();
    poly_trim(&mut rem);
    let mut d = d.to_vec();
    poly_trim(&mut d);
    let dl = d.len();
    if rem.len() < dl {
        return Some((Vec::new(), rem));
    }
    let lc = d.last().unwrap().clone();
    let mut quot = vec![BigInt::zero(); rem.len() - dl + 1];
    while rem.len() >= dl {
        let top = rem.last().unwrap();
        let (qc, r) = top.div_rem(&lc);
        if !r.is_zero() {
            return None;
        }
        let shift = rem.len() - dl;
        for (i, c) in d.iter().enumerate() {
            rem[shift + i] -= &qc * c;
        }
        quot[shift] = qc;
        poly_trim(&mut rem);
    }
    Some((quot, rem))
}

fn poly_content(a: &[BigInt]) -> BigInt {
    a.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

fn poly_primitive(a: &[BigInt]) -> Vec<BigInt> {
    let g = poly_content(a);
    if g.is_zero() || g.is_one() {
        return a.to_vec();
    }
    a.iter().map(|c| c / &g).collect()
}

/// Pseudo-remainder of `a` by `b` (both nonzero, deg a >= deg b).
fn poly_prem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut rem = a.to_vec();
    let lb = b.last().unwrap().clone();
    let db = b.len();
    while rem.len() >= db {
        let lr = rem.last().unwrap().clone();
        let shift = rem.len() - db;
        for c in rem.iter_mut() {
            *c *= &lb;
        }
        for (i, c) in b.iter().enumerate() {
            rem[shift + i] -= &lr * c;
        }
        poly_trim(&mut rem);
        rem = poly_primitive(&rem);
    }
    rem
}

/// Primitive gcd over Z[q] of two polynomials (no content), positive leading coefficient.
pub(crate) fn poly_gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut a = poly_primitive(a);
    let mut b = poly_primitive(b);
    poly_trim(&mut a);
    poly_trim(&mut b);
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        if b.len() == 1 {
            return vec![BigInt::one()];
        }
        let r = poly_prem(&a, &b);
        a = b;
        b = poly_primitive(&r);
    }
    let mut g = poly_primitive(&a);
    if g.last().is_some_and(Signed::is_negative) {
        for c in &mut g {
            *c = -std::mem::take(c);
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn zero_has_no_terms() {
        let z = p(&[(3, 1), (3, -1)]);
        assert!(z.is_zero());
        assert_eq!(z, LaurentPoly::zero());
        assert_eq!(z.num_terms(), 0);
    }

    #[test]
    fn arithmetic_basics() {
        let a = p(&[(-1, 1), (1, 1)]);
        let b = p(&[(-1, 1), (1, -1)]);
        assert_eq!(&a * &b, p(&[(-2, 1), (2, -1)]));
        assert_eq!(&a + &b, p(&[(-1, 2)]));
        assert_eq!(&a - &a, LaurentPoly::zero());
        assert_eq!(a.bar(), a);
        assert_eq!(LaurentPoly::q_pow(1).bar(), LaurentPoly::q_pow(-1));
    }

    #[test]
    fn exact_division() {
        let num = p(&[(-3, 1), (3, -1)]);
        let den = p(&[(-1, 1), (1, -1)]);
        assert_eq!(num.div_exact(&den).unwrap(), p(&[(-2, 1), (0, 1), (2, 1)]));
        assert!(p(&[(0, 1)]).div_exact(&p(&[(0, 1), (1, 1)])).is_err());
        assert!(p(&[(0, 1)]).div_exact(&LaurentPoly::constant(2)).is_err());
        assert_eq!(
            p(&[(2, 4)]).div_exact(&p(&[(1, 2)])).unwrap(),
            p(&[(1, 2)])
        );
    }

    #[test]
    fn gcd_of_polys() {
        let a: Vec<BigInt> = [1, 0, -1].iter().map(|&x| x.into()).collect();
        let b: Vec<BigInt> = [1, 1].iter().map(|&x| x.into()).collect();
        assert_eq!(poly_gcd(&a, &b), b);
        let c: Vec<BigInt> = [2, 0, 2].iter().map(|&x| x.into()).collect();
        assert_eq!(poly_gcd(&c, &b), vec![BigInt::one()]);
    }
}
