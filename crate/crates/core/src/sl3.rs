//! Closed forms for the weight spaces of `U_q^-(sl_3)` spanned by
//! `F_1^{(a)} F_2^{(b)} F_1^{(c)}`, used as independent oracles for the
//! general machinery.
//!
//! At weight `k alpha_1 + b alpha_2` the standard monomials are
//! `(k - s, b, s)` for `0 <= s <= min(b, k)`. Matrices here are indexed by
//! `s` along rows and `t` along columns, so `A` is lower triangular.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bases::{dual_smt, BasisMatrix, Label};
use crate::error::{Error, Result};
use crate::qlaurent::{qbinom, LaurentPoly, RationalQ};
use crate::report::{Check, Report};
use crate::tableaux::{RootLatticeWeight, StandardMonomial};

/// `F_1^{(a)} F_2^{(b)} F_1^{(c)}` with `b >= c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Sl3Monomial {
    pub a: u32,
    pub b: u32,
    pub c: u32,
}

impl Sl3Monomial {
    pub fn new(a: u32, b: u32, c: u32) -> Result<Self> {
        if c > b {
            return Err(Error::NonStandardMonomial(format!("({a},{b},{c}) has c > b")));
        }
        Ok(Sl3Monomial { a, b, c })
    }

    pub fn weight(&self) -> RootLatticeWeight {
        RootLatticeWeight::new(vec![(self.a + self.c) as usize, self.b as usize])
    }

    pub fn to_standard(self) -> StandardMonomial {
        StandardMonomial::from_nested(3, &[vec![self.a], vec![self.b, self.c]])
            .expect("b >= c makes the monomial standard")
    }

    pub fn from_standard(m: &StandardMonomial) -> Result<Self> {
        if m.rank() != 3 {
            return Err(Error::InvalidArgument(format!("{m} is not a rank 3 monomial")));
        }
        Sl3Monomial::new(m.a(1, 1), m.a(2, 2), m.a(2, 1))
    }

    pub fn label(self) -> Label {
        Label::Triple(self.a, self.b, self.c)
    }
}

impl fmt::Display for Sl3Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.a, self.b, self.c)
    }
}

/// Lexicographic in `(c, a, b)`.
pub fn sl3_compare(x: &Sl3Monomial, y: &Sl3Monomial) -> Ordering {
    (x.c, x.a, x.b).cmp(&(y.c, y.a, y.b))
}

/// The family `(k - s, b, s)` of standard monomials of weight `(k, b)`.
pub fn family(b: u32, k: u32) -> Vec<Sl3Monomial> {
    (0..=b.min(k)).map(|s| Sl3Monomial { a: k - s, b, c: s }).collect()
}

/// Coefficient of `s(k - t, b, t)` in `F(k - s, b, s)`:
/// `q^{(s-t)(b-t)} [k-t choose s-t]`.
pub fn n_closed(b: u32, k: u32, s: u32, t: u32) -> Result<LaurentPoly> {
    if t > s || s > b.min(k) {
        return Err(Error::InvalidArgument(format!(
            "need 0 <= t <= s <= min(b, k), got b={b}, k={k}, s={s}, t={t}"
        )));
    }
    let (b, k, s, t) = (i64::from(b), i64::from(k), i64::from(s), i64::from(t));
    Ok(qbinom(k - t, s - t)?.shift((s - t) * (b - t)))
}

/// `(-1)^{s-t} q^{(s-t)(b-s+1)} [k-t choose s-t]`.
fn n_inverse_closed(b: u32, k: u32, s: u32, t: u32) -> LaurentPoly {
    let (b, k, s, t) = (i64::from(b), i64::from(k), i64::from(s), i64::from(t));
    let p = qbinom(k - t, s - t).expect("t <= s <= k").shift((s - t) * (b - s + 1));
    if (s - t) % 2 == 0 {
        p
    } else {
        -p
    }
}

fn family_matrix(b: u32, k: u32, name: &str, entry: impl Fn(u32, u32) -> LaurentPoly) -> BasisMatrix {
    let labels: Vec<Label> = family(b, k).into_iter().map(Sl3Monomial::label).collect();
    let mu = RootLatticeWeight::new(vec![k as usize, b as usize]);
    let mut m = BasisMatrix::zeros(name, 3, &mu, None, labels.clone(), labels);
    let d = b.min(k);
    for s in 0..=d {
        for t in 0..=s {
            m.set(s as usize, t as usize, entry(s, t).into());
        }
    }
    m
}

/// `A[s][t] = n_closed(b, k, s, t)` for `t <= s`, zero above the diagonal.
pub fn a_matrix(b: u32, k: u32) -> BasisMatrix {
    family_matrix(b, k, "A", |s, t| n_closed(b, k, s, t).expect("in range"))
}

pub fn a_inverse_closed(b: u32, k: u32) -> BasisMatrix {
    family_matrix(b, k, "A_inverse", |s, t| n_inverse_closed(b, k, s, t))
}

/// Compares `q^{s(b-k-1)} sum q^{2(i_1 + ... + i_s)}` over `1 <= i_1 < ... < i_s <= k`
/// with `q^{sb} [k choose s]`.
pub fn lusztig_131c(b: i64, k: u32, s: u32) -> bool {
    if s > k {
        return false;
    }
    let mut sum = LaurentPoly::zero();
    let mut tuple: Vec<u32> = (1..=s).collect();
    loop {
        let total: u32 = tuple.iter().sum();
        sum += &LaurentPoly::q_pow(2 * i64::from(total));
        // next increasing tuple in 1..=k
        let Some(pos) = (0..s as usize).rev().find(|&i| tuple[i] < k - (s - 1 - i as u32)) else {
            break;
        };
        tuple[pos] += 1;
        for i in pos + 1..s as usize {
            tuple[i] = tuple[i - 1] + 1;
        }
    }
    let (k, s) = (i64::from(k), i64::from(s));
    let lhs = sum.shift(s * (b - k - 1));
    let rhs = qbinom(k, s).expect("s <= k").shift(s * b);
    lhs == rhs
}

/// `sum_j (-1)^j q^{j(m-1)} [m choose j]` is `1` for `m = 0` and `0` otherwise.
pub fn alternating_134a(m: u32) -> bool {
    let m = i64::from(m);
    let sum = (0..=m).fold(LaurentPoly::zero(), |acc, j| {
        let term = qbinom(m, j).expect("j <= m").shift(j * (m - 1));
        if j % 2 == 0 {
            acc + term
        } else {
            acc - term
        }
    });
    sum == if m == 0 { LaurentPoly::one() } else { LaurentPoly::zero() }
}

/// Runs the general pipeline at weight `(k, b)` and compares the expansion
/// coefficients and the dual basis coordinates with the closed forms.
pub fn cross_validate(b: u32, k: u32) -> Result<Report> {
    let mu = RootLatticeWeight::new(vec![k as usize, b as usize]);
    let dual = dual_smt(&mu, None)?;
    let fam = family(b, k);
    let index = |m: &StandardMonomial| -> Result<usize> {
        let t = Sl3Monomial::from_standard(m)?;
        Ok(t.c as usize)
    };
    let mut report = Report::new(format!("sl3 closed forms b={b} k={k}"));
    let mut n_witness = None;
    let mut inv_witness = None;
    let labels: Vec<usize> = dual
        .n_s
        .cols
        .iter()
        .map(|l| match l {
            Label::Monomial(m) => index(m),
            other => Err(Error::InvalidArgument(format!("unexpected label {other}"))),
        })
        .collect::<Result<_>>()?;
    if labels.len() != fam.len() {
        n_witness = Some(format!("{} monomials computed, {} expected", labels.len(), fam.len()));
    }
    let zero = RationalQ::zero();
    for (i, &t) in labels.iter().enumerate() {
        for (j, &s) in labels.iter().enumerate() {
            // N_s[t, s] is the coefficient of s(k-t, b, t) in F(k-s, b, s)
            let (expect_n, expect_inv) = if t <= s {
                (
                    RationalQ::from(n_closed(b, k, s as u32, t as u32)?),
                    RationalQ::from(n_inverse_closed(b, k, s as u32, t as u32)),
                )
            } else {
                (zero.clone(), zero.clone())
            };
            if *dual.n_s.get(i, j) != expect_n && n_witness.is_none() {
                n_witness = Some(format!("(s,t)=({s},{t}): computed {}, closed form {expect_n}", dual.n_s.get(i, j)));
            }
            if *dual.coords.get(i, j) != expect_inv && inv_witness.is_none() {
                inv_witness = Some(format!(
                    "(s,t)=({s},{t}): computed {}, closed form {expect_inv}",
                    dual.coords.get(i, j)
                ));
            }
        }
    }
    let cases = labels.len() * labels.len();
    report.push(Check::from_witness("expansion coefficients match the closed form", cases, n_witness));
    report.push(Check::from_witness("dual basis coordinates match the closed inverse", cases, inv_witness));
    Ok(report)
}
