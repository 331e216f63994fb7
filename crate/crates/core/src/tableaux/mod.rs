//! Shapes, tableaux and standard monomials for `sl_n`.
//!
//! A shape `(m_1, ..., m_l)` (with `l = n - 1`) has `m_1` columns of height
//! one on the left, then `m_2` columns of height two, and so on; columns are
//! stored leftmost first. A standard monomial is a triangular exponent array
//! `a[r][k] = a_k^r` (`1 <= k <= r <= l`) that is weakly increasing in `k`.

mod column;
mod lemma;
mod monomial;
mod tableau;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use column::{Column, ColumnType, MAX_RANK};
pub use lemma::{lemma31_checks, Lemma31Report};
pub use monomial::{enumerate_standard_monomials, StandardMonomial};
pub use tableau::{
    column_type, compare, enumerate_all, enumerate_standard, LinearExtension, MarkedStep,
    PartialOrdering, Tableau,
};

use crate::error::{Error, Result};

fn check_rank(n: usize) -> Result<()> {
    if !(2..=MAX_RANK).contains(&n) {
        return Err(Error::InvalidArgument(format!(
            "rank n must lie in 2..={MAX_RANK}, got {n}"
        )));
    }
    Ok(())
}

/// A dominant weight `m_1 w_1 + ... + m_l w_l`, read as a tableau shape.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Shape {
    n: usize,
    mults: Vec<usize>,
}

impl Shape {
    pub fn new(n: usize, mults: Vec<usize>) -> Result<Self> {
        check_rank(n)?;
        if mults.len() != n - 1 {
            return Err(Error::InvalidArgument(format!(
                "shape for n={n} needs {} multiplicities, got {}",
                n - 1,
                mults.len()
            )));
        }
        Ok(Shape { n, mults })
    }

    pub fn empty(n: usize) -> Result<Self> {
        Shape::new(n, vec![0; n.saturating_sub(1)])
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn mults(&self) -> &[usize] {
        &self.mults
    }

    pub fn num_columns(&self) -> usize {
        self.mults.iter().sum()
    }

    pub fn num_boxes(&self) -> usize {
        self.mults.iter().enumerate().map(|(i, m)| (i + 1) * m).sum()
    }

    /// Column heights, leftmost first (weakly increasing).
    pub fn column_heights(&self) -> Vec<usize> {
        self.mults
            .iter()
            .enumerate()
            .flat_map(|(i, &m)| std::iter::repeat_n(i + 1, m))
            .collect()
    }

    /// Componentwise `self <= other`.
    pub fn fits_in(&self, other: &Shape) -> bool {
        self.n == other.n && self.mults.iter().zip(&other.mults).all(|(a, b)| a <= b)
    }

    /// Adds `extra[r]` to every multiplicity.
    pub fn enlarged(&self, extra: &[usize]) -> Shape {
        Shape {
            n: self.n,
            mults: self
                .mults
                .iter()
                .zip(extra.iter().chain(std::iter::repeat(&0)))
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Every shape of rank `n` with at most `max_boxes` boxes.
    pub fn all_up_to_boxes(n: usize, max_boxes: usize) -> Result<Vec<Shape>> {
        check_rank(n)?;
        let mut out = Vec::new();
        let mut cur = vec![0usize; n - 1];
        fn rec(i: usize, left: usize, cur: &mut Vec<usize>, n: usize, out: &mut Vec<Shape>) {
            if i == cur.len() {
                out.push(Shape {
                    n,
                    mults: cur.clone(),
                });
                return;
            }
            for m in 0..=left / (i + 1) {
                cur[i] = m;
                rec(i + 1, left - m * (i + 1), cur, n, out);
            }
            cur[i] = 0;
        }
        rec(0, max_boxes, &mut cur, n, &mut out);
        Ok(out)
    }

    /// Every shape of rank `n` with at most `max_cols` columns.
    pub fn all_up_to_columns(n: usize, max_cols: usize) -> Result<Vec<Shape>> {
        check_rank(n)?;
        let mut out = Vec::new();
        let mut cur = vec![0usize; n - 1];
        fn rec(i: usize, left: usize, cur: &mut Vec<usize>, n: usize, out: &mut Vec<Shape>) {
            if i == cur.len() {
                out.push(Shape {
                    n,
                    mults: cur.clone(),
                });
                return;
            }
            for m in 0..=left {
                cur[i] = m;
                rec(i + 1, left - m, cur, n, out);
            }
            cur[i] = 0;
        }
        rec(0, max_cols, &mut cur, n, &mut out);
        Ok(out)
    }

    /// Parses `(m1,...,ml)` (parentheses optional).
    pub fn parse(n: usize, s: &str) -> Result<Shape> {
        Shape::new(n, parse_list(s)?)
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, m) in self.mults.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{m}")?;
        }
        write!(f, ")")
    }
}

/// A weight `mu = b_1 alpha_1 + ... + b_l alpha_l` of the positive root lattice.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RootLatticeWeight {
    coeffs: Vec<usize>,
}

impl RootLatticeWeight {
    pub fn new(coeffs: Vec<usize>) -> Self {
        RootLatticeWeight { coeffs }
    }

    pub fn zero(ell: usize) -> Self {
        RootLatticeWeight {
            coeffs: vec![0; ell],
        }
    }

    /// Simple root `alpha_i` (1-based) in rank `n`.
    pub fn simple_root(n: usize, i: usize) -> Self {
        let mut coeffs = vec![0; n - 1];
        coeffs[i - 1] = 1;
        RootLatticeWeight { coeffs }
    }

    pub fn coeffs(&self) -> &[usize] {
        &self.coeffs
    }

    pub fn ell(&self) -> usize {
        self.coeffs.len()
    }

    /// `|mu| = b_1 + ... + b_l`.
    pub fn height(&self) -> usize {
        self.coeffs.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&b| b == 0)
    }

    /// The minimal sufficient shape `m_j = b_j`.
    pub fn lambda_for(&self) -> Shape {
        Shape {
            n: self.ell() + 1,
            mults: self.coeffs.clone(),
        }
    }

    /// Every weight of rank `n` with `0 < |mu| <= max_height`, ordered by
    /// height then lexicographically.
    pub fn all_up_to(n: usize, max_height: usize) -> Vec<RootLatticeWeight> {
        let ell = n - 1;
        let mut out = Vec::new();
        let mut cur = vec![0usize; ell];
        fn rec(i: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<RootLatticeWeight>) {
            if i == cur.len() {
                out.push(RootLatticeWeight::new(cur.clone()));
                return;
            }
            for b in 0..=left {
                cur[i] = b;
                rec(i + 1, left - b, cur, out);
            }
            cur[i] = 0;
        }
        rec(0, max_height, &mut cur, &mut out);
        out.retain(|w| !w.is_zero());
        out.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| a.cmp(b)));
        out
    }

    pub fn parse(n: usize, s: &str) -> Result<Self> {
        let coeffs = parse_list(s)?;
        if coeffs.len() != n - 1 {
            return Err(Error::InvalidArgument(format!(
                "weight for n={n} needs {} coefficients, got {}",
                n - 1,
                coeffs.len()
            )));
        }
        Ok(RootLatticeWeight { coeffs })
    }
}

/// The minimal shape `m_j = b_j` realizing every standard monomial of weight `mu`.
pub fn lambda_for(mu: &RootLatticeWeight) -> Shape {
    mu.lambda_for()
}

impl fmt::Display for RootLatticeWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, b) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

impl FromStr for RootLatticeWeight {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(RootLatticeWeight::new(parse_list(s)?))
    }
}

/// Comma-separated nonnegative integers, optionally wrapped in `()` or `[]`.
pub(crate) fn parse_list(s: &str) -> Result<Vec<usize>> {
    let t = s.trim();
    let t = t
        .strip_prefix('(')
        .and_then(|x| x.strip_suffix(')'))
        .or_else(|| t.strip_prefix('[').and_then(|x| x.strip_suffix(']')))
        .unwrap_or(t);
    if t.trim().is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut pos = s.find(t).unwrap_or(0);
    for part in t.split(',') {
        let v = part
            .trim()
            .parse::<usize>()
            .map_err(|_| Error::parse(pos, format!("expected a nonnegative integer, got {part:?}")))?;
        out.push(v);
        pos += part.len() + 1;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shape_layout() {
        let s = Shape::new(4, vec![3, 4, 2]).unwrap();
        assert_eq!(s.num_columns(), 9);
        assert_eq!(s.num_boxes(), 17);
        assert_eq!(s.column_heights(), vec![1, 1, 1, 2, 2, 2, 2, 3, 3]);
        assert_eq!(s.to_string(), "(3,4,2)");
        assert_eq!(Shape::parse(4, "(3,4,2)").unwrap(), s);
        assert!(Shape::new(4, vec![1, 2]).is_err());
        assert!(Shape::new(1, vec![]).is_err());
    }

    #[test]
    fn lambda_for_is_minimal() {
        let mu = RootLatticeWeight::new(vec![1, 1]);
        assert_eq!(lambda_for(&mu), Shape::new(3, vec![1, 1]).unwrap());
        assert_eq!(
            lambda_for(&RootLatticeWeight::zero(2)),
            Shape::empty(3).unwrap()
        );
    }

    #[test]
    fn shape_sweeps() {
        let shapes = Shape::all_up_to_boxes(3, 3).unwrap();
        // (0,0) (1,0) (2,0) (3,0) (0,1) (1,1)
        assert_eq!(shapes.len(), 6);
        assert!(shapes.iter().all(|s| s.num_boxes() <= 3));
        assert_eq!(RootLatticeWeight::all_up_to(3, 2).len(), 5);
    }

    #[test]
    fn list_parsing() {
        assert_eq!(parse_list("1,2, 3").unwrap(), vec![1, 2, 3]);
        assert_eq!(parse_list("(4)").unwrap(), vec![4]);
        assert!(parse_list("1,x").is_err());
    }
}
