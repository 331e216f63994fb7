use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

use super::column::{Column, ColumnType};
use super::monomial::StandardMonomial;
use super::{check_rank, RootLatticeWeight, Shape};
use crate::error::{Error, Result};

/// Outcome of comparing two tableaux in the column partial order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum PartialOrdering {
    Less,
    Equal,
    Greater,
    Incomparable,
}

impl PartialOrdering {
    pub fn is_le(self) -> bool {
        matches!(self, PartialOrdering::Less | PartialOrdering::Equal)
    }
}

/// Which linear extension of the partial order to use for indexing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum LinearExtension {
    /// Columns compared by their entry lists read top-down.
    #[default]
    Lex,
    /// Columns compared by their entry lists read bottom-up.
    Colex,
}

impl LinearExtension {
    pub fn cmp(self, x: &Tableau, y: &Tableau) -> Ordering {
        match self {
            LinearExtension::Lex => x.cmp(y),
            LinearExtension::Colex => {
                for (a, b) in x.cols.iter().zip(&y.cols) {
                    match a.colex_cmp(*b) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                x.cols.len().cmp(&y.cols.len())
            }
        }
    }

    pub fn sort(self, v: &mut [Tableau]) {
        v.sort_by(|a, b| self.cmp(a, b));
    }
}

/// A column-strict filling of a shape by `1..=n`.
///
/// The derived order (leftmost column first, columns lexicographic) is a
/// linear extension of [`compare`] on tableaux of a fixed shape.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    n: u8,
    cols: Vec<Column>,
}

/// One step of the inductive monomial construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkedStep {
    /// Index of the simple root.
    pub c: usize,
    /// Number of marked entries.
    pub k: usize,
    /// The tableau with every marked `c + 1` lowered to `c`.
    pub tau: Tableau,
    /// 0-based indices of the marked columns.
    pub marked: Vec<usize>,
}

impl Tableau {
    /// Builds from columns given as entry lists, leftmost first.
    pub fn new(n: usize, columns: &[Vec<u8>]) -> Result<Self> {
        check_rank(n)?;
        let cols = columns
            .iter()
            .map(|c| Column::from_entries(c, n))
            .collect::<Result<Vec<_>>>()?;
        Self::from_columns(n, cols)
    }

    pub fn from_columns(n: usize, cols: Vec<Column>) -> Result<Self> {
        check_rank(n)?;
        let mut prev = 0;
        for c in &cols {
            let h = c.height();
            if h >= n {
                return Err(Error::InvalidTableau(format!(
                    "column {c} has height {h} >= n = {n}"
                )));
            }
            if h < prev {
                return Err(Error::InvalidTableau(
                    "column heights must weakly increase left to right".into(),
                ));
            }
            if c.entries().any(|e| e as usize > n) {
                return Err(Error::InvalidTableau(format!("column {c} exceeds n = {n}")));
            }
            prev = h;
        }
        Ok(Tableau { n: n as u8, cols })
    }

    pub(crate) fn from_columns_unchecked(n: usize, cols: Vec<Column>) -> Self {
        Tableau { n: n as u8, cols }
    }

    /// The minimum tableau: row `r` is constantly `r`.
    pub fn smallest(shape: &Shape) -> Tableau {
        Tableau {
            n: shape.rank() as u8,
            cols: shape.column_heights().into_iter().map(Column::smallest).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.n as usize
    }

    pub fn columns(&self) -> &[Column] {
        &self.cols
    }

    pub fn shape(&self) -> Shape {
        let mut mults = vec![0; self.rank() - 1];
        for c in &self.cols {
            mults[c.height() - 1] += 1;
        }
        Shape::new(self.rank(), mults).expect("valid rank")
    }

    pub(crate) fn with_column(&self, j: usize, col: Column) -> Tableau {
        let mut cols = self.cols.clone();
        cols[j] = col;
        Tableau { n: self.n, cols }
    }

    pub fn is_smallest(&self) -> bool {
        self.cols.iter().all(|c| c.is_smallest())
    }

    /// Rows non-increasing rightwards.
    pub fn is_standard(&self) -> bool {
        self.cols.windows(2).all(|w| {
            let (left, right) = (w[0], w[1]);
            left.entries().zip(right.entries()).all(|(a, b)| a >= b)
        })
    }

    /// Every entry on row `r` exceeding `r` is the last entry of its column.
    pub fn is_special(&self) -> bool {
        self.cols.iter().all(|c| {
            let h = c.height();
            c.entries().take(h - 1).enumerate().all(|(i, e)| e as usize == i + 1)
        })
    }

    /// `sum_{r,k} a_k^r alpha_k`.
    pub fn weight(&self) -> RootLatticeWeight {
        let mut acc = vec![0i64; self.rank() - 1];
        for c in &self.cols {
            c.add_weight(&mut acc, 1);
        }
        RootLatticeWeight::new(acc.into_iter().map(|b| b as usize).collect())
    }

    /// `a_k^r`: entries equal to `r + 1` among the top `k` rows.
    pub fn exponent(&self, r: usize, k: usize) -> u32 {
        self.cols
            .iter()
            .filter(|c| c.row_of(r + 1).is_some_and(|row| row <= k))
            .count() as u32
    }

    /// The standard monomial read off a standard tableau.
    pub fn monomial(&self) -> Result<StandardMonomial> {
        if !self.is_standard() {
            return Err(Error::NotStandard(self.to_string()));
        }
        let ell = self.rank() - 1;
        let levels = (1..=ell)
            .map(|r| (1..=r).map(|k| self.exponent(r, k)).collect())
            .collect();
        // standardness of the result is checked by the constructor
        StandardMonomial::new(self.rank(), levels)
    }

    /// The least `c` with `c + 1` on some row `<= c`, its marked entries, and
    /// the tableau obtained by lowering them.
    pub fn marked_step(&self) -> Result<MarkedStep> {
        if !self.is_standard() {
            return Err(Error::NotStandard(self.to_string()));
        }
        let c = self
            .cols
            .iter()
            .flat_map(|col| {
                col.entries()
                    .enumerate()
                    .filter(|&(i, e)| e as usize > i + 1)
                    .map(|(_, e)| e as usize - 1)
            })
            .min()
            .ok_or(Error::SmallestTableau)?;
        let marked: Vec<usize> = self
            .cols
            .iter()
            .enumerate()
            .filter(|(_, col)| col.row_of(c + 1).is_some_and(|row| row <= c))
            .map(|(j, _)| j)
            .collect();
        let mut cols = self.cols.clone();
        for &j in &marked {
            cols[j] = cols[j].lower(c);
        }
        Ok(MarkedStep {
            c,
            k: marked.len(),
            tau: Tableau { n: self.n, cols },
            marked,
        })
    }

    /// The word `(c, k)` produced by iterating [`Tableau::marked_step`], leftmost factor first.
    pub fn marked_word(&self) -> Result<Vec<(usize, u32)>> {
        let mut word = Vec::new();
        let mut cur = self.clone();
        while !cur.is_smallest() {
            let step = cur.marked_step()?;
            word.push((step.c, step.k as u32));
            cur = step.tau;
        }
        Ok(word)
    }

    /// Inserts smallest columns so that the result has shape `target`.
    pub fn embed(&self, target: &Shape) -> Result<Tableau> {
        let shape = self.shape();
        if !shape.fits_in(target) {
            return Err(Error::ShapeMismatch(shape.to_string(), target.to_string()));
        }
        let mut cols = Vec::with_capacity(target.num_columns());
        let mut it = self.cols.iter().peekable();
        for (i, (&m, &m2)) in shape.mults().iter().zip(target.mults()).enumerate() {
            let h = i + 1;
            for _ in 0..m {
                cols.push(*it.next().unwrap());
            }
            cols.extend(std::iter::repeat_n(Column::smallest(h), m2 - m));
        }
        Ok(Tableau { n: self.n, cols })
    }

    /// Deletes every smallest column; the canonical representative of a
    /// special tableau's equivalence class.
    pub fn minimal_representative(&self) -> Tableau {
        Tableau {
            n: self.n,
            cols: self.cols.iter().copied().filter(|c| !c.is_smallest()).collect(),
        }
    }

    /// Rows right-justified, as in hand-drawn figures.
    pub fn to_rows_string(&self) -> String {
        let m = self.cols.len();
        let hmax = self.cols.last().map_or(0, |c| c.height());
        let width = if self.n >= 10 { 3 } else { 2 };
        let mut out = String::new();
        for r in 1..=hmax {
            let mut line = String::new();
            for c in &self.cols {
                match c.entry(r) {
                    Some(e) => line.push_str(&format!("{e:>width$}")),
                    None => line.push_str(&" ".repeat(width)),
                }
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        if m == 0 {
            out.push_str("(empty)\n");
        }
        out
    }

    /// Parses the bracketed-columns encoding, e.g. `[[1],[1,2]]`.
    pub fn parse(n: usize, s: &str) -> Result<Tableau> {
        let cols: Vec<Vec<u8>> = serde_json::from_str(s.trim()).map_err(|e| {
            Error::parse(e.column().saturating_sub(1), format!("bad tableau encoding: {e}"))
        })?;
        Tableau::new(n, &cols)
    }

    pub fn to_lists(&self) -> Vec<Vec<u8>> {
        self.cols.iter().map(|c| c.to_vec()).collect()
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.cols.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Compares two tableaux of one shape at their first differing column.
pub fn compare(x: &Tableau, y: &Tableau) -> Result<PartialOrdering> {
    let (sx, sy) = (x.shape(), y.shape());
    if sx != sy {
        return Err(Error::ShapeMismatch(sx.to_string(), sy.to_string()));
    }
    Ok(compare_same_shape(x, y))
}

pub(crate) fn compare_same_shape(x: &Tableau, y: &Tableau) -> PartialOrdering {
    match x.cols.iter().zip(&y.cols).find(|(a, b)| a != b) {
        None => PartialOrdering::Equal,
        Some((a, b)) if a.leq(*b) => PartialOrdering::Less,
        Some((a, b)) if b.leq(*a) => PartialOrdering::Greater,
        Some(_) => PartialOrdering::Incomparable,
    }
}

/// Type of a column with respect to `alpha_c`.
pub fn column_type(col: Column, c: usize) -> ColumnType {
    col.kind(c)
}

struct Candidates {
    by_height: Vec<Vec<(Column, Vec<i64>)>>,
}

impl Candidates {
    fn new(n: usize) -> Self {
        let by_height = (0..n)
            .map(|h| {
                if h == 0 {
                    return Vec::new();
                }
                Column::all_of_height(h, n)
                    .into_iter()
                    .map(|c| {
                        let mut w = vec![0i64; n - 1];
                        c.add_weight(&mut w, 1);
                        (c, w)
                    })
                    .collect()
            })
            .collect();
        Candidates { by_height }
    }
}

fn enumerate(shape: &Shape, weight: Option<&RootLatticeWeight>, standard: bool) -> Vec<Tableau> {
    let n = shape.rank();
    let heights = shape.column_heights();
    let cands = Candidates::new(n);
    let mut budget: Option<Vec<i64>> = weight.map(|w| w.coeffs().iter().map(|&b| b as i64).collect());
    if let (Some(w), Some(b)) = (weight, &budget) {
        if w.ell() != n - 1 || b.iter().any(|&x| x < 0) {
            return Vec::new();
        }
    }
    let mut out = Vec::new();
    let mut cur: Vec<Column> = Vec::with_capacity(heights.len());

    #[allow(clippy::too_many_arguments)]
    fn rec(
        j: usize,
        heights: &[usize],
        cands: &Candidates,
        budget: &mut Option<Vec<i64>>,
        standard: bool,
        cur: &mut Vec<Column>,
        n: usize,
        out: &mut Vec<Tableau>,
    ) {
        if j == heights.len() {
            if budget.as_ref().is_none_or(|b| b.iter().all(|&x| x == 0)) {
                out.push(Tableau::from_columns_unchecked(n, cur.clone()));
            }
            return;
        }
        for (col, w) in &cands.by_height[heights[j]] {
            if standard {
                if let Some(prev) = cur.last() {
                    if !prev.entries().zip(col.entries()).all(|(a, b)| a >= b) {
                        continue;
                    }
                }
            }
            if let Some(b) = budget.as_mut() {
                if b.iter().zip(w).any(|(x, y)| x < y) {
                    continue;
                }
                b.iter_mut().zip(w).for_each(|(x, y)| *x -= y);
            }
            cur.push(*col);
            rec(j + 1, heights, cands, budget, standard, cur, n, out);
            cur.pop();
            if let Some(b) = budget.as_mut() {
                b.iter_mut().zip(w).for_each(|(x, y)| *x += y);
            }
        }
    }

    rec(0, &heights, &cands, &mut budget, standard, &mut cur, n, &mut out);
    out
}

/// All tableaux of `shape` (optionally of weight `weight`), in the default linear extension.
pub fn enumerate_all(shape: &Shape, weight: Option<&RootLatticeWeight>) -> Vec<Tableau> {
    enumerate(shape, weight, false)
}

/// All standard tableaux of `shape` (optionally of weight `weight`), in the
/// default linear extension.
pub fn enumerate_standard(shape: &Shape, weight: Option<&RootLatticeWeight>) -> Vec<Tableau> {
    enumerate(shape, weight, true)
}
