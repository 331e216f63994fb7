use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qlaurent::RationalQ;
use crate::tableaux::{RootLatticeWeight, Shape, StandardMonomial, Tableau};

/// A row or column label.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Label {
    Monomial(StandardMonomial),
    Tableau(Tableau),
    /// `(a, b, c)` standing for `F_1^{(a)} F_2^{(b)} F_1^{(c)}`.
    Triple(u32, u32, u32),
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Monomial(m) => write!(f, "{m}"),
            Label::Tableau(t) => write!(f, "T{t}"),
            Label::Triple(a, b, c) => write!(f, "({a},{b},{c})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
enum LabelJson {
    Monomial(Vec<Vec<u32>>),
    Tableau { tableau: Vec<Vec<u8>> },
    Triple { abc: [u32; 3] },
}

impl Label {
    fn to_json(&self) -> LabelJson {
        match self {
            Label::Monomial(m) => LabelJson::Monomial(m.to_nested()),
            Label::Tableau(t) => LabelJson::Tableau {
                tableau: t.to_lists(),
            },
            Label::Triple(a, b, c) => LabelJson::Triple { abc: [*a, *b, *c] },
        }
    }

    fn from_json(n: usize, j: &LabelJson) -> Result<Self> {
        Ok(match j {
            LabelJson::Monomial(m) => Label::Monomial(StandardMonomial::from_nested(n, m)?),
            LabelJson::Tableau { tableau } => Label::Tableau(Tableau::new(n, tableau)?),
            LabelJson::Triple { abc } => Label::Triple(abc[0], abc[1], abc[2]),
        })
    }
}

/// A matrix over `Q(q)` whose column `j` holds the coordinates of the `j`-th
/// target vector in the basis labelled by the rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisMatrix {
    pub name: String,
    pub n: usize,
    pub mu: RootLatticeWeight,
    pub lambda: Option<Shape>,
    pub rows: Vec<Label>,
    pub cols: Vec<Label>,
    /// `entries[i][j]`, row-major.
    pub entries: Vec<Vec<RationalQ>>,
}

impl BasisMatrix {
    pub fn zeros(
        name: &str,
        n: usize,
        mu: &RootLatticeWeight,
        lambda: Option<&Shape>,
        rows: Vec<Label>,
        cols: Vec<Label>,
    ) -> Self {
        let entries = vec![vec![RationalQ::zero(); cols.len()]; rows.len()];
        BasisMatrix {
            name: name.to_string(),
            n,
            mu: mu.clone(),
            lambda: lambda.cloned(),
            rows,
            cols,
            entries,
        }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &RationalQ {
        &self.entries[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: RationalQ) {
        self.entries[i][j] = x;
    }

    pub fn renamed(mut self, name: &str) -> Self {
        self.name = name.to_string();
        self
    }

    pub fn is_identity(&self) -> bool {
        self.nrows() == self.ncols()
            && self.entries.iter().enumerate().all(|(i, row)| {
                row.iter()
                    .enumerate()
                    .all(|(j, x)| if i == j { x.is_one() } else { x.is_zero() })
            })
    }

    /// Unit diagonal and zeros below it, in index order.
    pub fn is_unitriangular(&self) -> bool {
        self.nrows() == self.ncols()
            && self.entries.iter().enumerate().all(|(i, row)| {
                row.iter().enumerate().all(|(j, x)| match i.cmp(&j) {
                    std::cmp::Ordering::Equal => x.is_one(),
                    std::cmp::Ordering::Greater => x.is_zero(),
                    std::cmp::Ordering::Less => true,
                })
            })
    }

    /// `self * rhs`; rows of the product carry `self`'s row labels.
    pub fn mul(&self, rhs: &BasisMatrix, name: &str) -> Result<BasisMatrix> {
        if self.ncols() != rhs.nrows() {
            return Err(Error::InvalidArgument(format!(
                "cannot multiply {}x{} by {}x{}",
                self.nrows(),
                self.ncols(),
                rhs.nrows(),
                rhs.ncols()
            )));
        }
        let mut out = BasisMatrix::zeros(
            name,
            self.n,
            &self.mu,
            self.lambda.as_ref(),
            self.rows.clone(),
            rhs.cols.clone(),
        );
        for i in 0..self.nrows() {
            for k in 0..self.ncols() {
                let a = &self.entries[i][k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.ncols() {
                    let b = &rhs.entries[k][j];
                    if b.is_zero() {
                        continue;
                    }
                    let sum = &out.entries[i][j] + &(a * b);
                    out.entries[i][j] = sum;
                }
            }
        }
        Ok(out)
    }

    /// Inverse of a unit upper triangular matrix by back substitution. The
    /// inverse's rows are labelled by `self`'s columns and vice versa.
    pub fn inverse_unitriangular(&self, name: &str) -> Result<BasisMatrix> {
        if !self.is_unitriangular() {
            return Err(Error::InvalidArgument(format!(
                "{} is not unit upper triangular",
                self.name
            )));
        }
        let d = self.nrows();
        let mut out = BasisMatrix::zeros(
            name,
            self.n,
            &self.mu,
            self.lambda.as_ref(),
            self.cols.clone(),
            self.rows.clone(),
        );
        // column j of the inverse solves U x = e_j
        for j in 0..d {
            out.entries[j][j] = RationalQ::one();
            for i in (0..j).rev() {
                let mut acc = RationalQ::zero();
                for k in i + 1..=j {
                    let u = &self.entries[i][k];
                    if !u.is_zero() && !out.entries[k][j].is_zero() {
                        acc = &acc + &(u * &out.entries[k][j]);
                    }
                }
                out.entries[i][j] = -acc;
            }
        }
        Ok(out)
    }

    /// Keeps the rows whose positions are listed, in that order.
    pub fn select_rows(&self, keep: &[usize], name: &str) -> BasisMatrix {
        BasisMatrix {
            name: name.to_string(),
            n: self.n,
            mu: self.mu.clone(),
            lambda: self.lambda.clone(),
            rows: keep.iter().map(|&i| self.rows[i].clone()).collect(),
            cols: self.cols.clone(),
            entries: keep.iter().map(|&i| self.entries[i].clone()).collect(),
        }
    }

    pub fn map_entries(&self, f: impl Fn(&RationalQ) -> RationalQ, name: &str) -> BasisMatrix {
        BasisMatrix {
            name: name.to_string(),
            entries: self
                .entries
                .iter()
                .map(|row| row.iter().map(&f).collect())
                .collect(),
            ..self.clone()
        }
    }

    pub fn to_json(&self) -> MatrixJson {
        let same = self.rows == self.cols;
        MatrixJson {
            n: self.n,
            mu: self.mu.coeffs().to_vec(),
            lambda: self.lambda.as_ref().map(|l| l.mults().to_vec()),
            matrix_name: self.name.clone(),
            index: self.cols.iter().map(Label::to_json).collect(),
            row_index: (!same).then(|| self.rows.iter().map(Label::to_json).collect()),
            entries: self
                .entries
                .iter()
                .map(|row| row.iter().map(|x| x.to_string()).collect())
                .collect(),
        }
    }

    pub fn from_json(j: &MatrixJson) -> Result<Self> {
        let cols = j
            .index
            .iter()
            .map(|l| Label::from_json(j.n, l))
            .collect::<Result<Vec<_>>>()?;
        let rows = match &j.row_index {
            Some(r) => r
                .iter()
                .map(|l| Label::from_json(j.n, l))
                .collect::<Result<Vec<_>>>()?,
            None => cols.clone(),
        };
        let entries = j
            .entries
            .iter()
            .map(|row| row.iter().map(|s| s.parse::<RationalQ>()).collect())
            .collect::<Result<Vec<Vec<_>>>>()?;
        if entries.len() != rows.len() || entries.iter().any(|r| r.len() != cols.len()) {
            return Err(Error::InvalidArgument("entry grid does not match the index lists".into()));
        }
        Ok(BasisMatrix {
            name: j.matrix_name.clone(),
            n: j.n,
            mu: RootLatticeWeight::new(j.mu.clone()),
            lambda: j.lambda.as_ref().map(|l| Shape::new(j.n, l.clone())).transpose()?,
            rows,
            cols,
            entries,
        })
    }

    /// Entries only, one row per line, comma separated with quoted cells.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(|x| format!("\"{x}\"")).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    /// Parses [`BasisMatrix::to_csv`] output back into an entry grid.
    pub fn entries_from_csv(s: &str) -> Result<Vec<Vec<RationalQ>>> {
        s.lines()
            .filter(|l| !l.trim().is_empty())
            .map(|line| {
                line.split("\",\"")
                    .map(|cell| cell.trim().trim_matches('"').parse::<RationalQ>())
                    .collect()
            })
            .collect()
    }

    /// Column-aligned text table.
    pub fn to_pretty(&self) -> String {
        let header: Vec<String> = std::iter::once(String::new())
            .chain(self.cols.iter().map(|l| l.to_string()))
            .collect();
        let mut grid = vec![header];
        for (label, row) in self.rows.iter().zip(&self.entries) {
            grid.push(
                std::iter::once(label.to_string())
                    .chain(row.iter().map(|x| x.to_string()))
                    .collect(),
            );
        }
        let ncol = grid[0].len();
        let widths: Vec<usize> = (0..ncol)
            .map(|c| grid.iter().map(|r| r[c].chars().count()).max().unwrap_or(0))
            .collect();
        let mut out = format!("{} (n={}, mu={})\n", self.name, self.n, self.mu);
        for r in grid {
            let cells: Vec<String> = r
                .iter()
                .zip(&widths)
                .map(|(s, w)| format!("{s:<w$}"))
                .collect();
            out.push_str(cells.join("  ").trim_end());
            out.push('\n');
        }
        out
    }
}

/// Wire format of a [`BasisMatrix`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub n: usize,
    pub mu: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub lambda: Option<Vec<usize>>,
    pub matrix_name: String,
    /// Column labels.
    index: Vec<LabelJson>,
    /// Row labels, present only when they differ from the column labels.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    row_index: Option<Vec<LabelJson>>,
    pub entries: Vec<Vec<String>>,
}
