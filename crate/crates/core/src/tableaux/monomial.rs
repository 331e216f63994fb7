use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::column::Column;
use super::tableau::Tableau;
use super::{check_rank, RootLatticeWeight, Shape};
use crate::error::{Error, Result};

/// A triangular exponent array `a_k^r` (`1 <= k <= r <= n - 1`) with
/// `a_1^r <= a_2^r <= ... <= a_r^r` on every level.
///
/// It stands for the word
/// `alpha_1^{a_1^1} (alpha_2^{a_2^2} alpha_1^{a_1^2}) (alpha_3^{a_3^3} ...) ...`;
/// [`StandardMonomial::factors`] lists it in that printed order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StandardMonomial {
    n: usize,
    /// `levels[r - 1][k - 1] = a_k^r`.
    levels: Vec<Vec<u32>>,
}

impl StandardMonomial {
    /// `levels[r - 1][k - 1] = a_k^r`, i.e. each level listed from `k = 1` upward.
    pub fn new(n: usize, levels: Vec<Vec<u32>>) -> Result<Self> {
        check_rank(n)?;
        if levels.len() != n - 1 {
            return Err(Error::NonStandardMonomial(format!(
                "expected {} levels for n = {n}, got {}",
                n - 1,
                levels.len()
            )));
        }
        for (i, level) in levels.iter().enumerate() {
            if level.len() != i + 1 {
                return Err(Error::NonStandardMonomial(format!(
                    "level {} must have {} exponents, got {}",
                    i + 1,
                    i + 1,
                    level.len()
                )));
            }
            if level.windows(2).any(|w| w[0] > w[1]) {
                return Err(Error::NonStandardMonomial(format!(
                    "level {} violates a_1 <= ... <= a_r: {level:?}",
                    i + 1
                )));
            }
        }
        Ok(StandardMonomial { n, levels })
    }

    pub fn zero(n: usize) -> Result<Self> {
        check_rank(n)?;
        Ok(StandardMonomial {
            n,
            levels: (1..n).map(|r| vec![0; r]).collect(),
        })
    }

    /// Builds from the nested text layout `[[a11],[a22,a12],[a33,a23,a13],...]`.
    pub fn from_nested(n: usize, nested: &[Vec<u32>]) -> Result<Self> {
        let levels = nested
            .iter()
            .map(|l| l.iter().rev().copied().collect())
            .collect();
        StandardMonomial::new(n, levels)
    }

    /// The nested text layout, each level from the diagonal exponent down.
    pub fn to_nested(&self) -> Vec<Vec<u32>> {
        self.levels
            .iter()
            .map(|l| l.iter().rev().copied().collect())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    /// `a_k^r`.
    pub fn a(&self, r: usize, k: usize) -> u32 {
        self.levels[r - 1][k - 1]
    }

    pub fn is_zero(&self) -> bool {
        self.levels.iter().flatten().all(|&a| a == 0)
    }

    /// `(simple root index, exponent)` pairs in printed order, zeros included.
    pub fn factors(&self) -> Vec<(usize, u32)> {
        self.levels
            .iter()
            .flat_map(|l| l.iter().enumerate().rev().map(|(k, &a)| (k + 1, a)))
            .collect()
    }

    /// [`StandardMonomial::factors`] with the zero exponents dropped.
    pub fn word(&self) -> Vec<(usize, u32)> {
        self.factors().into_iter().filter(|&(_, a)| a > 0).collect()
    }

    /// `b_k = sum_r a_k^r`.
    pub fn weight(&self) -> RootLatticeWeight {
        let mut b = vec![0usize; self.n - 1];
        for level in &self.levels {
            for (k, &a) in level.iter().enumerate() {
                b[k] += a as usize;
            }
        }
        RootLatticeWeight::new(b)
    }

    /// The shape of [`StandardMonomial::tableau`]:
    /// `m_1 = sum_r a_1^r` and `m_j = sum_r (a_j^r - a_(j-1)^r)`.
    pub fn shape(&self) -> Shape {
        let ell = self.n - 1;
        let mut m = vec![0usize; ell];
        for level in &self.levels {
            for (k, &a) in level.iter().enumerate() {
                let below = if k == 0 { 0 } else { level[k - 1] };
                m[k] += (a - below) as usize;
            }
        }
        Shape::new(self.n, m).expect("rank checked on construction")
    }

    /// The special standard tableau with `a_k^r - a_(k-1)^r` entries `r + 1` on row `k`.
    pub fn tableau(&self) -> Tableau {
        let shape = self.shape();
        let mut cols = Vec::with_capacity(shape.num_columns());
        for k in 1..self.n {
            // bottom entries of the height-k columns, largest first
            let mut bottoms: Vec<u8> = Vec::new();
            for r in (k..self.n).rev() {
                let level = &self.levels[r - 1];
                let below = if k == 1 { 0 } else { level[k - 2] };
                let count = level[k - 1] - below;
                bottoms.extend(std::iter::repeat_n((r + 1) as u8, count as usize));
            }
            for e in bottoms {
                let bits = (Column::smallest(k - 1).bits()) | (1 << (e - 1));
                cols.push(Column::from_bits(bits));
            }
        }
        Tableau::from_columns_unchecked(self.n, cols)
    }

    /// Multiplicative notation, e.g. `a1^3 (a2^6 a1^3) (a3^7 a2^5 a1^2)`.
    pub fn to_word_string(&self) -> String {
        self.levels
            .iter()
            .enumerate()
            .map(|(i, l)| {
                let inner: Vec<String> = l
                    .iter()
                    .enumerate()
                    .rev()
                    .map(|(k, a)| format!("a{}^{a}", k + 1))
                    .collect();
                if i == 0 {
                    inner.join(" ")
                } else {
                    format!("({})", inner.join(" "))
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn parse(n: usize, s: &str) -> Result<Self> {
        let nested: Vec<Vec<u32>> = serde_json::from_str(s.trim()).map_err(|e| {
            Error::parse(e.column().saturating_sub(1), format!("bad monomial encoding: {e}"))
        })?;
        StandardMonomial::from_nested(n, &nested)
    }
}

impl fmt::Display for StandardMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, level) in self.to_nested().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            let parts: Vec<String> = level.iter().map(|a| a.to_string()).collect();
            write!(f, "[{}]", parts.join(","))?;
        }
        write!(f, "]")
    }
}

impl FromStr for StandardMonomial {
    type Err = Error;

    /// The rank is inferred from the number of levels.
    fn from_str(s: &str) -> Result<Self> {
        let nested: Vec<Vec<u32>> = serde_json::from_str(s.trim()).map_err(|e| {
            Error::parse(e.column().saturating_sub(1), format!("bad monomial encoding: {e}"))
        })?;
        StandardMonomial::from_nested(nested.len() + 1, &nested)
    }
}

impl Serialize for StandardMonomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_nested().serialize(s)
    }
}

impl<'de> Deserialize<'de> for StandardMonomial {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let nested = Vec::<Vec<u32>>::deserialize(d)?;
        StandardMonomial::from_nested(nested.len() + 1, &nested).map_err(serde::de::Error::custom)
    }
}

/// Every standard monomial of weight `mu`, sorted.
pub fn enumerate_standard_monomials(n: usize, mu: &RootLatticeWeight) -> Result<Vec<StandardMonomial>> {
    check_rank(n)?;
    if mu.ell() != n - 1 {
        return Err(Error::InvalidArgument(format!(
            "weight {mu} does not have rank {n}"
        )));
    }
    let mut budget: Vec<u32> = mu.coeffs().iter().map(|&b| b as u32).collect();
    let mut levels: Vec<Vec<u32>> = (1..n).map(|r| vec![0; r]).collect();
    let mut out = Vec::new();

    // Fill level r at slot k (k descending from r to 1), each slot bounded
    // above by the slot to its right and by the remaining budget.
    fn rec(
        r: usize,
        k: usize,
        n: usize,
        budget: &mut [u32],
        levels: &mut [Vec<u32>],
        out: &mut Vec<StandardMonomial>,
    ) {
        if r == n {
            if budget.iter().all(|&b| b == 0) {
                out.push(StandardMonomial {
                    n,
                    levels: levels.to_vec(),
                });
            }
            return;
        }
        if k == 0 {
            rec(r + 1, r + 1, n, budget, levels, out);
            return;
        }
        let cap = if k == r { u32::MAX } else { levels[r - 1][k] };
        let hi = cap.min(budget[k - 1]);
        for a in 0..=hi {
            levels[r - 1][k - 1] = a;
            budget[k - 1] -= a;
            rec(r, k - 1, n, budget, levels, out);
            budget[k - 1] += a;
        }
        levels[r - 1][k - 1] = 0;
    }

    rec(1, 1, n, &mut budget, &mut levels, &mut out);
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableaux::enumerate_standard;

    fn sample_monomial() -> StandardMonomial {
        StandardMonomial::parse(4, "[[3],[6,3],[7,5,2]]").unwrap()
    }

    #[test]
    fn sample_monomial_from_tableau() {
        let t = Tableau::parse(
            4,
            "[[4],[4],[3],[3,4],[3,4],[2,4],[2,3],[2,3,4],[1,3,4]]",
        )
        .unwrap();
        let m = t.monomial().unwrap();
        assert_eq!(m, sample_monomial());
        assert_eq!(m.to_word_string(), "a1^3 (a2^6 a1^3) (a3^7 a2^5 a1^2)");
        assert_eq!(m.weight().coeffs(), &[8, 11, 7]);
    }

    #[test]
    fn tableau_of_sample_monomial() {
        let t = sample_monomial().tableau();
        assert_eq!(t.shape(), Shape::new(4, vec![8, 6, 2]).unwrap());
        let rows = t.to_rows_string();
        let lines: Vec<Vec<&str>> = rows.lines().map(|l| l.split_whitespace().collect()).collect();
        assert_eq!(
            lines[0],
            ["4", "4", "3", "3", "3", "2", "2", "2", "1", "1", "1", "1", "1", "1", "1", "1"]
        );
        assert_eq!(lines[1], ["4", "4", "4", "3", "3", "3", "2", "2"]);
        assert_eq!(lines[2], ["4", "4"]);
        assert!(t.is_standard() && t.is_special());
        assert_eq!(t.monomial().unwrap(), sample_monomial());
    }

    #[test]
    fn degenerate_monomials() {
        let z = StandardMonomial::zero(3).unwrap();
        assert!(z.tableau().columns().is_empty());
        assert_eq!(z.shape(), Shape::empty(3).unwrap());
        let one = StandardMonomial::parse(2, "[[1]]").unwrap();
        assert_eq!(one.tableau().to_string(), "[[2]]");
        assert_eq!(one.shape(), Shape::new(2, vec![1]).unwrap());
        assert!(StandardMonomial::parse(3, "[[0],[0,1]]").is_err());
        assert!(StandardMonomial::parse(3, "[[0],[1]]").is_err());
    }

    #[test]
    fn factor_order() {
        let m = sample_monomial();
        assert_eq!(
            m.factors(),
            vec![(1, 3), (2, 6), (1, 3), (3, 7), (2, 5), (1, 2)]
        );
        assert_eq!(m.to_string(), "[[3],[6,3],[7,5,2]]");
        assert_eq!(m.to_string().parse::<StandardMonomial>().unwrap(), m);
        let json = serde_json::to_string(&m).unwrap();
        assert_eq!(serde_json::from_str::<StandardMonomial>(&json).unwrap(), m);
    }

    #[test]
    fn monomial_count_matches_tableau_count() {
        for n in 2..=4 {
            for mu in RootLatticeWeight::all_up_to(n, 6) {
                let monos = enumerate_standard_monomials(n, &mu).unwrap();
                let tabs = enumerate_standard(&mu.lambda_for(), Some(&mu));
                assert_eq!(monos.len(), tabs.len(), "n={n} mu={mu}");
                for t in &tabs {
                    assert!(t.is_special());
                    assert!(monos.binary_search(&t.monomial().unwrap()).is_ok());
                }
                if n < 4 || mu.height() <= 4 {
                    // oracle: brute force over bounded exponent arrays
                    assert_eq!(brute_force(n, &mu), monos, "n={n} mu={mu}");
                }
            }
        }
    }

    fn brute_force(n: usize, mu: &RootLatticeWeight) -> Vec<StandardMonomial> {
        let slots: usize = (1..n).sum();
        let bound = mu.height() as u32;
        let mut out = Vec::new();
        let mut digits = vec![0u32; slots];
        loop {
            let mut levels = Vec::new();
            let mut i = 0;
            for r in 1..n {
                levels.push(digits[i..i + r].to_vec());
                i += r;
            }
            if let Ok(m) = StandardMonomial::new(n, levels) {
                if &m.weight() == mu {
                    out.push(m);
                }
            }
            let mut j = 0;
            loop {
                if j == slots {
                    out.sort();
                    return out;
                }
                digits[j] += 1;
                if digits[j] <= bound {
                    break;
                }
                digits[j] = 0;
                j += 1;
            }
        }
    }
}
