//! Generator actions on tensor products of fundamental representations.
//!
//! A basis vector `v_x` is the tensor product of its columns, leftmost factor
//! first. On one column `y`, `F_i` replaces `i` by `i + 1` when `y` has type I
//! for `alpha_i`, `E_i` does the reverse on type III, and `K_i` multiplies by
//! `q^w` with `w` the sl2-weight `+1, 0, -1` of the type. Across factors,
//! `F_i` on factor `j` carries `K_i` on factors before `j`, and `E_i` on factor
//! `j` carries `K_i^{-1}` on factors after `j`.

use crate::error::{Error, Result};
use crate::qlaurent::{qfactorial, RationalQ};
use crate::tableaux::{ColumnType, Tableau};

use super::ModuleVector;

fn col_weights(t: &Tableau, i: usize) -> impl Iterator<Item = i64> + '_ {
    t.columns().iter().map(move |c| c.kind(i).sl2_weight())
}

/// `F_i v`.
pub fn act_f(i: usize, v: &ModuleVector) -> ModuleVector {
    let mut out = ModuleVector::zero(v.shape());
    for (t, x) in v.terms() {
        let mut k_before = 0i64;
        for (j, col) in t.columns().iter().enumerate() {
            if col.kind(i) == ColumnType::I {
                out.add_term(t.with_column(j, col.raise(i)), &x.shift(k_before));
            }
            k_before += col.kind(i).sl2_weight();
        }
    }
    out
}

/// `E_i v`.
pub fn act_e(i: usize, v: &ModuleVector) -> ModuleVector {
    let mut out = ModuleVector::zero(v.shape());
    for (t, x) in v.terms() {
        let mut k_after: i64 = col_weights(t, i).sum();
        for (j, col) in t.columns().iter().enumerate() {
            k_after -= col.kind(i).sl2_weight();
            if col.kind(i) == ColumnType::III {
                out.add_term(t.with_column(j, col.lower(i)), &x.shift(-k_after));
            }
        }
    }
    out
}

fn act_k_pow(i: usize, sign: i64, v: &ModuleVector) -> ModuleVector {
    let mut out = ModuleVector::zero(v.shape());
    for (t, x) in v.terms() {
        let w: i64 = col_weights(t, i).sum();
        out.add_term(t.clone(), &x.shift(sign * w));
    }
    out
}

/// `K_i v`.
pub fn act_k(i: usize, v: &ModuleVector) -> ModuleVector {
    act_k_pow(i, 1, v)
}

/// `K_i^{-1} v`.
pub fn act_kinv(i: usize, v: &ModuleVector) -> ModuleVector {
    act_k_pow(i, -1, v)
}

/// `F_i^k v / [k]!`, computed by repeated application of `F_i`.
///
/// Integral input (all coefficients in `Z[q, q^-1]`) must give integral output;
/// anything else is reported as an inexact division.
pub fn divided_f(i: usize, k: u32, v: &ModuleVector) -> Result<ModuleVector> {
    let mut w = v.clone();
    for _ in 0..k {
        w = act_f(i, &w);
    }
    let fact = qfactorial(k);
    let integral = v.terms().all(|(_, x)| x.is_laurent());
    w.map_coeffs(|x| {
        let y = x.div_laurent_exact(&fact)?;
        if integral && !y.is_laurent() {
            return Err(Error::InexactDivision(format!("{x} by [{k}]!")));
        }
        Ok(y)
    })
}

/// `F_i^{(k)} v_y` via the subset formula: a sum over `k`-subsets `t` of the
/// type I columns of `q^{r(t)} v_{t(y)}`, where every unchosen column
/// contributes its sl2-weight times the number of chosen columns to its right.
pub fn closed_form_divided_f(i: usize, k: u32, y: &Tableau) -> ModuleVector {
    let mut out = ModuleVector::zero(&y.shape());
    let cols = y.columns();
    let type_i_after: Vec<usize> = {
        let mut acc = vec![0usize; cols.len() + 1];
        for j in (0..cols.len()).rev() {
            acc[j] = acc[j + 1] + usize::from(cols[j].kind(i) == ColumnType::I);
        }
        acc
    };
    if (k as usize) > type_i_after[0] {
        return out;
    }
    let mut current = cols.to_vec();

    #[allow(clippy::too_many_arguments)]
    fn rec(
        j: usize,
        remaining: usize,
        r: i64,
        i: usize,
        y: &Tableau,
        type_i_after: &[usize],
        current: &mut Vec<crate::tableaux::Column>,
        out: &mut ModuleVector,
    ) {
        if remaining == 0 {
            let t = Tableau::from_columns_unchecked(y.rank(), current.clone());
            out.add_term(t, &RationalQ::q_pow(r));
            return;
        }
        if type_i_after[j] < remaining {
            return;
        }
        let col = y.columns()[j];
        let w = col.kind(i).sl2_weight();
        if col.kind(i) == ColumnType::I {
            current[j] = col.raise(i);
            rec(j + 1, remaining - 1, r, i, y, type_i_after, current, out);
            current[j] = col;
        }
        rec(j + 1, remaining, r + w * remaining as i64, i, y, type_i_after, current, out);
    }

    rec(0, k as usize, 0, i, y, &type_i_after, &mut current, &mut out);
    out
}

/// `F_i^{(k)} v` for an arbitrary vector, through the subset formula on each term.
pub fn divided_f_closed(i: usize, k: u32, v: &ModuleVector) -> ModuleVector {
    if k == 0 {
        return v.clone();
    }
    let mut out = ModuleVector::zero(v.shape());
    for (t, x) in v.terms() {
        out.add_scaled(&closed_form_divided_f(i, k, t), x);
    }
    out
}

/// First `(i, k)` at which the subset formula and repeated application of
/// `F_i` disagree on `v_y`, for `k` up to one past the number of type I columns.
pub fn closed_form_mismatch(y: &Tableau) -> Result<Option<String>> {
    let v = ModuleVector::basis(y.clone());
    for i in 1..y.rank() {
        let s = y.columns().iter().filter(|c| c.kind(i).sl2_weight() == 1).count() as u32;
        for k in 0..=s + 1 {
            let closed = closed_form_divided_f(i, k, y);
            let naive = divided_f(i, k, &v)?;
            if closed != naive {
                return Ok(Some(format!("F_{i}^({k}) on v_{y}: {closed} vs {naive}")));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qlaurent::{qint, LaurentPoly};
    use crate::tableaux::{enumerate_all, Shape};

    fn t(n: usize, s: &str) -> Tableau {
        Tableau::parse(n, s).unwrap()
    }

    fn q(e: i64) -> RationalQ {
        RationalQ::q_pow(e)
    }

    #[test]
    fn f_on_two_boxes() {
        let v = ModuleVector::basis(t(2, "[[1],[1]]"));
        let fv = act_f(1, &v);
        assert_eq!(fv.len(), 2);
        assert_eq!(fv.coeff(&t(2, "[[2],[1]]")), q(0));
        assert_eq!(fv.coeff(&t(2, "[[1],[2]]")), q(1));
        assert_eq!(fv, closed_form_divided_f(1, 1, &t(2, "[[1],[1]]")));
    }

    #[test]
    fn k_eigenvalues_multiply() {
        let v = ModuleVector::basis(t(2, "[[1],[2]]"));
        assert_eq!(act_k(1, &v), v);
        let w = ModuleVector::basis(t(2, "[[1],[1]]"));
        assert_eq!(act_k(1, &w).coeff(&t(2, "[[1],[1]]")), q(2));
        assert_eq!(act_kinv(1, &act_k(1, &w)), w);
    }

    #[test]
    fn f_kills_types_ii_and_iii() {
        let v = ModuleVector::basis(t(3, "[[2],[3],[1,2]]"));
        assert!(act_f(1, &v).is_zero());
    }

    #[test]
    fn divided_square() {
        let v = ModuleVector::basis(t(2, "[[1],[1]]"));
        let f2 = act_f(1, &act_f(1, &v));
        assert_eq!(f2.coeff(&t(2, "[[2],[2]]")), RationalQ::from(qint(2)));
        let d = divided_f(1, 2, &v).unwrap();
        assert_eq!(d, ModuleVector::basis(t(2, "[[2],[2]]")));
        assert_eq!(d, closed_form_divided_f(1, 2, &t(2, "[[1],[1]]")));
        assert_eq!(divided_f(1, 0, &v).unwrap(), v);
        assert!(divided_f(1, 3, &v).unwrap().is_zero());
        assert!(closed_form_divided_f(1, 3, &t(2, "[[1],[1]]")).is_zero());
    }

    #[test]
    fn e_inverts_f_on_a_single_box() {
        let v = ModuleVector::basis(t(2, "[[1]]"));
        assert_eq!(act_e(1, &act_f(1, &v)), v);
        assert!(act_e(1, &v).is_zero());
    }

    #[test]
    fn commutator_on_three_boxes() {
        // [E,F] = (K - K^-1)/(q - q^-1) on every basis vector of V(1)^{x3}
        let shape = Shape::new(2, vec![3]).unwrap();
        let denom = LaurentPoly::from_terms([(1, 1), (-1, -1)]);
        for y in enumerate_all(&shape, None) {
            let v = ModuleVector::basis(y);
            let lhs = &act_e(1, &act_f(1, &v)) - &act_f(1, &act_e(1, &v));
            let rhs = (&act_k(1, &v) - &act_kinv(1, &v))
                .map_coeffs(|x| x.div_laurent_exact(&denom))
                .unwrap();
            assert_eq!(lhs, rhs);
        }
    }
}
