use std::collections::HashMap;

use crate::error::Result;
use crate::report::{Check, Report};
use crate::tableaux::{compare, LinearExtension, PartialOrdering, RootLatticeWeight, Shape, StandardMonomial, Tableau};

use super::expansions::smt_matrix;
use super::matrix::{BasisMatrix, Label};
use super::space::WeightSpace;

/// The dual standard monomial theoretic basis of one weight space.
#[derive(Debug, Clone)]
pub struct DualSmtBasis {
    /// Coefficients of `F(sigma) v_lambda` on the standard tableau vectors
    /// (rows relabelled by the monomials of those tableaux).
    pub n_s: BasisMatrix,
    /// Column `a` holds the coordinates of `s(a)` in the monomial basis `{F(a')}`.
    pub coords: BasisMatrix,
    pub report: Report,
}

/// First entry that is not compatible with a unit upper triangular matrix
/// in the partial order of the labelling tableaux.
pub(crate) fn partial_order_violation(m: &BasisMatrix, tabs: &[Tableau]) -> Option<String> {
    for (i, x) in tabs.iter().enumerate() {
        for (j, y) in tabs.iter().enumerate() {
            let c = m.get(i, j);
            if i == j {
                if !c.is_one() {
                    return Some(format!("{}: diagonal entry at {} is {c}", m.name, m.cols[j]));
                }
            } else if !c.is_zero() && compare(x, y).ok() != Some(PartialOrdering::Less) {
                return Some(format!(
                    "{}: entry ({}, {}) = {c} although {x} is not below {y}",
                    m.name, m.rows[i], m.cols[j]
                ));
            }
        }
    }
    None
}

/// The dual basis of the weight space `mu`, realized in `lambda` (by default
/// the smallest sufficient shape).
pub fn dual_smt(mu: &RootLatticeWeight, lambda: Option<&Shape>) -> Result<DualSmtBasis> {
    dual_smt_in(&WeightSpace::sufficient(mu, lambda, LinearExtension::default())?)
}

/// Inverts the standard-row block of the expansion matrix.
pub fn dual_smt_in(space: &WeightSpace) -> Result<DualSmtBasis> {
    let smt = smt_matrix(space)?;
    let mut n_s = smt.select_rows(&space.standard_rows, "N_s");
    n_s.rows = space.monomial_labels();
    let coords = n_s.inverse_unitriangular("dual_smt")?;
    let mut report = Report::new(format!("dual smt mu={} lambda={}", space.mu, space.lambda));
    let d = space.dim();
    report.push(Check::from_witness(
        "N_s unipotent in the partial order",
        d,
        partial_order_violation(&n_s, &space.standard),
    ));
    let nqq = first_entry(&n_s, |x| !x.is_zero() && !x.membership().in_nqq);
    report.push(Check::from_witness("N_s entries in N[q,q^-1]", d * d, nqq));
    let prod = n_s.mul(&coords, "N_s * coords")?;
    report.push(Check::from_witness(
        "N_s * coords = identity",
        d * d,
        (!prod.is_identity()).then(|| "product differs from identity".to_string()),
    ));
    let zqq = first_entry(&coords, |x| !x.membership().in_zqq);
    report.push(Check::from_witness("coords entries in Z[q,q^-1]", d * d, zqq));
    Ok(DualSmtBasis { n_s, coords, report })
}

pub(crate) fn first_entry(m: &BasisMatrix, bad: impl Fn(&crate::qlaurent::RationalQ) -> bool) -> Option<String> {
    for i in 0..m.nrows() {
        for j in 0..m.ncols() {
            if bad(m.get(i, j)) {
                return Some(format!(
                    "{}: entry ({}, {}) = {}",
                    m.name,
                    m.rows[i],
                    m.cols[j],
                    m.get(i, j)
                ));
            }
        }
    }
    None
}

fn by_label(m: &BasisMatrix) -> HashMap<(Label, Label), String> {
    let mut out = HashMap::new();
    for (i, r) in m.rows.iter().enumerate() {
        for (j, c) in m.cols.iter().enumerate() {
            out.insert((r.clone(), c.clone()), m.get(i, j).to_string());
        }
    }
    out
}

/// Computes the dual basis in two shapes and compares them entry by entry,
/// together with the expansion coefficients of every special tableau.
pub fn stability_check(mu: &RootLatticeWeight, lambda: &Shape, lambda2: &Shape) -> Result<Report> {
    let order = LinearExtension::default();
    let s1 = WeightSpace::sufficient(mu, Some(lambda), order)?;
    let s2 = WeightSpace::sufficient(mu, Some(lambda2), order)?;
    let d1 = dual_smt_in(&s1)?;
    let d2 = dual_smt_in(&s2)?;
    let mut report = Report::new(format!("stability mu={mu} lambda={lambda} lambda'={lambda2}"));
    let (m1, m2) = (by_label(&d1.coords), by_label(&d2.coords));
    let mismatch = (m1 != m2).then(|| {
        let key = m1.keys().find(|k| m1.get(*k) != m2.get(*k)).cloned();
        match key {
            Some(key) => format!("entry ({}, {}): {} vs {:?}", key.0, key.1, m1[&key], m2.get(&key)),
            None => "label sets differ".to_string(),
        }
    });
    report.push(Check::from_witness("dual smt coordinates coincide", m1.len(), mismatch));

    // n_y(sigma) = n_{y'}(sigma') for every special y
    let (big, small) = if lambda.fits_in(lambda2) { (&s2, &s1) } else { (&s1, &s2) };
    let smt_small = smt_matrix(small)?;
    let smt_big = smt_matrix(big)?;
    let col_big: HashMap<StandardMonomial, usize> = big
        .monomials()
        .into_iter()
        .enumerate()
        .map(|(j, m)| (m, j))
        .collect();
    let mut witness = None;
    let mut cases = 0;
    if !small.lambda.fits_in(&big.lambda) {
        witness = Some(format!("shapes {} and {} are not nested", small.lambda, big.lambda));
    } else {
        'outer: for (j, sigma) in small.standard.iter().enumerate() {
            let jb = col_big[&sigma.monomial()?];
            for (i, y) in small.all.iter().enumerate() {
                if !y.is_special() {
                    continue;
                }
                cases += 1;
                let y2 = y.embed(&big.lambda)?;
                let ib = big.row_of(&y2).expect("embedding keeps the weight");
                if smt_small.get(i, j) != smt_big.get(ib, jb) {
                    witness = Some(format!(
                        "n_{y}({sigma}) = {} but n_{y2}(..) = {}",
                        smt_small.get(i, j),
                        smt_big.get(ib, jb)
                    ));
                    break 'outer;
                }
            }
        }
    }
    report.push(Check::from_witness("expansion coefficients of special tableaux agree", cases, witness));
    Ok(report)
}
