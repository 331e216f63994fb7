use crate::error::Result;
use crate::qlaurent::RationalQ;
use crate::repmod::{apply_tableau, highest_weight_vector, Flavor};
use crate::report::{Check, Report};
use crate::tableaux::{compare, PartialOrdering};

use super::matrix::BasisMatrix;
use super::space::WeightSpace;

fn expansion_matrix(space: &WeightSpace, flavor: Flavor, name: &str) -> Result<BasisMatrix> {
    let v = highest_weight_vector(&space.lambda);
    let mut m = BasisMatrix::zeros(
        name,
        space.n(),
        &space.mu,
        Some(&space.lambda),
        space.all_labels(),
        space.monomial_labels(),
    );
    for (j, sigma) in space.standard.iter().enumerate() {
        let w = apply_tableau(sigma, flavor, &v)?;
        for (x, c) in w.terms() {
            let i = space
                .row_of(x)
                .expect("monomial images stay in their weight space");
            m.set(i, j, c.clone());
        }
    }
    Ok(m)
}

/// Columns: `F(sigma) v_lambda` for standard `sigma`, in the basis of all tableaux.
pub fn smt_matrix(space: &WeightSpace) -> Result<BasisMatrix> {
    expansion_matrix(space, Flavor::Divided, "smt")
}

/// Columns: `F~(sigma) v_lambda` for standard `sigma`, in the basis of all tableaux.
pub fn kashiwara_tableau_matrix(space: &WeightSpace) -> Result<BasisMatrix> {
    expansion_matrix(space, Flavor::Kashiwara, "kashiwara")
}

/// Leading coefficient 1 at `sigma`, support below `sigma`, and the
/// off-leading coefficients in `N[q, q^-1]` (divided) or in the maximal ideal
/// (Kashiwara).
pub fn verify_expansion(space: &WeightSpace, m: &BasisMatrix, flavor: Flavor) -> Report {
    let mut report = Report::new(format!("expansion {} mu={} lambda={}", m.name, space.mu, space.lambda));
    let mut lead = None;
    let mut support = None;
    let mut domain = None;
    for (j, sigma) in space.standard.iter().enumerate() {
        for (i, x) in space.all.iter().enumerate() {
            let c: &RationalQ = m.get(i, j);
            if x == sigma {
                if !c.is_one() && lead.is_none() {
                    lead = Some(format!("coefficient of v_{x} in column {sigma} is {c}"));
                }
                continue;
            }
            if c.is_zero() {
                continue;
            }
            if compare(x, sigma).ok() != Some(PartialOrdering::Less) && support.is_none() {
                support = Some(format!("v_{x} appears in column {sigma} but is not below it"));
            }
            let mem = c.membership();
            let ok = match flavor {
                Flavor::Divided => mem.in_nqq,
                Flavor::Kashiwara => mem.in_m,
            };
            if !ok && domain.is_none() {
                domain = Some(format!("coefficient of v_{x} in column {sigma} is {c}"));
            }
        }
    }
    let cases = space.dim();
    let domain_name = match flavor {
        Flavor::Divided => "off-leading coefficients in N[q,q^-1]",
        Flavor::Kashiwara => "off-leading coefficients in the maximal ideal",
    };
    report.push(Check::from_witness("leading coefficient is 1", cases, lead));
    report.push(Check::from_witness("support below sigma", cases, support));
    report.push(Check::from_witness(domain_name, cases, domain));
    report
}
