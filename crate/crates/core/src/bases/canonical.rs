//! Coordinates of the canonical basis in the monomial basis `{F(tau)}` and
//! its expansion in the dual standard monomial basis.
//!
//! Write `W` for the inverse of `B'`, so column `sigma` of `W * D` expresses
//! `G(sigma)` in the Kashiwara monomial basis. Since `W` and `D` are both
//! unitriangular, entry `(tau, sigma)` of `W * D` equals
//! `D[tau, sigma] + R` with `R = sum_{rho > tau} W[tau, rho] D[rho, sigma]`.
//! Walking `tau` downwards from `sigma`, `R` is already known, and the only
//! bar-invariant choice putting the entry in the maximal ideal is minus the
//! symmetrized principal part of `R` at `q = 0`.

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::qlaurent::{PowerSeriesTrunc, RationalQ};
use crate::repmod::{apply_monomial, highest_weight_vector, Flavor};
use crate::report::{Check, Report};
use crate::tableaux::{enumerate_standard, LinearExtension, RootLatticeWeight, Shape};

use super::dual::{dual_smt_in, first_entry, partial_order_violation, DualSmtBasis};
use super::expansions::{kashiwara_tableau_matrix, smt_matrix, verify_expansion};
use super::matrix::BasisMatrix;
use super::space::WeightSpace;

/// Everything computed for one weight space on the way to the canonical basis.
#[derive(Debug, Clone)]
pub struct CanonicalData {
    pub space: WeightSpace,
    pub dual: DualSmtBasis,
    /// `F~(sigma) v_lambda` in the basis `{F(tau) v_lambda}`.
    pub b_prime: BasisMatrix,
    /// `G(sigma)` in the basis `{F(tau)}`.
    pub d: BasisMatrix,
    /// `G(sigma)` in the basis `{s(a)}`.
    pub t: BasisMatrix,
    pub report: Report,
}

/// `B'` for a realized weight space, with the check `N_all * B' = K_all`
/// pushed into `report`.
pub fn kashiwara_monomial_matrix_in(
    space: &WeightSpace,
    dual: &DualSmtBasis,
    report: &mut Report,
) -> Result<BasisMatrix> {
    let k_all = kashiwara_tableau_matrix(space)?;
    let mut k_s = k_all.select_rows(&space.standard_rows, "K_s");
    k_s.rows = space.monomial_labels();
    let b_prime = dual.coords.mul(&k_s, "Bprime")?;
    let n_all = smt_matrix(space)?;
    let back = n_all.mul(&b_prime, "N_all * Bprime")?;
    let d = space.dim();
    let witness = (back.entries != k_all.entries).then(|| "N_all * Bprime differs from K_all".to_string());
    report.push(Check::from_witness("N_all * Bprime = K_all", d * space.all.len(), witness));
    report.push(Check::from_witness(
        "Bprime unipotent in the partial order",
        d,
        partial_order_violation(&b_prime, &space.standard),
    ));
    Ok(b_prime)
}

pub fn kashiwara_monomial_matrix(mu: &RootLatticeWeight, lambda: Option<&Shape>) -> Result<BasisMatrix> {
    let space = WeightSpace::sufficient(mu, lambda, LinearExtension::default())?;
    let dual = dual_smt_in(&space)?;
    kashiwara_monomial_matrix_in(&space, &dual, &mut Report::new("Bprime"))
}

/// `-(sum_{e<0} r_e (q^e + q^-e) + r_0)` for the principal part `r` of `x`.
fn bar_completion(x: &RationalQ) -> RationalQ {
    let series = x.series_at_zero(0);
    let low = series.lowest_exponent.min(0);
    let mut coefficients = vec![BigRational::zero(); (1 - 2 * low) as usize];
    for e in low..=0 {
        let c = series.coeff(e);
        coefficients[(e - low) as usize] -= &c;
        if e < 0 {
            coefficients[(-e - low) as usize] -= &c;
        }
    }
    PowerSeriesTrunc {
        lowest_exponent: low,
        coefficients,
        truncation_order: -low,
    }
    .to_rational()
}

/// Solves for `D` given `W = B'^-1`, processing each column from the diagonal up.
pub fn solve_canonical(w: &BasisMatrix) -> BasisMatrix {
    let dim = w.nrows();
    let mut d = w.map_entries(|_| RationalQ::zero(), "D");
    for sigma in 0..dim {
        d.set(sigma, sigma, RationalQ::one());
        for tau in (0..sigma).rev() {
            let r = (tau + 1..=sigma).fold(RationalQ::zero(), |acc, rho| {
                &acc + &(w.get(tau, rho) * d.get(rho, sigma))
            });
            d.set(tau, sigma, bar_completion(&r));
        }
    }
    d
}

/// The three defining conditions of the canonical basis, checked on `D`.
pub fn certify(w: &BasisMatrix, d: &BasisMatrix) -> Result<Report> {
    let mut report = Report::new(format!("certification mu={}", d.mu));
    let cases = d.nrows() * d.ncols();
    report.push(Check::from_witness(
        "(i) D entries bar-invariant",
        cases,
        first_entry(d, |x| !x.membership().bar_invariant),
    ));
    let wd = w.mul(d, "W * D")?;
    report.push(Check::from_witness(
        "(ii) W * D entries in A",
        cases,
        first_entry(&wd, |x| !x.membership().in_a),
    ));
    let mut cong = None;
    for i in 0..wd.nrows() {
        for j in 0..wd.ncols() {
            let x = wd.get(i, j);
            let expected = if i == j { BigRational::from_integer(1.into()) } else { BigRational::zero() };
            if cong.is_none() && x.value_at_zero().is_some_and(|v| v != expected) {
                cong = Some(format!("W * D at ({}, {}) is {x}", wd.rows[i], wd.cols[j]));
            }
        }
    }
    report.push(Check::from_witness("(iii) W * D congruent to identity mod q", cases, cong));
    Ok(report)
}

/// Counts of the entries of `m` by the smallest familiar ring containing them.
pub fn domain_summary(m: &BasisMatrix) -> String {
    let (mut zq, mut laurent, mut other) = (0, 0, 0);
    for row in &m.entries {
        for x in row {
            let mem = x.membership();
            if mem.in_zq {
                zq += 1;
            } else if mem.in_zqq {
                laurent += 1;
            } else {
                other += 1;
            }
        }
    }
    format!("{}: {zq} in Z[q], {laurent} more in Z[q,q^-1], {other} outside", m.name)
}

/// The canonical basis of weight `mu` in `lambda_for(mu)`, plus every check on the way.
pub fn canonical_data(mu: &RootLatticeWeight, order: LinearExtension) -> Result<CanonicalData> {
    canonical_data_in(WeightSpace::sufficient(mu, None, order)?)
}

pub fn canonical_data_in(space: WeightSpace) -> Result<CanonicalData> {
    let dual = dual_smt_in(&space)?;
    let mut report = Report::new(format!("canonical basis mu={} lambda={}", space.mu, space.lambda));
    report.extend(dual.report.clone());
    let b_prime = kashiwara_monomial_matrix_in(&space, &dual, &mut report)?;
    let w = b_prime.inverse_unitriangular("W")?;
    let d = solve_canonical(&w);
    report.extend(certify(&w, &d)?);
    let t = dual.n_s.mul(&d, "T")?;
    report.extend(theorem52_checks(&space, &t));
    Ok(CanonicalData {
        space,
        dual,
        b_prime,
        d,
        t,
        report,
    })
}

pub fn canonical_basis(mu: &RootLatticeWeight) -> Result<BasisMatrix> {
    let data = canonical_data(mu, LinearExtension::default())?;
    let failed: Vec<_> = data.report.failures().map(|c| c.name.clone()).collect();
    if let Some(first) = data.report.failures().next() {
        return Err(Error::TheoremViolation {
            check: failed.join(", "),
            witness: first.witness.clone().unwrap_or_default(),
        });
    }
    Ok(data.d)
}

fn theorem52_checks(space: &WeightSpace, t: &BasisMatrix) -> Report {
    let mut report = Report::new(format!("expansion in the dual basis mu={}", space.mu));
    let cases = t.nrows() * t.ncols();
    report.push(Check::from_witness(
        "T unipotent in the partial order",
        t.ncols(),
        partial_order_violation(t, &space.standard),
    ));
    report.push(Check::from_witness(
        "T entries in Z[q]",
        cases,
        first_entry(t, |x| !x.membership().in_zq),
    ));
    let mut off = None;
    for i in 0..t.nrows() {
        for j in 0..t.ncols() {
            if i != j && off.is_none() && !t.get(i, j).membership().divisible_by_q {
                off = Some(format!("T at ({}, {}) is {}", t.rows[i], t.cols[j], t.get(i, j)));
            }
        }
    }
    report.push(Check::from_witness("T off-diagonal entries divisible by q", cases, off));
    report
}

/// `T` with `G(sigma) = sum_a T[a, sigma] s(a)` and its verification report.
pub fn theorem52_matrix(mu: &RootLatticeWeight, order: LinearExtension) -> Result<(BasisMatrix, Report)> {
    let data = canonical_data(mu, order)?;
    Ok((data.t, data.report))
}

/// Congruences modulo `q` tying the algebra to the module of shape `lambda`.
///
/// (a) `F~(sigma) v_lambda - v_sigma` lies in `q L(lambda)`, the maximal
/// ideal of `A` times the lattice of tableau vectors, and the coordinates of
/// `s(a) v_lambda` off `v_sigma` lie in `q Z[q]`.
/// (b) For every shape `small` in `smalls`, the coefficient of `v_theta` in
/// `s(mono(sigma)) v_small`, over standard `theta, sigma` of `small`, forms a
/// unipotent matrix over `Z[q]` with off-diagonal entries divisible by `q`.
pub fn crystal_congruence_check(
    mu: &RootLatticeWeight,
    lambda: Option<&Shape>,
    smalls: &[Shape],
) -> Result<Report> {
    let space = WeightSpace::sufficient(mu, lambda, LinearExtension::default())?;
    let mut report = Report::new(format!("crystal congruence mu={mu} lambda={}", space.lambda));
    let k_all = kashiwara_tableau_matrix(&space)?;
    let mut a1 = None;
    for (i, x) in space.all.iter().enumerate() {
        for (j, sigma) in space.standard.iter().enumerate() {
            let c = k_all.get(i, j);
            let ok = if x == sigma { c.is_one() } else { c.membership().in_m };
            if !ok && a1.is_none() {
                a1 = Some(format!("coefficient of v_{x} in F~({sigma}) v_lambda is {c}"));
            }
        }
    }
    report.push(Check::from_witness(
        "(a) F~(sigma) v_lambda = v_sigma mod q L(lambda)",
        k_all.nrows() * k_all.ncols(),
        a1,
    ));

    let dual = dual_smt_in(&space)?;
    let n_all = smt_matrix(&space)?;
    let module = n_all.mul(&dual.coords, "s v_lambda")?;
    let mut a2 = None;
    for (i, x) in space.all.iter().enumerate() {
        for (j, sigma) in space.standard.iter().enumerate() {
            let c = module.get(i, j);
            let ok = if x == sigma { c.is_one() } else { c.membership().divisible_by_q };
            if !ok && a2.is_none() {
                a2 = Some(format!("coefficient of v_{x} in s({}) v_lambda is {c}", module.cols[j]));
            }
        }
    }
    report.push(Check::from_witness(
        "(a) s(a) v_lambda = v_sigma mod q Z[q]",
        module.nrows() * module.ncols(),
        a2,
    ));

    let monos = space.monomials();
    for small in smalls {
        let standard = enumerate_standard(small, Some(mu));
        let v = highest_weight_vector(small);
        let images: Vec<_> = monos
            .iter()
            .map(|m| apply_monomial(m, Flavor::Divided, &v))
            .collect::<Result<_>>()?;
        let mut witness = None;
        let mut cases = 0;
        for (j, sigma) in standard.iter().enumerate() {
            let target = sigma.monomial()?;
            let a = monos.iter().position(|m| *m == target).expect("standard monomial");
            // s(a) = sum_tau coords[tau, a] F(tau)
            let s_v = monos.iter().enumerate().fold(
                crate::repmod::ModuleVector::zero(small),
                |acc, (tau, _)| &acc + &images[tau].scaled(dual.coords.get(tau, a)),
            );
            for (i, theta) in standard.iter().enumerate() {
                cases += 1;
                let c = s_v.coeff(theta);
                let ok = if i == j {
                    c.is_one()
                } else if c.is_zero() {
                    true
                } else {
                    c.membership().divisible_by_q
                        && crate::tableaux::compare(theta, sigma).ok()
                            == Some(crate::tableaux::PartialOrdering::Less)
                };
                if !ok && witness.is_none() {
                    witness = Some(format!("shape {small}: coefficient of v_{theta} in s({target}) v is {c}"));
                }
            }
        }
        report.push(Check::from_witness(format!("(b) module expansion in shape {small}"), cases, witness));
    }
    Ok(report)
}

/// Both expansion verifiers on every weight space of one shape.
pub fn verify_shape_expansions(lambda: &Shape, order: LinearExtension) -> Result<Report> {
    let mut weights: Vec<RootLatticeWeight> = enumerate_standard(lambda, None)
        .iter()
        .map(|t| t.weight())
        .collect();
    weights.sort_by(|a, b| a.coeffs().cmp(b.coeffs()));
    weights.dedup();
    let mut report = Report::new(format!("expansions lambda={lambda}"));
    for mu in &weights {
        let space = WeightSpace::realize(lambda, mu, order)?;
        let n = smt_matrix(&space)?;
        report.extend(verify_expansion(&space, &n, Flavor::Divided));
        let k = kashiwara_tableau_matrix(&space)?;
        report.extend(verify_expansion(&space, &k, Flavor::Kashiwara));
    }
    Ok(report.collapsed())
}
