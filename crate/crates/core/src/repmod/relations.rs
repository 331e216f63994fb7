//! Exact checks of the defining relations of `U_q(sl_n)` on a module.

use serde::Serialize;

use crate::qlaurent::{qint, LaurentPoly, RationalQ};
use crate::tableaux::{enumerate_all, Shape};

use super::ops::{act_e, act_f, act_k, act_kinv};
use super::ModuleVector;

#[derive(Debug, Clone, Copy)]
enum Op {
    E(usize),
    F(usize),
    K(usize),
    Kinv(usize),
}

impl Op {
    fn apply(self, v: &ModuleVector) -> ModuleVector {
        match self {
            Op::E(i) => act_e(i, v),
            Op::F(i) => act_f(i, v),
            Op::K(i) => act_k(i, v),
            Op::Kinv(i) => act_kinv(i, v),
        }
    }
}

/// A linear combination of operator words; each word acts right to left.
type Combination = Vec<(RationalQ, Vec<Op>)>;

fn evaluate(comb: &Combination, v: &ModuleVector) -> ModuleVector {
    let mut out = ModuleVector::zero(v.shape());
    for (c, word) in comb {
        let mut w = v.clone();
        for op in word.iter().rev() {
            w = op.apply(&w);
        }
        out.add_scaled(&w, c);
    }
    out
}

#[derive(Debug, Clone, Serialize)]
pub struct RelationOutcome {
    pub relation: String,
    pub vectors_checked: usize,
    pub passed: bool,
    pub witness: Option<String>,
}

fn cartan(i: usize, j: usize) -> i64 {
    match i.abs_diff(j) {
        0 => 2,
        1 => -1,
        _ => 0,
    }
}

fn one() -> RationalQ {
    RationalQ::one()
}

fn relations(n: usize) -> Vec<(String, Combination)> {
    let mut out: Vec<(String, Combination)> = Vec::new();
    let q_minus_qinv = LaurentPoly::from_terms([(1i64, 1i64), (-1, -1)]);
    let inv_denom = RationalQ::new(LaurentPoly::one(), q_minus_qinv).expect("nonzero");
    let two = RationalQ::from(qint(2));
    for i in 1..n {
        out.push((
            format!("K{i} K{i}^-1 = 1"),
            vec![(one(), vec![Op::K(i), Op::Kinv(i)]), (-one(), vec![])],
        ));
        out.push((
            format!("K{i}^-1 K{i} = 1"),
            vec![(one(), vec![Op::Kinv(i), Op::K(i)]), (-one(), vec![])],
        ));
        for j in 1..n {
            let a = cartan(i, j);
            out.push((
                format!("K{i} F{j} K{i}^-1 = q^{} F{j}", -a),
                vec![
                    (one(), vec![Op::K(i), Op::F(j), Op::Kinv(i)]),
                    (-RationalQ::q_pow(-a), vec![Op::F(j)]),
                ],
            ));
            out.push((
                format!("K{i} E{j} K{i}^-1 = q^{} E{j}", a),
                vec![
                    (one(), vec![Op::K(i), Op::E(j), Op::Kinv(i)]),
                    (-RationalQ::q_pow(a), vec![Op::E(j)]),
                ],
            ));
            let mut comm = vec![
                (one(), vec![Op::E(i), Op::F(j)]),
                (-one(), vec![Op::F(j), Op::E(i)]),
            ];
            if i == j {
                comm.push((-inv_denom.clone(), vec![Op::K(i)]));
                comm.push((inv_denom.clone(), vec![Op::Kinv(i)]));
                out.push((format!("[E{i}, F{i}] = (K{i} - K{i}^-1)/(q - q^-1)"), comm));
            } else {
                out.push((format!("[E{i}, F{j}] = 0"), comm));
            }
            if i.abs_diff(j) == 1 {
                for (name, op) in [("F", Op::F as fn(usize) -> Op), ("E", Op::E)] {
                    out.push((
                        format!("{name}{i}^2 {name}{j} - [2] {name}{i} {name}{j} {name}{i} + {name}{j} {name}{i}^2 = 0"),
                        vec![
                            (one(), vec![op(i), op(i), op(j)]),
                            (-two.clone(), vec![op(i), op(j), op(i)]),
                            (one(), vec![op(j), op(i), op(i)]),
                        ],
                    ));
                }
            } else if i.abs_diff(j) > 1 {
                for (name, op) in [("F", Op::F as fn(usize) -> Op), ("E", Op::E)] {
                    out.push((
                        format!("{name}{i} {name}{j} = {name}{j} {name}{i}"),
                        vec![(one(), vec![op(i), op(j)]), (-one(), vec![op(j), op(i)])],
                    ));
                }
            }
        }
    }
    out
}

/// Checks every defining relation as an operator identity on every basis
/// vector of the module of shape `lambda`.
pub fn relations_check(lambda: &Shape) -> Vec<RelationOutcome> {
    let basis: Vec<ModuleVector> = enumerate_all(lambda, None)
        .into_iter()
        .map(ModuleVector::basis)
        .collect();
    relations(lambda.rank())
        .into_iter()
        .map(|(relation, comb)| {
            let bad = basis.iter().find_map(|v| {
                let r = evaluate(&comb, v);
                (!r.is_zero()).then(|| format!("on {v}: {r}"))
            });
            RelationOutcome {
                relation,
                vectors_checked: basis.len(),
                passed: bad.is_none(),
                witness: bad,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relations_hold_on_small_modules() {
        for n in 2..=4 {
            for lambda in Shape::all_up_to_boxes(n, 3).unwrap() {
                for o in relations_check(&lambda) {
                    assert!(o.passed, "{lambda}: {} {:?}", o.relation, o.witness);
                }
            }
        }
    }

    #[test]
    fn a_wrong_relation_is_caught() {
        let lambda = Shape::new(2, vec![2]).unwrap();
        let v = ModuleVector::basis(crate::tableaux::Tableau::smallest(&lambda));
        let comb: Combination = vec![(one(), vec![Op::E(1), Op::F(1)]), (-one(), vec![Op::F(1), Op::E(1)])];
        assert!(!evaluate(&comb, &v).is_zero());
    }
}
