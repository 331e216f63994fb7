use serde::Serialize;

use crate::error::Result;
use crate::qlaurent::{qbinom, qfactorial, RationalQ};

use super::ops::{act_e, divided_f_closed};
use super::ModuleVector;

/// One summand `F_i^{(depth)} u` of a string decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StringComponent {
    /// How far down its string the summand sits.
    pub depth: u32,
    /// The sl2-weight of `u`; the string has `highest_weight + 1` members.
    pub highest_weight: i64,
    /// A vector killed by `E_i`.
    pub u: ModuleVector,
}

/// `v = sum_J F_i^{(J)} u_J` with every `u_J` killed by `E_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StringDecomposition {
    pub root_index: usize,
    /// Nonzero components, deepest first.
    pub components: Vec<StringComponent>,
}

#[derive(Debug, Clone, Serialize)]
pub struct StringComponentSummary {
    pub depth: u32,
    pub highest_weight: i64,
    pub terms: usize,
}

impl StringDecomposition {
    /// `sum_J F_i^{(J)} u_J`.
    pub fn reassemble(&self, template: &ModuleVector) -> ModuleVector {
        self.shifted(template, 0)
    }

    /// `sum_J F_i^{(J + s)} u_J`, dropping components pushed above the top of their string.
    pub fn shifted(&self, template: &ModuleVector, s: i64) -> ModuleVector {
        let mut out = ModuleVector::zero(template.shape());
        for comp in &self.components {
            let d = comp.depth as i64 + s;
            if d < 0 || d > comp.highest_weight {
                continue;
            }
            out.add_scaled(&divided_f_closed(self.root_index, d as u32, &comp.u), &RationalQ::one());
        }
        out
    }

    pub fn summary(&self) -> Vec<StringComponentSummary> {
        self.components
            .iter()
            .map(|c| StringComponentSummary {
                depth: c.depth,
                highest_weight: c.highest_weight,
                terms: c.u.len(),
            })
            .collect()
    }
}

/// Splits a weight-homogeneous vector along the `alpha_i`-strings.
///
/// With `J` the largest power such that `E_i^J v != 0` and `m = w + 2J` (`w`
/// the sl2-weight of `v`), only the depth-`J` summand survives `E_i^J`, where
/// `E_i^J F_i^{(J)} u = [J]! [m choose J] u`. Peeling that summand off and
/// repeating gives the whole decomposition.
pub fn string_decompose(i: usize, v: &ModuleVector) -> Result<StringDecomposition> {
    let mut rest = v.clone();
    let mut components = Vec::new();
    while let Some(w) = rest.sl2_weight(i)? {
        let mut powers = vec![rest.clone()];
        loop {
            let next = act_e(i, powers.last().unwrap());
            if next.is_zero() {
                break;
            }
            powers.push(next);
        }
        let depth = (powers.len() - 1) as u32;
        let m = w + 2 * depth as i64;
        let scale = RationalQ::from(&qfactorial(depth) * &qbinom(m, depth as i64)?).inv()?;
        let u = powers.pop().unwrap().scaled(&scale);
        let peeled = divided_f_closed(i, depth, &u);
        rest = &rest - &peeled;
        components.push(StringComponent {
            depth,
            highest_weight: m,
            u,
        });
    }
    Ok(StringDecomposition {
        root_index: i,
        components,
    })
}

/// `F~_i v`.
pub fn kashiwara_f(i: usize, v: &ModuleVector) -> Result<ModuleVector> {
    kashiwara_f_power(i, 1, v)
}

/// `F~_i^k v = sum_J F_i^{(J + k)} u_J`.
pub fn kashiwara_f_power(i: usize, k: u32, v: &ModuleVector) -> Result<ModuleVector> {
    if k == 0 {
        return Ok(v.clone());
    }
    Ok(string_decompose(i, v)?.shifted(v, k as i64))
}

/// `E~_i v = sum_{J >= 1} F_i^{(J - 1)} u_J`.
pub fn kashiwara_e(i: usize, v: &ModuleVector) -> Result<ModuleVector> {
    Ok(string_decompose(i, v)?.shifted(v, -1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repmod::{act_f, highest_weight_vector};
    use crate::tableaux::{Shape, Tableau};

    fn t(n: usize, s: &str) -> Tableau {
        Tableau::parse(n, s).unwrap()
    }

    #[test]
    fn highest_weight_vector_is_one_component() {
        let lambda = Shape::new(3, vec![2, 1]).unwrap();
        let v = highest_weight_vector(&lambda);
        for i in 1..=2 {
            let d = string_decompose(i, &v).unwrap();
            assert_eq!(d.components.len(), 1);
            let c = &d.components[0];
            assert_eq!((c.depth, c.highest_weight), (0, lambda.mults()[i - 1] as i64));
            assert_eq!(c.u, v);
        }
    }

    #[test]
    fn image_of_f_is_one_step_down() {
        let v0 = ModuleVector::basis(t(2, "[[1],[1]]"));
        let v = act_f(1, &v0);
        let d = string_decompose(1, &v).unwrap();
        assert_eq!(d.components.len(), 1);
        assert_eq!((d.components[0].depth, d.components[0].highest_weight), (1, 2));
        assert_eq!(d.components[0].u, v0);
        assert_eq!(d.reassemble(&v), v);
        assert_eq!(kashiwara_f(1, &v0).unwrap(), v);
        assert_eq!(kashiwara_e(1, &v).unwrap(), v0);
    }

    #[test]
    fn mixed_vector_reassembles() {
        let a = ModuleVector::basis(t(2, "[[2],[1]]"));
        let d = string_decompose(1, &a).unwrap();
        assert_eq!(d.components.len(), 2);
        assert_eq!(d.reassemble(&a), a);
        for c in &d.components {
            assert!(act_e(1, &c.u).is_zero());
        }
    }

    #[test]
    fn inhomogeneous_input_is_rejected() {
        let mut v = ModuleVector::basis(t(2, "[[1],[1]]"));
        v.add_term(t(2, "[[1],[2]]"), &RationalQ::one());
        assert!(string_decompose(1, &v).is_err());
    }
}
