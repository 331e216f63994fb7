//! Tensor products of the fundamental representations of `U_q(sl_n)`.
//!
//! The module of shape `lambda = (m_1, ..., m_l)` is `V(1)^{m_1} (x) ... (x) V(l)^{m_l}`,
//! with `V(r)` the `r`-th exterior power of the natural representation. Its basis
//! vectors `v_x` are indexed by all tableaux `x` of shape `lambda`, one column per
//! tensor factor. [`ModuleVector`] holds exact `Q(q)` combinations of them.

mod ops;
mod relations;
mod string;
mod vector;

pub use ops::{
    act_e, act_f, act_k, act_kinv, closed_form_divided_f, closed_form_mismatch, divided_f,
    divided_f_closed,
};
pub use relations::{relations_check, RelationOutcome};
pub use string::{
    kashiwara_e, kashiwara_f, kashiwara_f_power, string_decompose, StringComponent,
    StringComponentSummary, StringDecomposition,
};
pub use vector::{ModuleVector, ModuleVectorJson, TermJson};

use crate::error::Result;
use crate::tableaux::{Shape, StandardMonomial, Tableau};

/// `v_lambda`, the basis vector of the smallest tableau.
pub fn highest_weight_vector(lambda: &Shape) -> ModuleVector {
    ModuleVector::basis(Tableau::smallest(lambda))
}

/// Which operators a monomial is read in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Flavor {
    /// Divided powers `F_i^{(a)}`.
    #[default]
    Divided,
    /// Kashiwara operators `F~_i^a`.
    Kashiwara,
}

impl std::str::FromStr for Flavor {
    type Err = crate::Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "divided" => Ok(Flavor::Divided),
            "kashiwara" => Ok(Flavor::Kashiwara),
            _ => Err(crate::Error::InvalidArgument(format!(
                "flavor must be divided or kashiwara, got {s:?}"
            ))),
        }
    }
}

/// Applies a word of `(root, exponent)` factors written left to right, so
/// the rightmost factor acts first.
pub fn apply_word(word: &[(usize, u32)], flavor: Flavor, v: &ModuleVector) -> Result<ModuleVector> {
    let mut w = v.clone();
    for &(i, a) in word.iter().rev() {
        if a == 0 {
            continue;
        }
        w = match flavor {
            Flavor::Divided => divided_f_closed(i, a, &w),
            Flavor::Kashiwara => kashiwara_f_power(i, a, &w)?,
        };
        if w.is_zero() {
            break;
        }
    }
    Ok(w)
}

/// `F(a) v` or `F~(a) v` for a standard monomial `a`, in its printed factor order.
pub fn apply_monomial(m: &StandardMonomial, flavor: Flavor, v: &ModuleVector) -> Result<ModuleVector> {
    apply_word(&m.factors(), flavor, v)
}

/// `F(sigma) v` or `F~(sigma) v`, through the monomial of `sigma`.
pub fn apply_tableau(sigma: &Tableau, flavor: Flavor, v: &ModuleVector) -> Result<ModuleVector> {
    apply_monomial(&sigma.monomial()?, flavor, v)
}

/// The same operator as [`apply_tableau`], with the word produced by the
/// marked-step recursion instead of the exponent array.
pub fn apply_marked(sigma: &Tableau, flavor: Flavor, v: &ModuleVector) -> Result<ModuleVector> {
    apply_word(&sigma.marked_word()?, flavor, v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qlaurent::{LaurentPoly, RationalQ};
    use crate::tableaux::{enumerate_all, enumerate_standard, PartialOrdering, RootLatticeWeight};
    use num_rational::BigRational;
    use proptest::prelude::*;

    /// Crystal of a tensor product of minuscule columns by the signature rule:
    /// each factor reads `-` (type III) or `+` (type I), adjacent `+ -` pairs
    /// cancel, `F~` moves the leftmost surviving `+`, `E~` the rightmost surviving `-`.
    fn signature_move(y: &Tableau, i: usize, raise: bool) -> Option<Tableau> {
        let mut stack: Vec<usize> = Vec::new();
        let mut minus: Vec<usize> = Vec::new();
        for (j, col) in y.columns().iter().enumerate() {
            match col.kind(i).sl2_weight() {
                1 => stack.push(j),
                -1 if stack.pop().is_none() => minus.push(j),
                _ => {}
            }
        }
        if raise {
            let j = *stack.first()?;
            Some(y.with_column(j, y.columns()[j].raise(i)))
        } else {
            let j = *minus.last()?;
            Some(y.with_column(j, y.columns()[j].lower(i)))
        }
    }

    fn reduce(v: &ModuleVector) -> std::collections::BTreeMap<Tableau, BigRational> {
        assert!(v.in_lattice(), "{v}");
        v.mod_q().unwrap()
    }

    fn expect_crystal(v: &ModuleVector, target: Option<Tableau>) {
        let r = reduce(v);
        match target {
            None => assert!(r.is_empty(), "{v}"),
            Some(t) => {
                assert_eq!(r.len(), 1, "{v}");
                assert_eq!(r.get(&t), Some(&BigRational::from_integer(1.into())), "{v}");
            }
        }
    }

    #[test]
    fn kashiwara_operators_follow_the_signature_rule() {
        for n in 2..=4 {
            for shape in Shape::all_up_to_columns(n, 4).unwrap() {
                for y in enumerate_all(&shape, None) {
                    let v = ModuleVector::basis(y.clone());
                    for i in 1..n {
                        expect_crystal(&kashiwara_f(i, &v).unwrap(), signature_move(&y, i, true));
                        expect_crystal(&kashiwara_e(i, &v).unwrap(), signature_move(&y, i, false));
                    }
                }
            }
        }
    }

    #[test]
    fn monomial_orders_agree_on_sample() {
        let sigma = Tableau::parse(
            4,
            "[[4],[4],[3],[3,4],[3,4],[2,4],[2,3],[2,3,4],[1,3,4]]",
        )
        .unwrap();
        let v = highest_weight_vector(&sigma.shape());
        let a = apply_tableau(&sigma, Flavor::Divided, &v).unwrap();
        let b = apply_marked(&sigma, Flavor::Divided, &v).unwrap();
        assert_eq!(a, b);
        assert!(a.coeff(&sigma).is_one());
        for (x, c) in a.terms() {
            let m = c.membership();
            assert!(m.in_nqq, "{x}: {c}");
            if x != &sigma {
                assert_eq!(crate::tableaux::compare(x, &sigma).unwrap(), PartialOrdering::Less);
            }
        }
    }

    #[test]
    fn empty_monomial_is_identity() {
        let lambda = Shape::new(3, vec![1, 1]).unwrap();
        let v = highest_weight_vector(&lambda);
        let z = StandardMonomial::zero(3).unwrap();
        assert_eq!(apply_monomial(&z, Flavor::Divided, &v).unwrap(), v);
        assert_eq!(apply_monomial(&z, Flavor::Kashiwara, &v).unwrap(), v);
    }

    #[test]
    fn closed_form_agrees_with_repeated_f() {
        for n in 2..=4 {
            for shape in Shape::all_up_to_columns(n, 4).unwrap() {
                for y in enumerate_all(&shape, None) {
                    let v = ModuleVector::basis(y.clone());
                    for i in 1..n {
                        let s = y.columns().iter().filter(|c| c.kind(i).sl2_weight() == 1).count();
                        for k in 0..=s as u32 + 1 {
                            assert_eq!(
                                closed_form_divided_f(i, k, &y),
                                divided_f(i, k, &v).unwrap(),
                                "i={i} k={k} y={y}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let lambda = Shape::new(3, vec![1, 1]).unwrap();
        let v = act_f(2, &act_f(1, &highest_weight_vector(&lambda)));
        let j = v.to_json();
        let text = serde_json::to_string(&j).unwrap();
        let back: ModuleVectorJson = serde_json::from_str(&text).unwrap();
        assert_eq!(ModuleVector::from_json(&back).unwrap(), v);
    }

    fn homogeneous_vector() -> impl Strategy<Value = (usize, ModuleVector)> {
        (2usize..=3)
            .prop_flat_map(|n| {
                let shapes: Vec<Shape> = Shape::all_up_to_columns(n, 3)
                    .unwrap()
                    .into_iter()
                    .filter(|s| s.num_columns() > 0)
                    .collect();
                (Just(n), prop::sample::select(shapes))
            })
            .prop_flat_map(|(n, shape)| {
                let weights: Vec<RootLatticeWeight> = {
                    let mut w: Vec<_> = enumerate_all(&shape, None).iter().map(|t| t.weight()).collect();
                    w.sort();
                    w.dedup();
                    w
                };
                (Just(n), Just(shape), prop::sample::select(weights))
            })
            .prop_flat_map(|(n, shape, mu)| {
                let basis = enumerate_all(&shape, Some(&mu));
                let len = basis.len();
                let coeffs = prop::collection::vec(
                    prop::collection::vec((0i64..3, -2i64..=2), 0..3),
                    len,
                );
                (Just(n), Just(shape), Just(basis), coeffs)
            })
            .prop_map(|(n, shape, basis, coeffs)| {
                let terms = basis.into_iter().zip(coeffs).map(|(t, c)| {
                    (t, RationalQ::from(LaurentPoly::from_terms(c)))
                });
                (n, ModuleVector::from_terms(&shape, terms).unwrap())
            })
    }

    proptest! {
        #[test]
        fn kashiwara_operators_preserve_the_lattice((n, v) in homogeneous_vector()) {
            for i in 1..n {
                prop_assert!(kashiwara_f(i, &v).unwrap().in_lattice());
                prop_assert!(kashiwara_e(i, &v).unwrap().in_lattice());
                prop_assert!(kashiwara_f_power(i, 2, &v).unwrap().in_lattice());
            }
        }

        #[test]
        fn string_decomposition_reassembles((n, v) in homogeneous_vector()) {
            for i in 1..n {
                let d = string_decompose(i, &v).unwrap();
                prop_assert_eq!(d.reassemble(&v), v.clone());
                for c in &d.components {
                    prop_assert!(act_e(i, &c.u).is_zero());
                    prop_assert_eq!(c.u.sl2_weight(i).unwrap(), Some(c.highest_weight));
                    prop_assert_eq!(act_k(i, &c.u), c.u.scaled(&RationalQ::q_pow(c.highest_weight)));
                }
            }
        }

        #[test]
        fn generators_shift_weight((n, v) in homogeneous_vector()) {
            let mu = v.weight().unwrap();
            for i in 1..n {
                let f = act_f(i, &v);
                if let (Some(mu), Some(fw)) = (&mu, f.weight().unwrap()) {
                    let mut expect = mu.coeffs().to_vec();
                    expect[i - 1] += 1;
                    prop_assert_eq!(fw.coeffs(), &expect[..]);
                }
                let e = act_e(i, &v);
                if let (Some(mu), Some(ew)) = (&mu, e.weight().unwrap()) {
                    let mut expect = mu.coeffs().to_vec();
                    expect[i - 1] -= 1;
                    prop_assert_eq!(ew.coeffs(), &expect[..]);
                }
            }
        }
    }

    #[test]
    fn kashiwara_leading_terms_on_standard_tableaux() {
        let lambda = Shape::new(3, vec![2, 1]).unwrap();
        let v = highest_weight_vector(&lambda);
        for sigma in enumerate_standard(&lambda, None) {
            let w = apply_tableau(&sigma, Flavor::Kashiwara, &v).unwrap();
            expect_crystal(&w, Some(sigma.clone()));
        }
    }
}
