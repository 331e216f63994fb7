use crate::error::{Error, Result};
use crate::tableaux::{
    enumerate_all, enumerate_standard, enumerate_standard_monomials, LinearExtension,
    RootLatticeWeight, Shape, StandardMonomial, Tableau,
};

use super::matrix::Label;

/// The weight space of weight `lambda - mu` in the module of shape `lambda`,
/// with its tableau bases sorted by a chosen linear extension.
#[derive(Debug, Clone)]
pub struct WeightSpace {
    pub mu: RootLatticeWeight,
    pub lambda: Shape,
    pub order: LinearExtension,
    /// Every tableau of the shape and weight.
    pub all: Vec<Tableau>,
    /// The standard ones among them.
    pub standard: Vec<Tableau>,
    /// Position of each standard tableau inside `all`.
    pub standard_rows: Vec<usize>,
}

impl WeightSpace {
    /// Any shape; the standard tableaux need not match the standard monomials.
    pub fn realize(lambda: &Shape, mu: &RootLatticeWeight, order: LinearExtension) -> Result<Self> {
        if mu.ell() + 1 != lambda.rank() {
            return Err(Error::InvalidArgument(format!(
                "weight {mu} does not match rank {}",
                lambda.rank()
            )));
        }
        let mut all = enumerate_all(lambda, Some(mu));
        order.sort(&mut all);
        let mut standard = enumerate_standard(lambda, Some(mu));
        order.sort(&mut standard);
        let standard_rows = standard
            .iter()
            .map(|s| all.iter().position(|t| t == s).expect("standard tableaux are tableaux"))
            .collect();
        Ok(WeightSpace {
            mu: mu.clone(),
            lambda: lambda.clone(),
            order,
            all,
            standard,
            standard_rows,
        })
    }

    /// A shape in which the weight space is a faithful copy of the algebra's:
    /// every standard tableau of weight `mu` is special and they match the
    /// standard monomials of weight `mu` one to one. Defaults to the minimal
    /// such shape `m_j = b_j`.
    pub fn sufficient(mu: &RootLatticeWeight, lambda: Option<&Shape>, order: LinearExtension) -> Result<Self> {
        let lambda = lambda.cloned().unwrap_or_else(|| mu.lambda_for());
        let space = WeightSpace::realize(&lambda, mu, order)?;
        let insufficient = |detail: String| Error::InsufficientShape {
            shape: lambda.to_string(),
            weight: mu.to_string(),
            detail,
        };
        if let Some(t) = space.standard.iter().find(|t| !t.is_special()) {
            return Err(insufficient(format!("standard tableau {t} is not special")));
        }
        let monos = enumerate_standard_monomials(lambda.rank(), mu)?;
        let mut realized = space.monomials();
        realized.sort();
        if monos != realized {
            return Err(insufficient(format!(
                "{} standard monomials but {} standard tableaux realize {} of them",
                monos.len(),
                space.standard.len(),
                realized.iter().filter(|m| monos.binary_search(m).is_ok()).count()
            )));
        }
        Ok(space)
    }

    pub fn n(&self) -> usize {
        self.lambda.rank()
    }

    pub fn dim(&self) -> usize {
        self.standard.len()
    }

    pub fn monomials(&self) -> Vec<StandardMonomial> {
        self.standard
            .iter()
            .map(|t| t.monomial().expect("standard"))
            .collect()
    }

    pub fn monomial_labels(&self) -> Vec<Label> {
        self.monomials().into_iter().map(Label::Monomial).collect()
    }

    pub fn all_labels(&self) -> Vec<Label> {
        self.all.iter().cloned().map(Label::Tableau).collect()
    }

    pub fn standard_labels(&self) -> Vec<Label> {
        self.standard.iter().cloned().map(Label::Tableau).collect()
    }

    pub fn row_of(&self, t: &Tableau) -> Option<usize> {
        self.all.iter().position(|x| x == t)
    }
}
