use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qlaurent::RationalQ;
use crate::tableaux::{RootLatticeWeight, Shape, Tableau};

/// A finite combination of tableau basis vectors `v_x` of the module of shape `lambda`.
///
/// Terms are kept sorted by the default tableau order, which matches the
/// enumeration order of all tableaux of the shape.
#[derive(Clone, PartialEq, Eq)]
pub struct ModuleVector {
    shape: Shape,
    terms: BTreeMap<Tableau, RationalQ>,
}

impl ModuleVector {
    pub fn zero(shape: &Shape) -> Self {
        ModuleVector {
            shape: shape.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(t: Tableau) -> Self {
        let shape = t.shape();
        let mut terms = BTreeMap::new();
        terms.insert(t, RationalQ::one());
        ModuleVector { shape, terms }
    }

    pub fn from_terms(
        shape: &Shape,
        terms: impl IntoIterator<Item = (Tableau, RationalQ)>,
    ) -> Result<Self> {
        let mut v = ModuleVector::zero(shape);
        for (t, c) in terms {
            if &t.shape() != shape {
                return Err(Error::ShapeMismatch(t.shape().to_string(), shape.to_string()));
            }
            v.add_term(t, &c);
        }
        Ok(v)
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Tableau, &RationalQ)> {
        self.terms.iter()
    }

    pub fn coeff(&self, t: &Tableau) -> RationalQ {
        self.terms.get(t).cloned().unwrap_or_default()
    }

    /// Adds `c * v_t`, dropping the entry if it cancels.
    pub fn add_term(&mut self, t: Tableau, c: &RationalQ) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(t) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &ModuleVector, c: &RationalQ) {
        if c.is_zero() {
            return;
        }
        for (t, x) in &other.terms {
            self.add_term(t.clone(), &(x * c));
        }
    }

    pub fn scaled(&self, c: &RationalQ) -> ModuleVector {
        if c.is_zero() {
            return ModuleVector::zero(&self.shape);
        }
        ModuleVector {
            shape: self.shape.clone(),
            terms: self.terms.iter().map(|(t, x)| (t.clone(), x * c)).collect(),
        }
    }

    pub fn map_coeffs(&self, f: impl Fn(&RationalQ) -> Result<RationalQ>) -> Result<ModuleVector> {
        let mut out = ModuleVector::zero(&self.shape);
        for (t, x) in &self.terms {
            out.add_term(t.clone(), &f(x)?);
        }
        Ok(out)
    }

    /// The common weight of every term; `None` for the zero vector.
    pub fn weight(&self) -> Result<Option<RootLatticeWeight>> {
        let mut it = self.terms.keys().map(Tableau::weight);
        let Some(first) = it.next() else {
            return Ok(None);
        };
        if it.any(|w| w != first) {
            return Err(Error::NotHomogeneous);
        }
        Ok(Some(first))
    }

    /// `<lambda - mu, alpha_i^vee>` for a homogeneous vector, read off any term.
    pub fn sl2_weight(&self, i: usize) -> Result<Option<i64>> {
        self.weight()?;
        Ok(self
            .terms
            .keys()
            .next()
            .map(|t| t.columns().iter().map(|c| c.kind(i).sl2_weight()).sum()))
    }

    /// Every coefficient lies in the local ring `A`.
    pub fn in_lattice(&self) -> bool {
        self.terms.values().all(|x| x.membership().in_a)
    }

    /// Reduction modulo `q` of a vector in the lattice: tableaux with their
    /// constant terms. `None` if some coefficient has a pole at `q = 0`.
    pub fn mod_q(&self) -> Option<BTreeMap<Tableau, num_rational::BigRational>> {
        let mut out = BTreeMap::new();
        for (t, x) in &self.terms {
            let v = x.value_at_zero()?;
            if v != num_rational::BigRational::from_integer(0.into()) {
                out.insert(t.clone(), v);
            }
        }
        Some(out)
    }

    pub fn to_json(&self) -> ModuleVectorJson {
        ModuleVectorJson {
            n: self.shape.rank(),
            shape: self.shape.mults().to_vec(),
            terms: self
                .terms
                .iter()
                .map(|(t, x)| TermJson {
                    tableau: t.to_lists(),
                    coeff: x.to_string(),
                })
                .collect(),
        }
    }

    pub fn from_json(j: &ModuleVectorJson) -> Result<Self> {
        let shape = Shape::new(j.n, j.shape.clone())?;
        let mut terms = Vec::with_capacity(j.terms.len());
        for term in &j.terms {
            terms.push((Tableau::new(j.n, &term.tableau)?, term.coeff.parse::<RationalQ>()?));
        }
        ModuleVector::from_terms(&shape, terms)
    }
}

/// Wire format of a [`ModuleVector`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleVectorJson {
    pub n: usize,
    pub shape: Vec<usize>,
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub tableau: Vec<Vec<u8>>,
    pub coeff: String,
}

impl std::ops::Add for &ModuleVector {
    type Output = ModuleVector;
    fn add(self, rhs: &ModuleVector) -> ModuleVector {
        let mut out = self.clone();
        out.add_scaled(rhs, &RationalQ::one());
        out
    }
}

impl std::ops::Sub for &ModuleVector {
    type Output = ModuleVector;
    fn sub(self, rhs: &ModuleVector) -> ModuleVector {
        let mut out = self.clone();
        out.add_scaled(rhs, &RationalQ::from_int(-1));
        out
    }
}

impl fmt::Display for ModuleVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (t, x)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if x.is_one() {
                write!(f, "v_{t}")?;
            } else {
                write!(f, "({x}) v_{t}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for ModuleVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
