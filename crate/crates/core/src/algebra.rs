//! The signature shared by concrete multirelations and abstract table models.
//!
//! Terms and law formulas are interpreted in any [`Algebra`], which lets the
//! same axiom text be checked against `M(X)` and against finite tables.

use std::fmt::Debug;

use crate::error::{Error, Result};
use crate::mrel::{Multirelation, SubIdentity};
use crate::star;
use crate::universe::Universe;

pub trait Algebra {
    type Elem: Clone + PartialEq + Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one_seq(&self) -> Self::Elem;
    fn one_par(&self) -> Result<Self::Elem>;
    fn universal(&self) -> Result<Self::Elem> {
        Err(Error::Unsupported("U"))
    }

    fn plus(&self, x: &Self::Elem, y: &Self::Elem) -> Result<Self::Elem>;
    fn seq(&self, x: &Self::Elem, y: &Self::Elem) -> Result<Self::Elem>;
    fn par(&self, x: &Self::Elem, y: &Self::Elem) -> Result<Self::Elem>;
    fn dom(&self, x: &Self::Elem) -> Result<Self::Elem>;
    fn anti(&self, x: &Self::Elem) -> Result<Self::Elem>;
    fn star(&self, x: &Self::Elem) -> Result<Self::Elem>;
    fn binary_star(&self, _x: &Self::Elem, _y: &Self::Elem) -> Result<Self::Elem> {
        Err(Error::Unsupported("bstar"))
    }

    /// The semilattice order, `x ≤ y ⇔ x + y = y`.
    fn le(&self, x: &Self::Elem, y: &Self::Elem) -> Result<bool> {
        Ok(&self.plus(x, y)? == y)
    }

    /// The elements tests range over: domain elements of the algebra.
    fn tests(&self) -> Result<Vec<Self::Elem>>;

    fn render(&self, x: &Self::Elem) -> String {
        format!("{x:?}")
    }
}

/// The full multirelational algebra `M(X)` over one universe.
#[derive(Debug, Clone)]
pub struct MrelAlgebra {
    universe: Universe,
    max_steps: usize,
}

impl MrelAlgebra {
    pub fn new(universe: &Universe) -> Self {
        MrelAlgebra { universe: universe.clone(), max_steps: star::default_max_steps(universe) }
    }

    pub fn with_max_steps(mut self, max_steps: usize) -> Self {
        self.max_steps = max_steps;
        self
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }
}

impl Algebra for MrelAlgebra {
    type Elem = Multirelation;

    fn zero(&self) -> Multirelation {
        Multirelation::empty(&self.universe)
    }

    fn one_seq(&self) -> Multirelation {
        Multirelation::unit_seq(&self.universe)
    }

    fn one_par(&self) -> Result<Multirelation> {
        Ok(Multirelation::unit_par(&self.universe))
    }

    fn universal(&self) -> Result<Multirelation> {
        Ok(Multirelation::universal(&self.universe))
    }

    fn plus(&self, x: &Multirelation, y: &Multirelation) -> Result<Multirelation> {
        x.union(y)
    }

    fn seq(&self, x: &Multirelation, y: &Multirelation) -> Result<Multirelation> {
        x.seq_compose(y)
    }

    fn par(&self, x: &Multirelation, y: &Multirelation) -> Result<Multirelation> {
        x.par_compose(y)
    }

    fn dom(&self, x: &Multirelation) -> Result<Multirelation> {
        Ok(x.domain().into_multirelation())
    }

    fn anti(&self, x: &Multirelation) -> Result<Multirelation> {
        Ok(x.antidomain().into_multirelation())
    }

    fn star(&self, x: &Multirelation) -> Result<Multirelation> {
        Ok(star::star_trace(x, self.max_steps)?.into_limit())
    }

    fn binary_star(&self, x: &Multirelation, y: &Multirelation) -> Result<Multirelation> {
        Ok(star::binary_star_trace(x, y, self.max_steps)?.into_limit())
    }

    fn le(&self, x: &Multirelation, y: &Multirelation) -> Result<bool> {
        x.is_subset(y)
    }

    fn tests(&self) -> Result<Vec<Multirelation>> {
        Ok(SubIdentity::all(&self.universe).map(SubIdentity::into_multirelation).collect())
    }
}
