//! Finite algebras given by operation tables.
//!
//! Elements are indices into the carrier. Law formulas from the registry
//! are evaluated in these algebras through the same [`Algebra`] interface
//! used for multirelations, so checking an axiom system is an exhaustive
//! quantification over the carrier.

mod builtin;
mod check;
mod search;
mod text;

use serde::Serialize;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::laws::System;

pub use builtin::{builtin_model, builtin_models, reify_multirelations};
pub use check::{check_table_axioms, complements_of, is_isomorphic, AxiomCheck, TableReport};
pub use search::{search_models, Constraint, Property, SearchConfig, SearchResult};
pub use text::{parse_algebra, render_algebra};

pub type Table = Vec<Vec<usize>>;

/// Largest carrier accepted by the table checker.
pub const MAX_CARRIER: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiniteAlgebra {
    pub name: String,
    pub notes: Vec<String>,
    /// Axiom systems the model is expected to satisfy.
    pub claims: Vec<System>,
    pub carrier: Vec<String>,
    pub zero: usize,
    pub one_seq: usize,
    pub one_par: Option<usize>,
    pub plus: Table,
    pub seq: Table,
    pub par: Option<Table>,
    pub dom: Option<Vec<usize>>,
    pub anti: Option<Vec<usize>>,
    pub star: Option<Vec<usize>>,
}

fn check_unary(name: &str, t: &[usize], n: usize) -> Result<()> {
    if t.len() != n || t.iter().any(|&v| v >= n) {
        return Err(Error::Invalid(format!("table `{name}` is not total over the carrier")));
    }
    Ok(())
}

fn check_binary(name: &str, t: &Table, n: usize) -> Result<()> {
    if t.len() != n {
        return Err(Error::Invalid(format!("table `{name}` is not total over the carrier")));
    }
    t.iter().try_for_each(|row| check_unary(name, row, n))
}

impl FiniteAlgebra {
    pub fn size(&self) -> usize {
        self.carrier.len()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.carrier.iter().position(|c| c == name)
    }

    /// Checks that every table is total and every constant is in range.
    pub fn validate(&self) -> Result<()> {
        let n = self.size();
        if n == 0 || n > MAX_CARRIER {
            return Err(Error::Invalid(format!("carrier size {n} outside 1..={MAX_CARRIER}")));
        }
        let mut names = self.carrier.clone();
        names.sort();
        names.dedup();
        if names.len() != n {
            return Err(Error::Invalid("duplicate carrier element".into()));
        }
        if [Some(self.zero), Some(self.one_seq), self.one_par].into_iter().flatten().any(|c| c >= n) {
            return Err(Error::Invalid("constant outside the carrier".into()));
        }
        check_binary("plus", &self.plus, n)?;
        check_binary("seq", &self.seq, n)?;
        if let Some(t) = &self.par {
            check_binary("par", t, n)?;
        }
        for (name, t) in [("d", &self.dom), ("a", &self.anti), ("star", &self.star)] {
            if let Some(t) = t {
                check_unary(name, t, n)?;
            }
        }
        Ok(())
    }

    pub fn le(&self, x: usize, y: usize) -> bool {
        self.plus[x][y] == y
    }

    fn dom_of(&self, x: usize) -> Option<usize> {
        match (&self.dom, &self.anti) {
            (Some(d), _) => Some(d[x]),
            (None, Some(a)) => Some(a[a[x]]),
            (None, None) => None,
        }
    }

    /// The image of the domain operation, in carrier order.
    pub fn domain_elements(&self) -> Vec<usize> {
        let mut out: Vec<usize> = (0..self.size()).filter_map(|x| self.dom_of(x)).collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

impl Algebra for FiniteAlgebra {
    type Elem = usize;

    fn zero(&self) -> usize {
        self.zero
    }

    fn one_seq(&self) -> usize {
        self.one_seq
    }

    fn one_par(&self) -> Result<usize> {
        self.one_par.ok_or(Error::Unsupported("1p"))
    }

    fn plus(&self, x: &usize, y: &usize) -> Result<usize> {
        Ok(self.plus[*x][*y])
    }

    fn seq(&self, x: &usize, y: &usize) -> Result<usize> {
        Ok(self.seq[*x][*y])
    }

    fn par(&self, x: &usize, y: &usize) -> Result<usize> {
        self.par.as_ref().map(|t| t[*x][*y]).ok_or(Error::Unsupported("||"))
    }

    fn dom(&self, x: &usize) -> Result<usize> {
        self.dom_of(*x).ok_or(Error::Unsupported("d"))
    }

    fn anti(&self, x: &usize) -> Result<usize> {
        self.anti.as_ref().map(|t| t[*x]).ok_or(Error::Unsupported("a"))
    }

    fn star(&self, x: &usize) -> Result<usize> {
        self.star.as_ref().map(|t| t[*x]).ok_or(Error::Unsupported("^*"))
    }

    fn le(&self, x: &usize, y: &usize) -> Result<bool> {
        Ok(FiniteAlgebra::le(self, *x, *y))
    }

    fn tests(&self) -> Result<Vec<usize>> {
        if self.dom.is_none() && self.anti.is_none() {
            return Err(Error::Unsupported("d"));
        }
        Ok(self.domain_elements())
    }

    fn render(&self, x: &usize) -> String {
        self.carrier[*x].clone()
    }
}
