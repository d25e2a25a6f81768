//! Multirelations over small finite universes and the algebra they form.
//!
//! A multirelation relates a state to a *set* of states. This crate
//! provides the concrete model (sequential and parallel composition,
//! domain, antidomain, diamond, box, and fixpoint stars), a term language
//! evaluated in it, a registry of algebraic laws checked by exhaustive and
//! seeded random sweeps, and finite operation-table models with a small
//! model finder.

pub mod algebra;
pub mod error;
pub mod exec;
pub mod finite;
pub mod io;
pub mod laws;
pub mod modal;
pub mod mrel;
pub mod star;
pub mod term;
pub mod universe;

pub use algebra::{Algebra, MrelAlgebra};
pub use error::{Error, Result};
pub use exec::Execution;
pub use mrel::{Constant, Multirelation, SubIdentity};
pub use term::{eval_term, parse_term, Environment, Term};
pub use universe::{ElementSet, Mask, Universe};
