//! Least fixpoints by ascent from the empty multirelation.
//!
//! `M(X)` is finite, so the chain `∅ ⊆ f(∅) ⊆ f²(∅) ⊆ …` of an isotone `f`
//! stabilizes, and the value it stabilizes at is the least fixpoint.

use crate::error::{Error, Result};
use crate::mrel::Multirelation;
use crate::universe::Universe;

/// Iteration bound used when none is given: `2^(|X|+4)`.
pub fn default_max_steps(universe: &Universe) -> usize {
    1usize << (universe.len() + 4).min(40)
}

/// The full ascending chain of a fixpoint computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixpointTrace {
    /// `x₀ = ∅, x₁ = f(x₀), …, x_n` where `f(x_n) = x_n`.
    pub iterates: Vec<Multirelation>,
    pub stabilized_at: usize,
}

impl FixpointTrace {
    pub fn limit(&self) -> &Multirelation {
        &self.iterates[self.stabilized_at]
    }

    pub fn into_limit(mut self) -> Multirelation {
        self.iterates.swap_remove(self.stabilized_at)
    }
}

/// Iterates `f` from `∅` until two consecutive values agree.
///
/// `f` must be isotone; failing to stabilize within `max_steps`
/// applications is reported as [`Error::NoStabilization`].
pub fn lfp_iterate<F>(f: F, universe: &Universe, max_steps: usize) -> Result<FixpointTrace>
where
    F: Fn(&Multirelation) -> Result<Multirelation>,
{
    let mut iterates = vec![Multirelation::empty(universe)];
    for _ in 0..max_steps.max(1) {
        let last = iterates.last().expect("nonempty");
        let next = f(last)?;
        if &next == last {
            let stabilized_at = iterates.len() - 1;
            return Ok(FixpointTrace { iterates, stabilized_at });
        }
        iterates.push(next);
    }
    Err(Error::NoStabilization { steps: max_steps.max(1) })
}

/// `F_R = λX. 1σ ∪ R·X`
pub fn star_step(r: &Multirelation, x: &Multirelation) -> Result<Multirelation> {
    Multirelation::unit_seq(r.universe()).union(&r.seq_compose(x)?)
}

/// Trace of the least fixpoint of `F_R`.
pub fn star_trace(r: &Multirelation, max_steps: usize) -> Result<FixpointTrace> {
    lfp_iterate(|x| star_step(r, x), r.universe(), max_steps)
}

/// `R*`, the least fixpoint of `F_R`.
pub fn star(r: &Multirelation) -> Result<Multirelation> {
    Ok(star_trace(r, default_max_steps(r.universe()))?.into_limit())
}

/// `(R*S)`, the least fixpoint of `F_RS = λX. S ∪ R·X`.
pub fn binary_star(r: &Multirelation, s: &Multirelation) -> Result<Multirelation> {
    binary_star_trace(r, s, default_max_steps(r.universe())).map(FixpointTrace::into_limit)
}

pub fn binary_star_trace(r: &Multirelation, s: &Multirelation, max_steps: usize) -> Result<FixpointTrace> {
    if r.universe() != s.universe() {
        return Err(Error::UniverseMismatch);
    }
    lfp_iterate(|x| s.union(&r.seq_compose(x)?), r.universe(), max_steps)
}

/// `R^(0) = ∅`, `R^(n+1) = 1σ ∪ R·R^(n)`.
pub fn approx_power(r: &Multirelation, n: usize) -> Result<Multirelation> {
    (0..n).try_fold(Multirelation::empty(r.universe()), |acc, _| star_step(r, &acc))
}
