use crate::algebra::{Algebra, MrelAlgebra};
use crate::error::Result;
use crate::mrel::Multirelation;

use super::{Environment, Term};

/// Structural evaluation of `t` in any algebra.
///
/// `⟨x⟩y` is computed as `d(x·d(y))` and `[x]y` as `a(x·a(y))`.
pub fn eval_in<A, F>(alg: &A, t: &Term, lookup: &F) -> Result<A::Elem>
where
    A: Algebra + ?Sized,
    F: Fn(&str) -> Result<A::Elem> + ?Sized,
{
    let ev = |x: &Term| eval_in(alg, x, lookup);
    match t {
        Term::Zero => Ok(alg.zero()),
        Term::UnitSeq => Ok(alg.one_seq()),
        Term::UnitPar => alg.one_par(),
        Term::Univ => alg.universal(),
        Term::Var(v) => lookup(v),
        Term::Plus(x, y) => alg.plus(&ev(x)?, &ev(y)?),
        Term::Seq(x, y) => alg.seq(&ev(x)?, &ev(y)?),
        Term::Par(x, y) => alg.par(&ev(x)?, &ev(y)?),
        Term::Dom(x) => alg.dom(&ev(x)?),
        Term::Anti(x) => alg.anti(&ev(x)?),
        Term::Star(x) => alg.star(&ev(x)?),
        Term::BStar(x, y) => alg.binary_star(&ev(x)?, &ev(y)?),
        Term::Dia(x, y) => {
            let p = alg.dom(&ev(y)?)?;
            alg.dom(&alg.seq(&ev(x)?, &p)?)
        }
        Term::Box(x, y) => {
            let np = alg.anti(&ev(y)?)?;
            alg.anti(&alg.seq(&ev(x)?, &np)?)
        }
    }
}

pub fn eval_term(t: &Term, env: &Environment) -> Result<Multirelation> {
    let alg = MrelAlgebra::new(env.universe());
    eval_in(&alg, t, &|name: &str| env.lookup(name).cloned())
}
