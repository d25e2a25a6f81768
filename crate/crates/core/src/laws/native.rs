//! Checks stated directly on the set representation.

use super::Verdict;
use crate::error::Result;
use crate::modal;
use crate::mrel::{Multirelation, SubIdentity};
use crate::star::{approx_power, star, star_trace, default_max_steps};

fn compare(lhs: &Multirelation, rhs: &Multirelation) -> Verdict {
    if lhs == rhs {
        Verdict { holds: true, antecedent: None, lhs: None, rhs: None }
    } else {
        Verdict {
            holds: false,
            antecedent: None,
            lhs: Some(lhs.to_compact_string()),
            rhs: Some(rhs.to_compact_string()),
        }
    }
}

fn test(r: &Multirelation) -> Result<SubIdentity> {
    SubIdentity::try_from(r.clone())
}

/// `p·x` against the pairs of `x` whose source lies in `p`.
pub(super) fn input_restriction(values: &[Multirelation]) -> Result<Verdict> {
    let (x, p) = (&values[0], &values[1]);
    let pm = test(p)?.mask();
    let direct = Multirelation::from_pairs(x.universe(), x.pairs().filter(|&(a, _)| pm >> a & 1 == 1))?;
    Ok(compare(&p.seq_compose(x)?, &direct))
}

/// `x·p` against the pairs of `x` whose output set lies inside `p`.
pub(super) fn output_restriction(values: &[Multirelation]) -> Result<Verdict> {
    let (x, p) = (&values[0], &values[1]);
    let pm = test(p)?.mask();
    let direct = Multirelation::from_pairs(x.universe(), x.pairs().filter(|&(_, b)| b & !pm == 0))?;
    Ok(compare(&x.seq_compose(p)?, &direct))
}

pub(super) fn antidomain_complement(values: &[Multirelation]) -> Result<Verdict> {
    let x = &values[0];
    let u = x.universe();
    let direct = Multirelation::unit_seq(u).intersection(&x.domain().as_multirelation().complement())?;
    Ok(compare(x.antidomain().as_multirelation(), &direct))
}

pub(super) fn diamond_direct(values: &[Multirelation]) -> Result<Verdict> {
    let (x, p) = (&values[0], test(&values[1])?);
    let alg = modal::diamond(x, &p)?;
    let direct = modal::diamond_direct(x, &p)?;
    Ok(compare(alg.as_multirelation(), direct.as_multirelation()))
}

pub(super) fn box_direct(values: &[Multirelation]) -> Result<Verdict> {
    let (x, p) = (&values[0], test(&values[1])?);
    let alg = modal::box_(x, &p)?;
    let direct = modal::box_direct(x, &p)?;
    Ok(compare(alg.as_multirelation(), direct.as_multirelation()))
}

/// The approximants `x^(n)` agree with the fixpoint ascent and reach `x*`.
pub(super) fn star_iteration(values: &[Multirelation]) -> Result<Verdict> {
    let x = &values[0];
    let trace = star_trace(x, default_max_steps(x.universe()))?;
    for (n, iterate) in trace.iterates.iter().enumerate() {
        let power = approx_power(x, n)?;
        if &power != iterate {
            return Ok(compare(&power, iterate));
        }
    }
    let limit = approx_power(x, trace.stabilized_at + 1)?;
    Ok(compare(&limit, &star(x)?))
}
