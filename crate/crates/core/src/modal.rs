//! Diamond and box over multirelations.
//!
//! Each operator has two independent routes: the algebraic one through
//! composition and (anti)domain, and a direct set-level one that never
//! composes. The test suites check them against each other.

use crate::error::{Error, Result};
use crate::mrel::{Multirelation, SubIdentity};

fn check_universe(r: &Multirelation, p: &SubIdentity) -> Result<()> {
    if r.universe() == p.universe() {
        Ok(())
    } else {
        Err(Error::UniverseMismatch)
    }
}

/// `⟨R⟩P = d(R · P)`
pub fn diamond(r: &Multirelation, p: &SubIdentity) -> Result<SubIdentity> {
    Ok(r.seq_compose(p.as_multirelation())?.domain())
}

/// `⟨R⟩P = {(a,{a}) | ∃B. (a,B) ∈ R ∧ B ⊆ P}`
pub fn diamond_direct(r: &Multirelation, p: &SubIdentity) -> Result<SubIdentity> {
    check_universe(r, p)?;
    let pm = p.mask();
    let mask = (0..r.universe().len())
        .filter(|&a| r.image(a).iter().any(|&b| b & !pm == 0))
        .fold(0, |m, a| m | (1 << a));
    SubIdentity::from_mask(r.universe(), mask)
}

/// `[R]P = a(R · a(P))`
pub fn box_(r: &Multirelation, p: &SubIdentity) -> Result<SubIdentity> {
    Ok(r.seq_compose(p.complement().as_multirelation())?.antidomain())
}

/// `[R]P = {(a,{a}) | ∀B. (a,B) ∈ R ⇒ B ∩ P ≠ ∅}`
///
/// Elements without any `R`-pair satisfy the condition vacuously.
pub fn box_direct(r: &Multirelation, p: &SubIdentity) -> Result<SubIdentity> {
    check_universe(r, p)?;
    let pm = p.mask();
    let mask = (0..r.universe().len())
        .filter(|&a| r.image(a).iter().all(|&b| b & pm != 0))
        .fold(0, |m, a| m | (1 << a));
    SubIdentity::from_mask(r.universe(), mask)
}

/// Diamond with an arbitrary second argument, normalized through `d`.
pub fn diamond_of(r: &Multirelation, y: &Multirelation) -> Result<SubIdentity> {
    diamond(r, &y.domain())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::universe::Universe;

    fn rel(u: &Universe, pairs: &[(&str, &[&str])]) -> Multirelation {
        Multirelation::from_named(u, pairs.iter().map(|(a, s)| (*a, s.iter().copied()))).unwrap()
    }

    fn sub(u: &Universe, names: &[&str]) -> SubIdentity {
        SubIdentity::from_names(u, names.iter().copied()).unwrap()
    }

    #[test]
    fn diamond_examples() {
        let u = Universe::alphabetic(2).unwrap();
        let r = rel(&u, &[("a", &[])]);
        let empty = SubIdentity::empty(&u);
        assert_eq!(diamond(&r, &empty).unwrap(), sub(&u, &["a"]));

        let r = rel(&u, &[("a", &["a", "b"])]);
        let pq = sub(&u, &["a"]).join(&sub(&u, &["b"])).unwrap();
        assert_eq!(diamond(&r, &pq).unwrap(), sub(&u, &["a"]));
        assert_eq!(diamond_direct(&r, &pq).unwrap(), sub(&u, &["a"]));

        let p = sub(&u, &["b"]);
        assert_eq!(diamond(&Multirelation::unit_seq(&u), &p).unwrap(), p);
        assert_eq!(diamond_direct(&Multirelation::empty(&u), &p).unwrap(), empty);
        let any = rel(&u, &[("a", &["b"]), ("b", &[])]);
        assert_eq!(diamond_direct(&any, &SubIdentity::full(&u)).unwrap(), any.domain());
    }

    #[test]
    fn box_examples() {
        let u = Universe::alphabetic(1).unwrap();
        let r = rel(&u, &[("a", &[])]);
        let p = sub(&u, &["a"]);
        assert!(box_(&r, &p).unwrap().as_multirelation().is_empty());
        assert!(box_direct(&r, &p).unwrap().as_multirelation().is_empty());
        assert_eq!(box_(&Multirelation::empty(&u), &p).unwrap(), SubIdentity::full(&u));
        assert_eq!(box_direct(&Multirelation::empty(&u), &SubIdentity::empty(&u)).unwrap(), p);
        assert_eq!(box_(&Multirelation::unit_seq(&u), &p).unwrap(), p);
        let universal = Multirelation::universal(&u);
        assert!(box_direct(&universal, &SubIdentity::full(&u)).unwrap().as_multirelation().is_empty());
    }

    #[test]
    fn mismatched_universes() {
        let r = Multirelation::unit_seq(&Universe::alphabetic(2).unwrap());
        let p = SubIdentity::full(&Universe::alphabetic(1).unwrap());
        assert_eq!(diamond(&r, &p).unwrap_err(), Error::UniverseMismatch);
        assert_eq!(diamond_direct(&r, &p).unwrap_err(), Error::UniverseMismatch);
        assert_eq!(box_direct(&r, &p).unwrap_err(), Error::UniverseMismatch);
    }
}
