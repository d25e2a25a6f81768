//! Table models shipped with the library.

use super::{FiniteAlgebra, Table};
use crate::laws::{multirelation_from_index, exhaustive_count, System};
use crate::error::{Error, Result};
use crate::mrel::Multirelation;
use crate::star;
use crate::universe::Universe;

fn names(xs: &[&str]) -> Vec<String> {
    xs.iter().map(|s| s.to_string()).collect()
}

/// Join table of a chain listed bottom to top.
fn chain_join(n: usize) -> Table {
    (0..n).map(|x| (0..n).map(|y| x.max(y)).collect()).collect()
}

fn chain_meet(n: usize) -> Table {
    (0..n).map(|x| (0..n).map(|y| x.min(y)).collect()).collect()
}

/// A four-element chain `0 < a < 1π < 1σ` whose domain elements
/// `0, a, 1σ` form a chain, so `a` has no complement.
fn chain4() -> FiniteAlgebra {
    // Indices: 0 = 0, 1 = a, 2 = 1p, 3 = 1s.
    FiniteAlgebra {
        name: "chain4".into(),
        notes: vec![
            "domain elements form the chain 0 < a < 1s; a and 1p have no complement".into(),
            "source tables: the second row of `;` is labelled 0 and the last row of d is labelled 1p; \
             read as the rows of a and 1s"
                .into(),
            "source `;` row a reads a a a a; a;0 = a breaks d(x||y) = d(x);d(y) at x = a, y = 0, \
             so a;0 = 0 is used"
                .into(),
        ],
        claims: vec![System::DpTrioid],
        carrier: names(&["0", "a", "1p", "1s"]),
        zero: 0,
        one_seq: 3,
        one_par: Some(2),
        plus: chain_join(4),
        seq: vec![vec![0, 0, 0, 0], vec![0, 1, 1, 1], vec![0, 1, 2, 2], vec![0, 1, 2, 3]],
        par: Some(vec![vec![0, 0, 0, 0], vec![0, 1, 1, 1], vec![0, 1, 2, 3], vec![0, 1, 3, 3]]),
        dom: Some(vec![0, 1, 3, 3]),
        anti: None,
        star: None,
    }
}

/// A three-element chain `0 < 1σ < 1π` with `‖` as meet, in which
/// `⟨1π⟩0 = 0`.
fn chain3() -> FiniteAlgebra {
    // Indices: 0 = 0, 1 = 1s, 2 = 1p.
    FiniteAlgebra {
        name: "chain3".into(),
        notes: vec!["<1p>0 = 0 although <1p>p = 1s holds for multirelations".into()],
        claims: vec![System::DpTrioid],
        carrier: names(&["0", "1s", "1p"]),
        zero: 0,
        one_seq: 1,
        one_par: Some(2),
        plus: chain_join(3),
        seq: vec![vec![0, 0, 0], vec![0, 1, 2], vec![0, 2, 2]],
        par: Some(chain_meet(3)),
        dom: Some(vec![0, 1, 1]),
        anti: None,
        star: None,
    }
}

/// The two-element boolean algebra with `1σ = 1π` and both compositions
/// as meet.
fn bool2() -> FiniteAlgebra {
    FiniteAlgebra {
        name: "bool2".into(),
        notes: vec!["both units coincide; `;` and `||` are meet, d is the identity".into()],
        claims: vec![System::DpTrioid, System::ApBiKleene],
        carrier: names(&["0", "1"]),
        zero: 0,
        one_seq: 1,
        one_par: Some(1),
        plus: chain_join(2),
        seq: chain_meet(2),
        par: Some(chain_meet(2)),
        dom: Some(vec![0, 1]),
        anti: Some(vec![1, 0]),
        star: Some(vec![1, 1]),
    }
}

/// `M(X)` as a table model, elements numbered as by
/// [`multirelation_from_index`]. Practical for `|X| ≤ 1`; the carrier has
/// `2^(|X|·2^|X|)` elements.
pub fn reify_multirelations(universe: &Universe) -> Result<FiniteAlgebra> {
    let count = exhaustive_count(universe)
        .filter(|&c| c <= super::MAX_CARRIER as u64)
        .ok_or(Error::ExhaustiveTooLarge { size: universe.len(), limit: 1 })? as usize;
    let elems: Vec<Multirelation> = (0..count as u64).map(|i| multirelation_from_index(universe, i)).collect();
    let index = |m: &Multirelation| elems.iter().position(|e| e == m).expect("closed under operations");
    let name = |m: &Multirelation, i: usize| -> String {
        let u = universe;
        if m.is_empty() {
            "0".into()
        } else if m == &Multirelation::unit_seq(u) {
            "1s".into()
        } else if m == &Multirelation::unit_par(u) {
            "1p".into()
        } else if m == &Multirelation::universal(u) {
            "U".into()
        } else {
            format!("m{i}")
        }
    };
    let binary = |f: &dyn Fn(&Multirelation, &Multirelation) -> Result<Multirelation>| -> Result<Table> {
        elems.iter().map(|x| elems.iter().map(|y| Ok(index(&f(x, y)?))).collect()).collect()
    };
    let unary = |f: &dyn Fn(&Multirelation) -> Result<Multirelation>| -> Result<Vec<usize>> {
        elems.iter().map(|x| Ok(index(&f(x)?))).collect()
    };
    Ok(FiniteAlgebra {
        name: format!("mrel{}", universe.len()),
        notes: vec![format!("all multirelations over {{{}}}", universe.names().join(", "))],
        claims: vec![System::DpBiKleene, System::ApBiKleene],
        carrier: elems.iter().enumerate().map(|(i, m)| name(m, i)).collect(),
        zero: index(&Multirelation::empty(universe)),
        one_seq: index(&Multirelation::unit_seq(universe)),
        one_par: Some(index(&Multirelation::unit_par(universe))),
        plus: binary(&|x, y| x.union(y))?,
        seq: binary(&|x, y| x.seq_compose(y))?,
        par: Some(binary(&|x, y| x.par_compose(y))?),
        dom: Some(unary(&|x| Ok(x.domain().into_multirelation()))?),
        anti: Some(unary(&|x| Ok(x.antidomain().into_multirelation()))?),
        star: Some(unary(&star::star)?),
    })
}

pub fn builtin_models() -> Vec<FiniteAlgebra> {
    let u = Universe::alphabetic(1).expect("one element");
    vec![chain4(), chain3(), bool2(), reify_multirelations(&u).expect("four elements")]
}

pub fn builtin_model(name: &str) -> Option<FiniteAlgebra> {
    builtin_models().into_iter().find(|m| m.name == name)
}
