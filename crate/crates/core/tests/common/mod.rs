//! Independent reference implementations over plain sets.
//!
//! Nothing here goes through the library's masks or choice product:
//! sequential composition enumerates choice functions literally.

#![allow(dead_code)]

use std::collections::BTreeSet;

use multirel::{Multirelation, SubIdentity, Universe};

pub type Set = BTreeSet<usize>;
pub type Rel = BTreeSet<(usize, Set)>;

pub fn to_rel(r: &Multirelation) -> Rel {
    r.pairs()
        .map(|(a, m)| (a, (0..32).filter(|i| m >> i & 1 == 1).collect()))
        .collect()
}

pub fn from_rel(u: &Universe, r: &Rel) -> Multirelation {
    Multirelation::from_pairs(u, r.iter().map(|(a, s)| (*a, s.iter().fold(0u32, |m, &i| m | 1 << i)))).unwrap()
}

/// Every function `f` on `dom` with `f(b) ∈ choices(b)`, as the list of
/// its values in `dom` order.
fn functions(dom: &[usize], choices: &dyn Fn(usize) -> Vec<Set>) -> Vec<Vec<Set>> {
    let mut out: Vec<Vec<Set>> = vec![Vec::new()];
    for &b in dom {
        let opts = choices(b);
        out = out
            .into_iter()
            .flat_map(|f| {
                opts.iter().map(move |o| {
                    let mut g = f.clone();
                    g.push(o.clone());
                    g
                })
            })
            .collect();
    }
    out
}

/// `(a,A) ∈ R·S` iff some `(a,B) ∈ R` and `f` with `(b,f(b)) ∈ S` for all
/// `b ∈ B` give `A = ⋃ f(B)`.
pub fn seq(r: &Rel, s: &Rel) -> Rel {
    let images = |b: usize| -> Vec<Set> { s.iter().filter(|(x, _)| *x == b).map(|(_, a)| a.clone()).collect() };
    let mut out = Rel::new();
    for (a, bset) in r {
        let dom: Vec<usize> = bset.iter().copied().collect();
        for f in functions(&dom, &images) {
            out.insert((*a, f.into_iter().flatten().collect()));
        }
    }
    out
}

pub fn par(r: &Rel, s: &Rel) -> Rel {
    let mut out = Rel::new();
    for (a, x) in r {
        for (b, y) in s {
            if a == b {
                out.insert((*a, x.union(y).copied().collect()));
            }
        }
    }
    out
}

pub fn unit_seq(n: usize) -> Rel {
    (0..n).map(|a| (a, Set::from([a]))).collect()
}

pub fn dom(r: &Rel) -> Rel {
    r.iter().map(|(a, _)| (*a, Set::from([*a]))).collect()
}

pub fn anti(n: usize, r: &Rel) -> Rel {
    unit_seq(n).difference(&dom(r)).cloned().collect()
}

pub fn diamond(r: &Rel, p: &Rel) -> Rel {
    dom(&seq(r, p))
}

pub fn box_(n: usize, r: &Rel, p: &Rel) -> Rel {
    anti(n, &seq(r, &anti(n, p)))
}

pub fn sub(u: &Universe, p: &Rel) -> SubIdentity {
    SubIdentity::from_mask(u, p.iter().fold(0u32, |m, (a, _)| m | 1 << a)).unwrap()
}

/// `R*` as the union of `R^(n)`, `R^(0) = ∅`, `R^(n+1) = 1σ ∪ R·R^(n)`.
pub fn star(n: usize, r: &Rel) -> Rel {
    let mut x = Rel::new();
    loop {
        let next: Rel = unit_seq(n).union(&seq(r, &x)).cloned().collect();
        if next == x {
            return x;
        }
        x = next;
    }
}

/// Builds a relation from `(element, [outputs])` index pairs.
pub fn rel(pairs: &[(usize, &[usize])]) -> Rel {
    pairs.iter().map(|(a, s)| (*a, s.iter().copied().collect())).collect()
}
