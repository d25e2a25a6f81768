//! Multirelations `R ⊆ X × 2^X` and their first-order operations.
//!
//! A multirelation is stored row by row: for each source element, the sorted
//! and deduplicated list of output sets it is related to. Equality is plain
//! extensional set equality; no closure of any kind is ever applied.

use std::fmt;

use crate::error::{Error, Result};
use crate::universe::{bits, ElementSet, Mask, Universe};

/// The four distinguished constants.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Constant {
    Empty,
    UnitSeq,
    UnitPar,
    Universal,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Multirelation {
    universe: Universe,
    rows: Vec<Vec<Mask>>,
}

fn normalize(row: &mut Vec<Mask>) {
    row.sort_unstable();
    row.dedup();
}

impl Multirelation {
    pub fn empty(universe: &Universe) -> Self {
        Multirelation { universe: universe.clone(), rows: vec![Vec::new(); universe.len()] }
    }

    /// `1σ = {(a, {a})}`
    pub fn unit_seq(universe: &Universe) -> Self {
        let rows = (0..universe.len()).map(|a| vec![1 << a]).collect();
        Multirelation { universe: universe.clone(), rows }
    }

    /// `1π = {(a, ∅)}`
    pub fn unit_par(universe: &Universe) -> Self {
        Multirelation { universe: universe.clone(), rows: vec![vec![0]; universe.len()] }
    }

    /// `U = X × 2^X`
    pub fn universal(universe: &Universe) -> Self {
        let all: Vec<Mask> = universe.subsets().collect();
        Multirelation { universe: universe.clone(), rows: vec![all; universe.len()] }
    }

    pub fn constant(kind: Constant, universe: &Universe) -> Self {
        match kind {
            Constant::Empty => Self::empty(universe),
            Constant::UnitSeq => Self::unit_seq(universe),
            Constant::UnitPar => Self::unit_par(universe),
            Constant::Universal => Self::universal(universe),
        }
    }

    /// Builds a multirelation from `(element index, output mask)` pairs.
    pub fn from_pairs<I>(universe: &Universe, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, Mask)>,
    {
        let mut rows = vec![Vec::new(); universe.len()];
        for (a, m) in pairs {
            if a >= universe.len() {
                return Err(Error::IndexOutOfRange(a));
            }
            universe.check_mask(m)?;
            rows[a].push(m);
        }
        rows.iter_mut().for_each(normalize);
        Ok(Multirelation { universe: universe.clone(), rows })
    }

    /// Builds a multirelation from named pairs, e.g. `[("a", &["b", "c"][..])]`.
    pub fn from_named<'a, I, S>(universe: &Universe, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (&'a str, S)>,
        S: IntoIterator<Item = &'a str>,
    {
        let mut out = Vec::new();
        for (a, set) in pairs {
            out.push((universe.require(a)?, universe.mask_of(set)?));
        }
        Self::from_pairs(universe, out)
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    /// Output sets related to source element `a`, in increasing mask order.
    pub fn image(&self, a: usize) -> &[Mask] {
        &self.rows[a]
    }

    /// All pairs in canonical order: by element index, then by output mask.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, Mask)> + '_ {
        self.rows.iter().enumerate().flat_map(|(a, row)| row.iter().map(move |&m| (a, m)))
    }

    pub fn len(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.iter().all(Vec::is_empty)
    }

    pub fn contains(&self, a: usize, mask: Mask) -> bool {
        self.rows.get(a).is_some_and(|row| row.binary_search(&mask).is_ok())
    }

    fn same_universe(&self, other: &Multirelation) -> Result<()> {
        if self.universe == other.universe {
            Ok(())
        } else {
            Err(Error::UniverseMismatch)
        }
    }

    /// `self ⊆ other`
    pub fn is_subset(&self, other: &Multirelation) -> Result<bool> {
        self.same_universe(other)?;
        Ok(self
            .rows
            .iter()
            .zip(&other.rows)
            .all(|(mine, theirs)| mine.iter().all(|m| theirs.binary_search(m).is_ok())))
    }

    fn zip_rows<F>(&self, other: &Multirelation, f: F) -> Result<Multirelation>
    where
        F: Fn(&[Mask], &[Mask]) -> Vec<Mask>,
    {
        self.same_universe(other)?;
        let rows = self.rows.iter().zip(&other.rows).map(|(x, y)| f(x, y)).collect();
        Ok(Multirelation { universe: self.universe.clone(), rows })
    }

    pub fn union(&self, other: &Multirelation) -> Result<Multirelation> {
        self.zip_rows(other, |x, y| {
            let mut row = Vec::with_capacity(x.len() + y.len());
            let (mut i, mut j) = (0, 0);
            while i < x.len() && j < y.len() {
                match x[i].cmp(&y[j]) {
                    std::cmp::Ordering::Less => {
                        row.push(x[i]);
                        i += 1;
                    }
                    std::cmp::Ordering::Greater => {
                        row.push(y[j]);
                        j += 1;
                    }
                    std::cmp::Ordering::Equal => {
                        row.push(x[i]);
                        i += 1;
                        j += 1;
                    }
                }
            }
            row.extend_from_slice(&x[i..]);
            row.extend_from_slice(&y[j..]);
            row
        })
    }

    pub fn intersection(&self, other: &Multirelation) -> Result<Multirelation> {
        self.zip_rows(other, |x, y| x.iter().copied().filter(|m| y.binary_search(m).is_ok()).collect())
    }

    pub fn difference(&self, other: &Multirelation) -> Result<Multirelation> {
        self.zip_rows(other, |x, y| x.iter().copied().filter(|m| y.binary_search(m).is_err()).collect())
    }

    /// Complement relative to the universal multirelation.
    pub fn complement(&self) -> Multirelation {
        let rows = self
            .rows
            .iter()
            .map(|row| self.universe.subsets().filter(|m| row.binary_search(m).is_err()).collect())
            .collect();
        Multirelation { universe: self.universe.clone(), rows }
    }

    /// Sequential composition `R · S` by choice functions.
    ///
    /// For each `(a, B) ∈ R` every achievable union `⋃_{b∈B} A_b` with
    /// `(b, A_b) ∈ S` is produced by folding over `b ∈ B` a deduplicated set of
    /// partial unions. A pair `(a, ∅)` always survives, since the empty choice
    /// function exists; a `b ∈ B` without any `S`-image kills the pair.
    pub fn seq_compose(&self, other: &Multirelation) -> Result<Multirelation> {
        self.same_universe(other)?;
        let mut rows = Vec::with_capacity(self.rows.len());
        let mut partial: Vec<Mask> = Vec::new();
        let mut next: Vec<Mask> = Vec::new();
        for row in &self.rows {
            let mut out = Vec::new();
            'pairs: for &b_set in row {
                partial.clear();
                partial.push(0);
                for b in bits(b_set) {
                    let images = &other.rows[b];
                    if images.is_empty() {
                        continue 'pairs;
                    }
                    next.clear();
                    for &p in &partial {
                        next.extend(images.iter().map(|&img| p | img));
                    }
                    normalize(&mut next);
                    std::mem::swap(&mut partial, &mut next);
                }
                out.extend_from_slice(&partial);
            }
            normalize(&mut out);
            rows.push(out);
        }
        Ok(Multirelation { universe: self.universe.clone(), rows })
    }

    /// Parallel composition `R ‖ S = {(a, A ∪ B) | (a, A) ∈ R, (a, B) ∈ S}`.
    pub fn par_compose(&self, other: &Multirelation) -> Result<Multirelation> {
        self.zip_rows(other, |x, y| {
            let mut row: Vec<Mask> = x.iter().flat_map(|&m| y.iter().map(move |&n| m | n)).collect();
            normalize(&mut row);
            row
        })
    }

    /// Mask of elements from which this multirelation is enabled.
    pub fn enabled_mask(&self) -> Mask {
        self.rows
            .iter()
            .enumerate()
            .filter(|(_, row)| !row.is_empty())
            .fold(0, |m, (a, _)| m | (1 << a))
    }

    /// `d(R) = {(a, {a}) | ∃A. (a, A) ∈ R}`
    pub fn domain(&self) -> SubIdentity {
        SubIdentity::from_mask_unchecked(&self.universe, self.enabled_mask())
    }

    /// `a(R) = {(a, {a}) | ¬∃A. (a, A) ∈ R}`
    pub fn antidomain(&self) -> SubIdentity {
        let mask = self.universe.full_mask() & !self.enabled_mask();
        SubIdentity::from_mask_unchecked(&self.universe, mask)
    }

    /// True iff every pair has the shape `(a, {a})`, i.e. `R ⊆ 1σ`.
    pub fn is_subidentity(&self) -> bool {
        self.rows.iter().enumerate().all(|(a, row)| row.iter().all(|&m| m == 1 << a))
    }

    /// Renders as `{ a -> {a}, b -> {} }` (or `{}` when empty).
    pub fn to_compact_string(&self) -> String {
        if self.is_empty() {
            return "{}".to_string();
        }
        let pairs: Vec<String> = self
            .pairs()
            .map(|(a, m)| format!("{} -> {}", self.universe.name(a), self.universe.render_mask_tight(m)))
            .collect();
        format!("{{ {} }}", pairs.join(", "))
    }
}

impl fmt::Debug for Multirelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_compact_string())
    }
}

impl fmt::Display for Multirelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_compact_string())
    }
}

/// A multirelation contained in `1σ`; the multirelational encoding of a set
/// of states.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SubIdentity(Multirelation);

impl SubIdentity {
    fn from_mask_unchecked(universe: &Universe, mask: Mask) -> Self {
        let rows = (0..universe.len())
            .map(|a| if mask & (1 << a) != 0 { vec![1 << a] } else { Vec::new() })
            .collect();
        SubIdentity(Multirelation { universe: universe.clone(), rows })
    }

    /// Lifts a set `A ⊆ X` to the subidentity `{(a, {a}) | a ∈ A}`.
    pub fn lift(set: &ElementSet) -> Self {
        Self::from_mask_unchecked(set.universe(), set.mask())
    }

    pub fn from_mask(universe: &Universe, mask: Mask) -> Result<Self> {
        universe.check_mask(mask)?;
        Ok(Self::from_mask_unchecked(universe, mask))
    }

    pub fn from_names<'a, I>(universe: &Universe, names: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a str>,
    {
        Ok(Self::from_mask_unchecked(universe, universe.mask_of(names)?))
    }

    pub fn empty(universe: &Universe) -> Self {
        Self::from_mask_unchecked(universe, 0)
    }

    pub fn full(universe: &Universe) -> Self {
        Self::from_mask_unchecked(universe, universe.full_mask())
    }

    /// All `2^|X|` subidentities in increasing mask order.
    pub fn all(universe: &Universe) -> impl Iterator<Item = SubIdentity> + '_ {
        universe.subsets().map(move |m| Self::from_mask_unchecked(universe, m))
    }

    /// Inverse of [`SubIdentity::lift`].
    pub fn lower(&self) -> ElementSet {
        ElementSet::from_mask(self.0.universe(), self.mask()).expect("mask within universe")
    }

    pub fn mask(&self) -> Mask {
        self.0.enabled_mask()
    }

    /// Boolean complement inside the subidentity lattice.
    pub fn complement(&self) -> SubIdentity {
        let u = self.0.universe();
        Self::from_mask_unchecked(u, u.full_mask() & !self.mask())
    }

    pub fn join(&self, other: &SubIdentity) -> Result<SubIdentity> {
        self.0.same_universe(&other.0)?;
        Ok(Self::from_mask_unchecked(self.0.universe(), self.mask() | other.mask()))
    }

    pub fn meet(&self, other: &SubIdentity) -> Result<SubIdentity> {
        self.0.same_universe(&other.0)?;
        Ok(Self::from_mask_unchecked(self.0.universe(), self.mask() & other.mask()))
    }

    pub fn universe(&self) -> &Universe {
        self.0.universe()
    }

    pub fn as_multirelation(&self) -> &Multirelation {
        &self.0
    }

    pub fn into_multirelation(self) -> Multirelation {
        self.0
    }
}

impl TryFrom<Multirelation> for SubIdentity {
    type Error = Error;

    fn try_from(r: Multirelation) -> Result<Self> {
        if r.is_subidentity() {
            Ok(SubIdentity(r))
        } else {
            Err(Error::NotSubidentity)
        }
    }
}

impl From<SubIdentity> for Multirelation {
    fn from(p: SubIdentity) -> Self {
        p.0
    }
}

impl AsRef<Multirelation> for SubIdentity {
    fn as_ref(&self) -> &Multirelation {
        &self.0
    }
}

impl fmt::Debug for SubIdentity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(&self.0, f)
    }
}

impl fmt::Display for SubIdentity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

/// Lifts a set to its subidentity.
pub fn lift_set(set: &ElementSet) -> SubIdentity {
    SubIdentity::lift(set)
}

/// Lowers a subidentity back to a set; fails on anything outside `1σ`.
pub fn lower_subidentity(r: &Multirelation) -> Result<ElementSet> {
    if !r.is_subidentity() {
        return Err(Error::NotSubidentity);
    }
    ElementSet::from_mask(r.universe(), r.enabled_mask())
}

/// Complement of a subidentity given as a raw multirelation.
pub fn complement_subidentity(r: &Multirelation) -> Result<SubIdentity> {
    Ok(SubIdentity::try_from(r.clone())?.complement())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn uni(n: usize) -> Universe {
        Universe::alphabetic(n).unwrap()
    }

    fn rel(u: &Universe, pairs: &[(&str, &[&str])]) -> Multirelation {
        Multirelation::from_named(u, pairs.iter().map(|(a, s)| (*a, s.iter().copied()))).unwrap()
    }

    #[test]
    fn constants() {
        let u2 = uni(2);
        assert_eq!(Multirelation::unit_seq(&u2), rel(&u2, &[("a", &["a"]), ("b", &["b"])]));
        let u1 = uni(1);
        assert_eq!(Multirelation::unit_par(&u1), rel(&u1, &[("a", &[])]));
        assert_eq!(Multirelation::universal(&u1), rel(&u1, &[("a", &[]), ("a", &["a"])]));
        assert!(Multirelation::constant(Constant::Empty, &u2).is_empty());
    }

    #[test]
    fn union_basics() {
        let u = uni(2);
        let r = rel(&u, &[("a", &["a"])]);
        let s = rel(&u, &[("a", &["b"])]);
        assert_eq!(r.union(&s).unwrap(), rel(&u, &[("a", &["a"]), ("a", &["b"])]));
        assert_eq!(r.union(&Multirelation::empty(&u)).unwrap(), r);
        assert_eq!(r.union(&r).unwrap(), r);
    }

    #[test]
    fn universe_mismatch_is_reported() {
        let r = Multirelation::unit_seq(&uni(2));
        let s = Multirelation::unit_seq(&uni(3));
        assert_eq!(r.union(&s).unwrap_err(), Error::UniverseMismatch);
        assert_eq!(r.seq_compose(&s).unwrap_err(), Error::UniverseMismatch);
        assert_eq!(r.par_compose(&s).unwrap_err(), Error::UniverseMismatch);
    }

    #[test]
    fn sequential_composition_examples() {
        let u = uni(3);
        let r = rel(&u, &[("a", &["b", "c"])]);
        let s = rel(&u, &[("b", &["b"])]);
        let t = rel(&u, &[("b", &["b"]), ("c", &[])]);
        assert!(r.seq_compose(&s).unwrap().is_empty());
        assert_eq!(r.seq_compose(&t).unwrap(), rel(&u, &[("a", &["b"])]));
        assert_eq!(t.seq_compose(&s).unwrap(), t);

        let z = rel(&u, &[("a", &[])]);
        assert_eq!(z.seq_compose(&Multirelation::empty(&u)).unwrap(), z);
        assert_eq!(r.seq_compose(&Multirelation::unit_seq(&u)).unwrap(), r);
    }

    #[test]
    fn parallel_composition_examples() {
        let u = uni(3);
        let r = rel(&u, &[("a", &["a", "b"])]);
        let s = rel(&u, &[("a", &["b", "c"]), ("b", &["b"])]);
        let t = rel(&u, &[("b", &[])]);
        assert_eq!(r.par_compose(&s).unwrap(), rel(&u, &[("a", &["a", "b", "c"])]));
        assert_eq!(s.par_compose(&t).unwrap(), rel(&u, &[("b", &["b"])]));
        assert_eq!(r.par_compose(&Multirelation::unit_par(&u)).unwrap(), r);
    }

    #[test]
    fn domain_and_antidomain() {
        let u = uni(2);
        let r = rel(&u, &[("a", &[])]);
        assert_eq!(r.domain().as_multirelation(), &rel(&u, &[("a", &["a"])]));
        assert!(Multirelation::empty(&u).domain().as_multirelation().is_empty());
        let s = rel(&u, &[("a", &["b"]), ("b", &["a", "b"])]);
        assert_eq!(s.domain(), SubIdentity::full(&u));

        assert_eq!(Multirelation::empty(&u).antidomain(), SubIdentity::full(&u));
        let u1 = uni(1);
        assert!(Multirelation::universal(&u1).antidomain().as_multirelation().is_empty());
        // a(R) = 1σ ∩ −d(R)
        let via_complement = Multirelation::unit_seq(&u)
            .intersection(&r.domain().as_multirelation().complement())
            .unwrap();
        assert_eq!(r.antidomain().as_multirelation(), &via_complement);
        assert_eq!(via_complement, rel(&u, &[("b", &["b"])]));
    }

    #[test]
    fn subidentity_predicate() {
        let u = uni(2);
        assert!(Multirelation::unit_seq(&u).is_subidentity());
        assert!(!rel(&u, &[("a", &[])]).is_subidentity());
        assert!(rel(&u, &[("a", &["b"]), ("b", &[])]).domain().as_multirelation().is_subidentity());
        assert_eq!(
            SubIdentity::try_from(rel(&u, &[("a", &[])])).unwrap_err(),
            Error::NotSubidentity
        );
    }

    #[test]
    fn lift_and_lower() {
        let u = uni(2);
        let ab = ElementSet::from_names(&u, ["a", "b"]).unwrap();
        assert_eq!(lift_set(&ab).as_multirelation(), &Multirelation::unit_seq(&u));
        assert!(lift_set(&ElementSet::empty(&u)).as_multirelation().is_empty());
        for m in u.subsets() {
            let s = ElementSet::from_mask(&u, m).unwrap();
            assert_eq!(lower_subidentity(lift_set(&s).as_multirelation()).unwrap(), s);
        }
        assert_eq!(lower_subidentity(&rel(&u, &[("a", &[])])).unwrap_err(), Error::NotSubidentity);
    }

    #[test]
    fn subidentity_complement() {
        let u1 = uni(1);
        assert_eq!(SubIdentity::empty(&u1).complement(), SubIdentity::full(&u1));
        assert_eq!(SubIdentity::full(&u1).complement(), SubIdentity::empty(&u1));
        let u = uni(2);
        let a = SubIdentity::from_names(&u, ["a"]).unwrap();
        assert_eq!(a.complement(), SubIdentity::from_names(&u, ["b"]).unwrap());
        assert!(complement_subidentity(&rel(&u, &[("a", &[])])).is_err());
        for p in SubIdentity::all(&u) {
            let c = p.complement();
            let pm = p.as_multirelation();
            assert_eq!(pm.union(c.as_multirelation()).unwrap(), Multirelation::unit_seq(&u));
            assert!(pm.seq_compose(c.as_multirelation()).unwrap().is_empty());
        }
    }

    #[test]
    fn compact_rendering() {
        let u = uni(2);
        assert_eq!(rel(&u, &[("a", &[])]).domain().to_string(), "{ a -> {a} }");
        assert_eq!(Multirelation::empty(&u).to_string(), "{}");
        assert_eq!(rel(&u, &[("b", &["a", "b"]), ("a", &[])]).to_string(), "{ a -> {}, b -> {a, b} }");
    }
}
