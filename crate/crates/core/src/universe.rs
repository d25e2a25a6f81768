//! Finite carrier sets and their subsets.
//!
//! Elements are addressed by their position in the universe; a subset is a
//! bitmask over those positions. Everything downstream (multirelations,
//! generators, file formats) relies on this canonical index order.

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::{Error, Result};

/// Bitmask over element indices of a universe.
pub type Mask = u32;

/// Widest universe a [`Mask`] can address.
pub const HARD_MAX_ELEMENTS: usize = Mask::BITS as usize;

/// Default size guardrail. Costs of most operations grow with `2^|X|`.
pub const DEFAULT_MAX_ELEMENTS: usize = 16;

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'')
}

struct UniverseData {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

/// An ordered finite carrier set of named elements.
///
/// Cloning is cheap; clones share the same element table.
#[derive(Clone)]
pub struct Universe(Arc<UniverseData>);

impl Universe {
    /// Builds a universe, enforcing the default size guardrail.
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Self::with_limit(names, DEFAULT_MAX_ELEMENTS)
    }

    /// Builds a universe with an explicit size limit (at most [`HARD_MAX_ELEMENTS`]).
    pub fn with_limit<I, S>(names: I, limit: usize) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let limit = limit.min(HARD_MAX_ELEMENTS);
        if names.len() > limit {
            return Err(Error::UniverseTooLarge { size: names.len(), limit });
        }
        let mut index = HashMap::with_capacity(names.len());
        for (i, n) in names.iter().enumerate() {
            if !is_identifier(n) {
                return Err(Error::InvalidUniverse(format!("`{n}` is not an identifier")));
            }
            if index.insert(n.clone(), i).is_some() {
                return Err(Error::InvalidUniverse(format!("duplicate element `{n}`")));
            }
        }
        Ok(Universe(Arc::new(UniverseData { names, index })))
    }

    /// Universe with elements named `a`, `b`, `c`, ... (at most 26).
    pub fn alphabetic(size: usize) -> Result<Self> {
        if size > 26 {
            return Err(Error::InvalidUniverse("alphabetic universes hold at most 26 elements".into()));
        }
        Self::new((0..size).map(|i| ((b'a' + i as u8) as char).to_string()))
    }

    pub fn len(&self) -> usize {
        self.0.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0.names
    }

    pub fn name(&self, index: usize) -> &str {
        &self.0.names[index]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.index.get(name).copied()
    }

    pub fn require(&self, name: &str) -> Result<usize> {
        self.index_of(name).ok_or_else(|| Error::UnknownElement(name.to_string()))
    }

    /// Mask with every element set.
    pub fn full_mask(&self) -> Mask {
        match self.len() {
            HARD_MAX_ELEMENTS => Mask::MAX,
            n => (1 << n) - 1,
        }
    }

    /// Number of subsets, `2^|X|`.
    pub fn subset_count(&self) -> u64 {
        1u64 << self.len()
    }

    /// All subsets in increasing mask order.
    pub fn subsets(&self) -> impl Iterator<Item = Mask> {
        (0..self.subset_count()).map(|m| m as Mask)
    }

    pub fn mask_of<'a, I>(&self, names: I) -> Result<Mask>
    where
        I: IntoIterator<Item = &'a str>,
    {
        names
            .into_iter()
            .try_fold(0, |m, n| self.require(n).map(|i| m | (1 << i)))
    }

    pub(crate) fn check_mask(&self, mask: Mask) -> Result<()> {
        if mask & !self.full_mask() != 0 {
            return Err(Error::IndexOutOfRange(Mask::BITS as usize - 1 - mask.leading_zeros() as usize));
        }
        Ok(())
    }

    /// Renders a subset as `{ a, b }`, or `{}` when empty.
    pub fn render_mask(&self, mask: Mask) -> String {
        if mask == 0 {
            return "{}".to_string();
        }
        let inner: Vec<&str> = bits(mask).map(|i| self.name(i)).collect();
        format!("{{ {} }}", inner.join(", "))
    }

    /// Renders a subset as `{a, b}` with no inner padding.
    pub fn render_mask_tight(&self, mask: Mask) -> String {
        let inner: Vec<&str> = bits(mask).map(|i| self.name(i)).collect();
        format!("{{{}}}", inner.join(", "))
    }

    pub fn ptr_eq(&self, other: &Universe) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }
}

impl PartialEq for Universe {
    fn eq(&self, other: &Self) -> bool {
        self.ptr_eq(other) || self.0.names == other.0.names
    }
}

impl Eq for Universe {}

impl Hash for Universe {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.names.hash(state);
    }
}

impl fmt::Debug for Universe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Universe{:?}", self.0.names)
    }
}

/// Iterates the set bit positions of a mask in increasing order.
pub fn bits(mut mask: Mask) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}

/// A subset of a universe.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElementSet {
    universe: Universe,
    mask: Mask,
}

impl ElementSet {
    pub fn from_mask(universe: &Universe, mask: Mask) -> Result<Self> {
        universe.check_mask(mask)?;
        Ok(ElementSet { universe: universe.clone(), mask })
    }

    pub fn from_names<'a, I>(universe: &Universe, names: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a str>,
    {
        let mask = universe.mask_of(names)?;
        Ok(ElementSet { universe: universe.clone(), mask })
    }

    pub fn empty(universe: &Universe) -> Self {
        ElementSet { universe: universe.clone(), mask: 0 }
    }

    pub fn full(universe: &Universe) -> Self {
        ElementSet { universe: universe.clone(), mask: universe.full_mask() }
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn mask(&self) -> Mask {
        self.mask
    }

    pub fn contains(&self, index: usize) -> bool {
        index < self.universe.len() && self.mask & (1 << index) != 0
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn indices(&self) -> impl Iterator<Item = usize> {
        bits(self.mask)
    }

    pub fn complement(&self) -> Self {
        ElementSet { universe: self.universe.clone(), mask: self.universe.full_mask() & !self.mask }
    }
}

impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.universe.render_mask(self.mask))
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.universe.render_mask_tight(self.mask))
    }
}
