//! Generators of multirelations for law sweeps.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::mrel::{Multirelation, SubIdentity};
use crate::universe::{Mask, Universe};

/// Largest universe the exhaustive generator accepts.
pub const EXHAUSTIVE_MAX_ELEMENTS: usize = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenMode {
    Exhaustive,
    Random { seed: u64, count: usize },
}

/// `2^(|X|·2^|X|)`, or `None` if it does not fit in a `u64`.
pub fn exhaustive_count(universe: &Universe) -> Option<u64> {
    let pairs = universe.len().checked_mul(universe.subset_count() as usize)?;
    (pairs < 64).then(|| 1u64 << pairs)
}

/// The multirelation whose pair `(a, B)` is present iff bit `a·2^|X| + B`
/// of `index` is set.
pub fn multirelation_from_index(universe: &Universe, index: u64) -> Multirelation {
    let width = universe.subset_count();
    let pairs = (0..universe.len() as u64 * width)
        .take_while(|&bit| bit < 64)
        .filter(|bit| index >> bit & 1 == 1)
        .map(|bit| ((bit / width) as usize, (bit % width) as Mask));
    Multirelation::from_pairs(universe, pairs).expect("indices are in range")
}

/// Each pair is included independently with probability `density`.
pub fn random_multirelation<R: Rng + ?Sized>(universe: &Universe, rng: &mut R, density: f64) -> Multirelation {
    let mut pairs = Vec::new();
    for a in 0..universe.len() {
        for m in universe.subsets() {
            if rng.gen_bool(density) {
                pairs.push((a, m));
            }
        }
    }
    Multirelation::from_pairs(universe, pairs).expect("indices are in range")
}

pub fn random_subidentity<R: Rng + ?Sized>(universe: &Universe, rng: &mut R) -> SubIdentity {
    let mask = rng.gen::<Mask>() & universe.full_mask();
    SubIdentity::from_mask(universe, mask).expect("mask is in range")
}

pub fn gen_multirelations(
    universe: &Universe,
    mode: GenMode,
) -> Result<Box<dyn Iterator<Item = Multirelation> + Send>> {
    let u = universe.clone();
    match mode {
        GenMode::Exhaustive => {
            if u.len() > EXHAUSTIVE_MAX_ELEMENTS {
                return Err(Error::ExhaustiveTooLarge { size: u.len(), limit: EXHAUSTIVE_MAX_ELEMENTS });
            }
            let count = exhaustive_count(&u).expect("small universe");
            Ok(Box::new((0..count).map(move |i| multirelation_from_index(&u, i))))
        }
        GenMode::Random { seed, count } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            Ok(Box::new((0..count).map(move |_| random_multirelation(&u, &mut rng, 0.5))))
        }
    }
}
