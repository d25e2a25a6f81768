mod common;

use common::{box_, diamond, from_rel, par, rel, seq, star, to_rel};
use multirel::laws::{multirelation_from_index, random_multirelation};
use multirel::modal;
use multirel::Universe;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn seq_matches_choice_functions_exhaustively() {
    let u = Universe::alphabetic(2).unwrap();
    let all: Vec<_> = (0..256).map(|i| multirelation_from_index(&u, i)).collect();
    let sets: Vec<_> = all.iter().map(to_rel).collect();
    for (r, rs) in all.iter().zip(&sets) {
        for (s, ss) in all.iter().zip(&sets) {
            assert_eq!(to_rel(&r.seq_compose(s).unwrap()), seq(rs, ss), "{r} ; {s}");
            assert_eq!(to_rel(&r.par_compose(s).unwrap()), par(rs, ss), "{r} || {s}");
        }
    }
}

#[test]
fn seq_matches_choice_functions_randomly() {
    let u = Universe::alphabetic(3).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for i in 0..1000 {
        let d = [0.5, 0.2, 0.08][i % 3];
        let r = random_multirelation(&u, &mut rng, d);
        let s = random_multirelation(&u, &mut rng, d);
        assert_eq!(to_rel(&r.seq_compose(&s).unwrap()), seq(&to_rel(&r), &to_rel(&s)), "{r} ; {s}");
    }
}

#[test]
fn modalities_match_definitions() {
    let u = Universe::alphabetic(2).unwrap();
    for i in 0..256 {
        let r = multirelation_from_index(&u, i);
        for p in multirel::SubIdentity::all(&u) {
            let (rr, pp) = (to_rel(&r), to_rel(p.as_multirelation()));
            let dia = diamond(&rr, &pp);
            let bx = box_(2, &rr, &pp);
            assert_eq!(to_rel(modal::diamond(&r, &p).unwrap().as_multirelation()), dia);
            assert_eq!(to_rel(modal::diamond_direct(&r, &p).unwrap().as_multirelation()), dia);
            assert_eq!(to_rel(modal::box_(&r, &p).unwrap().as_multirelation()), bx);
            assert_eq!(to_rel(modal::box_direct(&r, &p).unwrap().as_multirelation()), bx);
        }
    }
}

#[test]
fn star_matches_iterated_union() {
    let u = Universe::alphabetic(3).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..200 {
        let r = random_multirelation(&u, &mut rng, 0.15);
        assert_eq!(to_rel(&multirel::star::star(&r).unwrap()), star(3, &to_rel(&r)), "{r}");
    }
}

#[test]
fn cube_example_has_eleven_pairs() {
    // R = {(a,{c}),(b,{a,c}),(c,{b}),(c,{c})} over {a,b,c}
    let r = rel(&[(0, &[2]), (1, &[0, 2]), (2, &[1]), (2, &[2])]);
    let left = seq(&seq(&r, &r), &r);
    let right = seq(&r, &seq(&r, &r));
    assert_eq!(left.len(), 11);
    assert_eq!(right.len(), 12);
    assert!(left.is_subset(&right));
    assert!(left.contains(&(2, [0, 2].into())));
    let extra: Vec<_> = right.difference(&left).cloned().collect();
    assert_eq!(extra, vec![(1, [1, 2].into())]);
    let u = Universe::alphabetic(3).unwrap();
    let m = from_rel(&u, &r);
    let lib = m.seq_compose(&m).unwrap().seq_compose(&m).unwrap();
    assert_eq!(to_rel(&lib), left);
}
