use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use exnil::differential::{Differential, RootMultiset, SigmaSign};
use exnil::extsym::{exterior_basis, is_extended_symmetric, Family};
use exnil::json::{nh_from_json, nh_to_json, poly_from_json, poly_to_json, superpoly_from_json, superpoly_to_json};
use exnil::parse::{parse_nh, parse_poly, parse_superpoly};
use exnil::random;
use exnil::superpoly::leibniz_check;
use exnil::{NhElem, Perm, Rat, Scalar};

fn kappas(seed: u64, big_n: usize) -> RootMultiset<Rat> {
    let mut r = ChaCha8Rng::seed_from_u64(seed ^ 0xabc);
    RootMultiset::from_kappas((0..big_n).map(|_| random::rational(&mut r, 4)).collect()).unwrap()
}

fn odd_or_even(r: &mut ChaCha8Rng, n: usize, odd: bool) -> NhElem {
    // Homogeneous parity: keep PBW terms whose wedge has the requested parity.
    let e = random::nh_element::<Rat, _>(r, n, 1, 4);
    let mut terms = e.pbw_terms();
    terms.retain(|t| (t.mask.count_ones() % 2 == 1) == odd);
    NhElem::from_pbw_terms(n, &terms).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn perm_action_composes(seed in any::<u64>(), n in 1usize..=4) {
        let mut r = ChaCha8Rng::seed_from_u64(seed);
        let perms = Perm::all(n);
        let u = &perms[seed as usize % perms.len()];
        let v = &perms[(seed >> 20) as usize % perms.len()];
        let f = random::superpoly::<Rat, _>(&mut r, n, 3, 4);
        let lhs = f.act_perm(&u.compose(v)).unwrap();
        let rhs = f.act_perm(v).unwrap().act_perm(u).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn divided_difference_is_twisted_derivation(seed in any::<u64>(), n in 2usize..=4) {
        let mut r = ChaCha8Rng::seed_from_u64(seed);
        let f = random::superpoly::<Rat, _>(&mut r, n, 2, 3);
        let g = random::superpoly::<Rat, _>(&mut r, n, 2, 3);
        let i = 1 + seed as usize % (n - 1);
        prop_assert!(leibniz_check(i, &f, &g).unwrap());
    }

    #[test]
    fn differential_squares_to_zero(seed in any::<u64>(), n in 1usize..=3, big_n in 1usize..=4) {
        let mut r = ChaCha8Rng::seed_from_u64(seed);
        let d = Differential::deformed(n, &kappas(seed, big_n), SigmaSign::AsPrinted);
        let v = random::superpoly::<Rat, _>(&mut r, n, 2, 4);
        prop_assert!(d.apply_ext(&d.apply_ext(&v).unwrap()).unwrap().is_zero());
        let e = random::nh_element::<Rat, _>(&mut r, n, 1, 3);
        prop_assert!(d.apply_nh(&d.apply_nh(&e).unwrap()).unwrap().is_zero());
    }

    #[test]
    fn differential_is_super_derivation(seed in any::<u64>(), n in 1usize..=3, big_n in 1usize..=4, odd in any::<bool>()) {
        let mut r = ChaCha8Rng::seed_from_u64(seed);
        let d = Differential::<Rat>::undeformed(n, big_n).unwrap();
        let a = odd_or_even(&mut r, n, odd);
        let b = random::nh_element::<Rat, _>(&mut r, n, 1, 3);
        let lhs = d.apply_nh(&(&a * &b)).unwrap();
        let da_b = &d.apply_nh(&a).unwrap() * &b;
        let a_db = &a * &d.apply_nh(&b).unwrap();
        let rhs = if odd { &da_b - &a_db } else { &da_b + &a_db };
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn differential_preserves_invariants(seed in any::<u64>(), n in 1usize..=3, big_n in 1usize..=4) {
        let mut r = ChaCha8Rng::seed_from_u64(seed);
        let d = Differential::deformed(n, &kappas(seed, big_n), SigmaSign::AsPrinted);
        let gens = exterior_basis::<Rat>(n, Family::Schubert);
        let v = random::invariant(&mut r, &gens, 2);
        prop_assert!(is_extended_symmetric(&d.apply_ext(&v).unwrap()));
    }

    #[test]
    fn text_and_json_round_trip(seed in any::<u64>(), n in 1usize..=3) {
        let mut r = ChaCha8Rng::seed_from_u64(seed);
        let f = random::polynomial::<Rat, _>(&mut r, n, 3, 4).scale(&random::rational(&mut r, 5));
        prop_assert_eq!(&parse_poly::<Rat>(&f.to_string(), n).unwrap(), &f);
        prop_assert_eq!(&poly_from_json::<Rat>(&poly_to_json(&f)).unwrap(), &f);
        let v = random::superpoly::<Rat, _>(&mut r, n, 2, 4);
        prop_assert_eq!(&parse_superpoly::<Rat>(&v.to_string(), n).unwrap(), &v);
        prop_assert_eq!(&superpoly_from_json::<Rat>(&superpoly_to_json(&v)).unwrap(), &v);
        let e = random::nh_element::<Rat, _>(&mut r, n, 1, 4);
        prop_assert_eq!(&parse_nh::<Rat>(&e.to_string(), n).unwrap(), &e);
        prop_assert_eq!(&nh_from_json::<Rat>(&nh_to_json(&e)).unwrap(), &e);
    }
}

#[test]
fn scalar_aliases_agree() {
    let x: exnil::Rat64 = Scalar::from_int(3);
    let y: Rat = Scalar::from_int(3);
    assert_eq!(x.to_fraction(), y.to_fraction());
}
