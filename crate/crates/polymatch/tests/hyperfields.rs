use polymatch::coherent::diagonal_field;
use polymatch::core::{is_chirotope, GroundConfig, Sign, SignMap};
use polymatch::hyperfields::{
    builtin, h_chirotope, has_ip, pushforward, strong_matroid_check, weak_matroid_check, HElem, HMatrix, HSignMap,
    Hyperfield, Morphism,
};
use polymatch::oriented::{chirotope, SignMatrix};
use polymatch::triangulation::{extract_matching_field, placing_triangulation, MatchingField};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const FINITE: &[&str] = &[
    "krasner",
    "sign",
    "field(2)",
    "field(3)",
    "field(5)",
    "field(7)",
    "quotient(5,2)",
    "quotient(7,2)",
    "quotient(7,3)",
    "quotient(13,3)",
    "quotient(13,4)",
    "weak_group(2)",
    "weak_group(3)",
    "massouros(1)",
    "massouros(3)",
    "inflated(field(3))",
    "inflated(quotient(7,2))",
];

fn random_unit(h: &Hyperfield, rng: &mut ChaCha8Rng) -> HElem {
    match h.elements() {
        Some(all) => all[rng.gen_range(1..all.len())],
        None if h.one() == HElem::real(0) => HElem::real(rng.gen_range(-4..=4)),
        None => HElem::phase(rng.gen_range(0..24), 12),
    }
}

fn random_polyhedral_field(rng: &mut ChaCha8Rng, d: usize, n: usize) -> MatchingField {
    let mut pts: Vec<(usize, usize)> = (0..d).flat_map(|r| (0..n).map(move |c| (r, c))).collect();
    pts.shuffle(rng);
    let ts = placing_triangulation(GroundConfig::new(d, n).unwrap(), &pts).unwrap();
    extract_matching_field(&ts).unwrap()
}

#[test]
fn finite_builtins_pass_all_axioms() {
    for name in FINITE {
        let h = builtin(name).unwrap();
        h.check_axioms().unwrap_or_else(|e| panic!("{name}: {e}"));
        h.inflated()
            .check_axioms()
            .unwrap_or_else(|e| panic!("inflated {name}: {e}"));
        assert!(has_ip(&h.inflated()).unwrap(), "{name}");
    }
}

/// `χ(12) = a`, every other basis 1, from the diagonal (2,4) field and
/// `[[1,1,1,1],[1,a,1,1]]`.
fn converse_witness(h: &Hyperfield, a: HElem) -> HSignMap {
    let one = h.one();
    let m = HMatrix::new(vec![vec![one; 4], vec![one, a, one, one]]).unwrap();
    h_chirotope(&diagonal_field(2, 4).unwrap(), &m, h).unwrap()
}

#[test]
fn converse_witness_fails_without_the_inflation_property() {
    let mut non_ip = 0;
    for name in FINITE {
        let h = builtin(name).unwrap();
        let one = h.one();
        let minus = h.neg(&one);
        let elems = h.elements().unwrap();
        if has_ip(&h).unwrap() {
            for a in &elems[1..] {
                assert!(
                    weak_matroid_check(&converse_witness(&h, *a), &h).unwrap().holds,
                    "{name}"
                );
            }
            continue;
        }
        non_ip += 1;
        let a = elems[1..]
            .iter()
            .copied()
            .find(|a| !h.sum_contains(&h.neg(a), &[one, minus]))
            .expect("an element outside 1 ⊞ (−1)");
        assert!(
            !weak_matroid_check(&converse_witness(&h, a), &h).unwrap().holds,
            "{name}"
        );
    }
    assert!(non_ip >= 8);
    let p = builtin("phase").unwrap();
    assert!(
        !weak_matroid_check(&converse_witness(&p, HElem::phase(1, 2)), &p)
            .unwrap()
            .holds
    );
    let t = builtin("tropical").unwrap();
    assert!(
        !weak_matroid_check(&converse_witness(&t, HElem::real(-1)), &t)
            .unwrap()
            .holds
    );
}

#[test]
fn sign_weak_check_agrees_with_is_chirotope_on_seeded_cases() {
    let s = builtin("sign").unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut agreed_true = 0;
    for case in 0..200 {
        let (d, n) = [(2, 4), (2, 5), (3, 5), (3, 6)][case % 4];
        let chi = if case % 2 == 0 {
            let mf = random_polyhedral_field(&mut rng, d, n);
            let a = SignMatrix::from_fn(d, n, |_, _| if rng.gen() { Sign::Plus } else { Sign::Minus });
            let chi = chirotope(&mf, &a).unwrap();
            if case % 4 == 0 {
                chi
            } else {
                let flip = rng.gen_range(0..chi.support().len());
                let mut out = chi.clone();
                let m = chi.support()[flip];
                out.set(m, -chi.get(m));
                out
            }
        } else {
            SignMap::from_fn(n, d, |_| [Sign::Plus, Sign::Minus, Sign::Zero][rng.gen_range(0..3)])
        };
        let weak = weak_matroid_check(&HSignMap::from_sign_map(&chi), &s).unwrap().holds;
        assert_eq!(weak, is_chirotope(&chi), "{chi}");
        agreed_true += weak as usize;
    }
    assert!(agreed_true >= 50);
}

#[test]
fn phi_example_is_weak_over_phi_only() {
    let p = builtin("phase").unwrap();
    let phi = builtin("tropical_phase").unwrap();
    let one = HElem::phase(0, 1);
    let a = HMatrix::new(vec![vec![one; 4], vec![one, HElem::phase(1, 2), one, one]]).unwrap();
    let over_p = h_chirotope(&diagonal_field(2, 4).unwrap(), &a, &p).unwrap();
    let chi = pushforward(&over_p, &Morphism::inflation(&p)).unwrap();
    assert_eq!(chi.display(&phi), "(12,i),(13,1),(14,1),(23,1),(24,1),(34,1)");
    assert!(weak_matroid_check(&chi, &phi).unwrap().holds);
    assert!(!weak_matroid_check(&chi, &p).unwrap().holds);
}

fn ip_fields() -> Vec<Hyperfield> {
    let mut out: Vec<Hyperfield> = FINITE
        .iter()
        .map(|n| builtin(n).unwrap())
        .filter(|h| has_ip(h).unwrap())
        .collect();
    out.push(builtin("tropical_phase").unwrap());
    out.push(builtin("inflated(tropical)").unwrap());
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn ip_hyperfields_give_weak_matroids(seed in any::<u64>(), d in 2usize..=3, extra in 1usize..=3) {
        let n = d + extra;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mf = random_polyhedral_field(&mut rng, d, n);
        for h in ip_fields() {
            let a = HMatrix::from_fn(d, n, |_, _| random_unit(&h, &mut rng));
            let chi = h_chirotope(&mf, &a, &h).unwrap();
            let r = weak_matroid_check(&chi, &h).unwrap();
            prop_assert!(r.holds, "{}: {:?}", h.name(), r.witness);
        }
    }

    /// Any map into a hyperfield becomes a weak matroid over the canonical
    /// inflation, and keeps that status through morphisms.
    #[test]
    fn inflation_pushforward_gives_weak_matroids(seed in any::<u64>(), d in 2usize..=3, extra in 1usize..=3) {
        let n = d + extra;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mf = random_polyhedral_field(&mut rng, d, n);
        for name in ["phase", "tropical", "field(5)", "quotient(7,2)", "quotient(13,4)"] {
            let h = builtin(name).unwrap();
            let a = HMatrix::from_fn(d, n, |_, _| random_unit(&h, &mut rng));
            let chi = h_chirotope(&mf, &a, &h).unwrap();
            let iota = Morphism::inflation(&h);
            let lifted = pushforward(&chi, &iota).unwrap();
            let r = weak_matroid_check(&lifted, iota.target()).unwrap();
            prop_assert!(r.holds, "{name}: {:?}", r.witness);
        }
    }

    #[test]
    fn morphisms_preserve_matroid_status(seed in any::<u64>(), d in 2usize..=3, extra in 1usize..=3) {
        let n = d + extra;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mf = random_polyhedral_field(&mut rng, d, n);
        let s = builtin("sign").unwrap();
        let a = HMatrix::from_fn(d, n, |_, _| random_unit(&s, &mut rng));
        let chi = h_chirotope(&mf, &a, &s).unwrap();
        prop_assert!(strong_matroid_check(&chi, &s).unwrap().holds);
        for phi in [Morphism::forget_sign(), Morphism::sign_to_phase(), Morphism::inflation(&s)] {
            let pushed = pushforward(&chi, &phi).unwrap();
            prop_assert!(weak_matroid_check(&pushed, phi.target()).unwrap().holds, "{}", phi.name());
            prop_assert!(strong_matroid_check(&pushed, phi.target()).unwrap().holds, "{}", phi.name());
        }
        let t = builtin("tropical").unwrap();
        let heights = HMatrix::from_fn(d, n, |_, _| random_unit(&t, &mut rng));
        let val = h_chirotope(&mf, &heights, &t).unwrap();
        let k = pushforward(&val, &Morphism::tropical_to_krasner()).unwrap();
        prop_assert!(weak_matroid_check(&k, &builtin("krasner").unwrap()).unwrap().holds);
    }
}
