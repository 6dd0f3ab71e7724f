//! Seeded randomized property suites over the affine `D5` system: the
//! reflection conjugation identity, conjugation of translations, pairing
//! invariance under the contragredient action, translation additivity and
//! round-trips, and closed-form cross-checks of the finite root counts.
//! Each randomized suite runs well over a thousand exact cases from fixed
//! seeds, so failures are reproducible.

use std::sync::Arc;

use num_rational::Rational64;
use proptest::prelude::*;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use weylkit::{
    as_translation, bilinear, enumerate_finite_roots, evaluate_word, pair,
    reflection_conjugation_holds, translation_element, CartanData, CoweightVec, GeneratorToken,
    GroupElement, RootVec, TypeLabel, DEFAULT_ROOT_CAP,
};

const SEEDS: [u64; 2] = [0xD5, 0xA3A1A1];
const CASES_PER_SEED: usize = 600;

fn d5() -> Arc<CartanData> {
    let label: TypeLabel = "D5~".parse().unwrap();
    Arc::new(CartanData::load_builtin(label).unwrap())
}

fn random_element(rng: &mut ChaCha8Rng, data: &Arc<CartanData>) -> GroupElement {
    let len = rng.random_range(0..=12);
    let tokens: Vec<GeneratorToken> = (0..len)
        .map(|_| match rng.random_range(0..7) {
            i @ 0..=5 => GeneratorToken::S(i),
            _ => GeneratorToken::Aut { name: "sigma12".into(), image: vec![5, 4, 3, 2, 0, 1] },
        })
        .collect();
    evaluate_word(&tokens, data).unwrap()
}

/// A random real root: a finite root plus a small multiple of δ.
fn random_real_root(rng: &mut ChaCha8Rng, finite: &[RootVec], delta: &RootVec) -> RootVec {
    let base = &finite[rng.random_range(0..finite.len())];
    base.add(&delta.scale(rng.random_range(-2..=2)))
}

/// A random level-zero coweight with integer coordinates.
fn random_integral_coweight(rng: &mut ChaCha8Rng) -> CoweightVec {
    let coords: Vec<i64> = (0..5).map(|_| rng.random_range(-3..=3)).chain([0]).collect();
    CoweightVec::from_integers(&coords)
}

/// A random coweight with half-integer coordinates and arbitrary level.
fn random_rational_coweight(rng: &mut ChaCha8Rng) -> CoweightVec {
    let coords: Vec<Rational64> =
        (0..6).map(|_| Rational64::new(rng.random_range(-4..=4), 2)).collect();
    CoweightVec::new(coords)
}

#[test]
fn reflection_conjugation_identity() {
    let data = d5();
    let finite = enumerate_finite_roots(&data, DEFAULT_ROOT_CAP).unwrap();
    let delta = data.null_root().unwrap();
    for seed in SEEDS {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..CASES_PER_SEED {
            let w = random_element(&mut rng, &data);
            let alpha = random_real_root(&mut rng, &finite, &delta);
            assert!(
                reflection_conjugation_holds(&w, &alpha, &data).unwrap(),
                "s_(w {alpha}) != w s w^-1 for w = {w:?}"
            );
        }
    }
}

#[test]
fn translations_conjugate_by_the_coweight_action() {
    let data = d5();
    for seed in SEEDS {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..CASES_PER_SEED {
            let w = random_element(&mut rng, &data);
            let mu = random_integral_coweight(&mut rng);
            let lhs = w.mul(&translation_element(&mu, &data).unwrap()).mul(&w.inverse());
            let rhs = translation_element(&w.act_coweight(&mu).unwrap(), &data).unwrap();
            assert_eq!(lhs, rhs, "conjugation of t_({mu}) by {w:?}");
        }
    }
}

#[test]
fn pairing_is_invariant_under_the_group() {
    let data = d5();
    let finite = enumerate_finite_roots(&data, DEFAULT_ROOT_CAP).unwrap();
    let delta = data.null_root().unwrap();
    for seed in SEEDS {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..CASES_PER_SEED {
            let w = random_element(&mut rng, &data);
            let alpha = random_real_root(&mut rng, &finite, &delta);
            let f = random_rational_coweight(&mut rng);
            assert_eq!(
                pair(&w.act(&alpha), &w.act_coweight(&f).unwrap(), &data).unwrap(),
                pair(&alpha, &f, &data).unwrap()
            );
        }
    }
}

#[test]
fn translations_add_and_round_trip() {
    let data = d5();
    for seed in SEEDS {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..CASES_PER_SEED {
            let mu = random_integral_coweight(&mut rng);
            let nu = random_integral_coweight(&mut rng);
            let t_mu = translation_element(&mu, &data).unwrap();
            let t_nu = translation_element(&nu, &data).unwrap();
            assert_eq!(
                t_mu.mul(&t_nu),
                translation_element(&mu.add(&nu), &data).unwrap(),
                "t_mu t_nu != t_(mu+nu)"
            );
            assert_eq!(as_translation(&t_mu), Some(mu));
        }
    }
}

#[test]
fn finite_root_counts_match_closed_forms() {
    let d5 = d5();
    let roots_d5 = enumerate_finite_roots(&d5, DEFAULT_ROOT_CAP).unwrap();
    // Type D_n has 2 n (n - 1) roots.
    assert_eq!(roots_d5.len(), 2 * 5 * 4);
    // Every enumerated root is distinct and comes paired with its negative.
    for r in &roots_d5 {
        assert!(roots_d5.contains(&r.neg()));
    }

    let a3: TypeLabel = "A3~".parse().unwrap();
    let a3 = Arc::new(CartanData::load_builtin(a3).unwrap());
    let roots_a3 = enumerate_finite_roots(&a3, DEFAULT_ROOT_CAP).unwrap();
    // Type A_n has n (n + 1) roots.
    assert_eq!(roots_a3.len(), 3 * 4);
}

// ---------------------------------------------------------------------------
// Shrinking property tests over arbitrary short words.

fn token_strategy() -> impl Strategy<Value = GeneratorToken> {
    prop_oneof![
        (0usize..6).prop_map(GeneratorToken::S),
        Just(GeneratorToken::Aut { name: "sigma12".into(), image: vec![5, 4, 3, 2, 0, 1] }),
    ]
}

proptest! {
    #[test]
    fn inverse_cancels(word in prop::collection::vec(token_strategy(), 0..10)) {
        let data = d5();
        let g = evaluate_word(&word, &data).unwrap();
        prop_assert!(g.mul(&g.inverse()).is_identity());
        prop_assert!(g.inverse().mul(&g).is_identity());
    }

    #[test]
    fn bilinear_form_is_invariant(
        word in prop::collection::vec(token_strategy(), 0..10),
        i in 0usize..6,
        j in 0usize..6,
    ) {
        let data = d5();
        let g = evaluate_word(&word, &data).unwrap();
        let u = RootVec::simple(i, 6);
        let v = RootVec::simple(j, 6);
        prop_assert_eq!(
            bilinear(&g.act(&u), &g.act(&v), &data),
            bilinear(&u, &v, &data)
        );
    }
}
