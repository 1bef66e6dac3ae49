mod common;

use cutnum::group::{parse_word, Alphabet, Word};
use cutnum::quotients::{
    free_nilpotent_alexander, lcs_weight, magnus_series, verify_jacobi, LcsWeight, NilpotentAlexanderModule,
    QuotientError,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::*;

fn weight_at_least(w: &LcsWeight, k: usize) -> bool {
    match w {
        LcsWeight::Exact(e) => *e >= k,
        LcsWeight::AtLeast(e) => *e >= k,
        LcsWeight::Identity => true,
    }
}

/// `[x, [x, ..., [x, y]]]` with `k - 1` copies of `x`, of weight exactly `k`.
fn left_normed(al: &std::sync::Arc<Alphabet>, k: usize) -> Word {
    let x = Word::generator(al, 0).unwrap();
    let mut w = Word::generator(al, 1).unwrap();
    for _ in 1..k {
        w = Word::commutator(&x, &w).unwrap();
    }
    w
}

proptest! {
    #[test]
    fn magnus_series_is_multiplicative(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let al = Alphabet::indexed("x", 2).unwrap();
        let (u, v) = (random_word(&mut rng, &al, 7), random_word(&mut rng, &al, 7));
        let uv = magnus_series(&u.mul(&v).unwrap(), 4).unwrap();
        prop_assert_eq!(uv, magnus_series(&u, 4).unwrap().mul(&magnus_series(&v, 4).unwrap()).unwrap());
        let inv = magnus_series(&u, 4).unwrap().mul(&magnus_series(&u.inv(), 4).unwrap()).unwrap();
        prop_assert!(inv.is_one());
    }

    #[test]
    fn commutator_weights_add(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let al = Alphabet::indexed("x", 3).unwrap();
        let a = random_word(&mut rng, &al, 4);
        let c = random_commutator(&mut rng, &al);
        // [F, F_2] lies in F_3 and [F_2, F_2] in F_4
        prop_assert!(weight_at_least(&lcs_weight(&Word::commutator(&a, &c).unwrap(), 5).unwrap(), 3));
        let d = random_commutator(&mut rng, &al);
        prop_assert!(weight_at_least(&lcs_weight(&Word::commutator(&c, &d).unwrap(), 5).unwrap(), 4));
        prop_assert!(weight_at_least(&lcs_weight(&c, 5).unwrap(), 2));
    }

    #[test]
    fn conjugation_preserves_weight(seed in any::<u64>(), k in 1usize..=4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let al = Alphabet::indexed("x", 2).unwrap();
        let g = random_word(&mut rng, &al, 6);
        let w = Word::conjugate(&left_normed(&al, k), &g).unwrap();
        prop_assert_eq!(lcs_weight(&w, 6).unwrap(), LcsWeight::Exact(k));
    }
}

#[test]
fn basic_commutator_weights() {
    let al = Alphabet::new(["x", "y"]).unwrap();
    assert_eq!(
        lcs_weight(&parse_word("[x,[x,[x,y]]]", &al).unwrap(), 4).unwrap(),
        LcsWeight::Exact(4)
    );
    assert_eq!(
        lcs_weight(&parse_word("[x,[x,[x,y]]]", &al).unwrap(), 3).unwrap(),
        LcsWeight::AtLeast(4)
    );
    assert_eq!(lcs_weight(&Word::identity(&al), 4).unwrap(), LcsWeight::Identity);
    assert_eq!(
        lcs_weight(&parse_word("x y", &al).unwrap(), 4).unwrap(),
        LcsWeight::Exact(1)
    );
    for k in 1..=6 {
        assert_eq!(lcs_weight(&left_normed(&al, k), 7).unwrap(), LcsWeight::Exact(k));
    }
}

#[test]
fn jacobi_exhaustive() {
    for m in 3..=6 {
        for i in 1..=m {
            for j in i + 1..=m {
                for k in j + 1..=m {
                    assert!(verify_jacobi(i, j, k, m).unwrap(), "({i},{j},{k}) in rank {m}");
                }
            }
        }
    }
}

#[test]
fn free_nilpotent_modules_are_cyclic_truncations() {
    for class in 1..=5 {
        let module = free_nilpotent_alexander(2, class, &[1, 0]).unwrap();
        assert_eq!(
            module,
            NilpotentAlexanderModule {
                additive_rank: class,
                annihilator_exponent: class,
                cyclic: true,
            },
            "class {class}"
        );
    }
}

#[test]
fn free_nilpotent_rejects_unsupported_input() {
    assert!(matches!(
        free_nilpotent_alexander(3, 3, &[1, 0, 0]),
        Err(QuotientError::Unsupported(_))
    ));
    assert!(free_nilpotent_alexander(2, 0, &[1, 0]).is_err());
}
