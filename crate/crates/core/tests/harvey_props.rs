mod common;

use cutnum::group::Alphabet;
use cutnum::harvey::{
    a_at_one, case_table_polynomials, f4_obstruction_certificate, f4_obstruction_certificate_from_parts, freerel_chain,
    model_group_presentation, model_relation_matrix, nonsingularity_certificate, nonsingularity_certificate_from_parts,
    quadratic_form_check, relation_matrix_mod_j2, verify_decomposition, verify_freerel, verify_muij2_reduction,
    FreerelConjugators, HarveyError, HarveyParams, PairIndex,
};
use cutnum::quotients::equal_mod_second_derived;
use cutnum::ring::{IntMatrix, JetAtOne, LaurentPoly};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::*;

/// `det A(1)` computed as `det(M) / (t - 1)^{C(m,2)}` at `t = 1`, from the
/// full case-table polynomials rather than their jets.
fn det_a1_from_polynomials(params: &HarveyParams) -> BigInt {
    let m = case_table_polynomials(params).unwrap();
    let det = m.det().unwrap();
    let t_minus_1 = LaurentPoly::t_pow_minus_one(1);
    let quotient = det.divide_exact(&t_minus_1.pow(m.rows() as u32)).unwrap();
    quotient.eval_at_one()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn certificates_succeed_for_random_members(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let params = random_params(&mut rng, 7);
        let cert = nonsingularity_certificate(&params).unwrap();
        prop_assert!(cert.checks.iter().all(|c| c.passed));
        prop_assert!(!cert.det_a1.is_zero());
        prop_assert!(quadratic_form_check(&cert.a_at_one, &params));
    }

    #[test]
    fn model_jets_match_case_table(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let params = random_params(&mut rng, 6);
        prop_assert_eq!(model_relation_matrix(&params).unwrap().jets().unwrap(), relation_matrix_mod_j2(&params).unwrap());
    }

    #[test]
    fn permuting_labels_preserves_det(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let params = random_params(&mut rng, 6);
        let m = params.m();
        let mut sigma: Vec<usize> = (1..=m).collect();
        sigma.shuffle(&mut rng);
        // generator k is renamed sigma[k-1]
        let mut n = vec![0; m];
        for k in 1..=m {
            n[sigma[k - 1] - 1] = params.n_at(k);
        }
        let permuted = HarveyParams::new(m, n, Some(sigma[params.big_n() - 1])).unwrap();
        let d = nonsingularity_certificate(&params).unwrap().det_a1;
        let e = nonsingularity_certificate(&permuted).unwrap().det_a1;
        prop_assert_eq!(d.abs(), e.abs());
    }

    #[test]
    fn muij2_reduction(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let al = Alphabet::indexed("x", 3).unwrap();
        let v = random_commutator(&mut rng, &al);
        let omega = random_commutator(&mut rng, &al);
        prop_assert!(verify_muij2_reduction(&v, &omega, 1, 2, 3).unwrap());
        prop_assert!(verify_muij2_reduction(&v, &omega, 2, 3, 3).unwrap());
    }

    #[test]
    fn freerel_with_random_conjugators(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let al = Alphabet::indexed("x", 4).unwrap();
        let v = FreerelConjugators {
            v_ij: random_derived(&mut rng, &al),
            v_ik: random_derived(&mut rng, &al),
            v_jk: random_derived(&mut rng, &al),
        };
        prop_assert!(verify_freerel(1, 2, 4, 4, &v).unwrap());
    }
}

#[test]
fn polynomial_determinant_oracle() {
    let params = HarveyParams::new(4, vec![1, 1, 1, 1], Some(1)).unwrap();
    let cert = nonsingularity_certificate(&params).unwrap();
    assert_eq!(cert.det_a1, det_a1_from_polynomials(&params));
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..20 {
        let params = random_params(&mut rng, 4);
        assert_eq!(
            nonsingularity_certificate(&params).unwrap().det_a1,
            det_a1_from_polynomials(&params),
            "{params}"
        );
    }
}

#[test]
fn small_hand_values() {
    let p = HarveyParams::new(2, vec![1, 1], Some(1)).unwrap();
    let jets = relation_matrix_mod_j2(&p).unwrap();
    assert_eq!(jets.get(0, 0), &JetAtOne::from_ints(0, 1));
    assert_eq!(
        a_at_one(&jets, &p).unwrap(),
        IntMatrix::from_i64_rows(&[vec![1]]).unwrap()
    );
    let p = HarveyParams::new(2, vec![1, 0], None).unwrap();
    assert_eq!(
        relation_matrix_mod_j2(&p).unwrap().get(0, 0),
        &JetAtOne::from_ints(0, 1)
    );
    let p = HarveyParams::new(3, vec![1, 1, 1], None).unwrap();
    let a1 = a_at_one(&relation_matrix_mod_j2(&p).unwrap(), &p).unwrap();
    for a in 0..3 {
        assert_eq!(a1.get(a, a), &BigInt::from(1));
        for b in 0..3 {
            if a != b {
                assert!(a1.get(a, b).abs() <= BigInt::from(1));
                assert_eq!(a1.get(a, b), &-a1.get(b, a));
            }
        }
    }
    assert_eq!(a1.det().unwrap(), BigInt::from(3));
}

#[test]
fn trivial_member() {
    let p = HarveyParams::new(1, vec![1], None).unwrap();
    let cert = nonsingularity_certificate(&p).unwrap();
    assert_eq!(cert.a_at_one.rows(), 0);
    assert_eq!(cert.det_a1, BigInt::from(1));
    let f4 = f4_obstruction_certificate(&p).unwrap();
    assert!(f4.conclusions.iter().any(|c| c.statement.starts_with("beta_1(X) = 1")));
    let pres = model_group_presentation(1).unwrap();
    assert_eq!(pres.relators().len(), 1);
    assert!(pres.relators()[0].is_identity());
}

#[test]
fn invalid_params_are_rejected() {
    assert!(matches!(
        HarveyParams::new(2, vec![2, 2], None),
        Err(HarveyError::NonPrimitive(_))
    ));
    assert!(matches!(
        HarveyParams::new(2, vec![1, 0], Some(2)),
        Err(HarveyError::InvalidParams(_))
    ));
    assert!(matches!(
        HarveyParams::new(2, vec![1], None),
        Err(HarveyError::InvalidParams(_))
    ));
    assert!(matches!(
        HarveyParams::new(0, vec![], None),
        Err(HarveyError::InvalidParams(_))
    ));
}

#[test]
fn injected_faults_are_refused() {
    let p = HarveyParams::new(4, vec![1, 1, 1, 1], Some(1)).unwrap();
    let jets = relation_matrix_mod_j2(&p).unwrap();

    let mut skew = jets.clone();
    let e = skew.get(0, 3).clone();
    skew.set(0, 3, -&e);
    assert!(!verify_decomposition(&skew, &p).skew_symmetry);
    let err = nonsingularity_certificate_from_parts(&p, skew, None).unwrap_err();
    assert!(err.is_refusal(), "{err}");

    let mut diag = jets.clone();
    diag.set(2, 2, JetAtOne::from_ints(0, 5));
    assert!(
        matches!(nonsingularity_certificate_from_parts(&p, diag, None), Err(HarveyError::CheckFailed(n)) if n == "diagonal")
    );

    let mut value = jets.clone();
    value.set(1, 0, JetAtOne::from_ints(1, 0));
    assert!(
        matches!(nonsingularity_certificate_from_parts(&p, value, None), Err(HarveyError::CheckFailed(n)) if n == "off_diagonal_in_j")
    );

    let mut noisy = a_at_one(&jets, &p).unwrap();
    noisy.set(0, 1, noisy.get(0, 1) + BigInt::from(1));
    noisy.set(1, 0, noisy.get(1, 0) + BigInt::from(1));
    assert!(!quadratic_form_check(&noisy, &p));

    let singular = IntMatrix::from_fn(6, 6, |_, _| BigInt::from(0));
    for cert in [
        nonsingularity_certificate_from_parts(&p, jets.clone(), Some(singular.clone())),
        f4_obstruction_certificate_from_parts(&p, jets.clone(), Some(singular)),
    ] {
        assert!(cert.unwrap_err().is_refusal());
    }
}

#[test]
fn freerel_exhaustive_trivial_conjugators() {
    let m = 5;
    let v = FreerelConjugators::trivial(m).unwrap();
    for i in 1..=m {
        for j in i + 1..=m {
            for k in j + 1..=m {
                assert!(verify_freerel(i, j, k, m, &v).unwrap(), "({i},{j},{k})");
            }
        }
    }
    let chain = freerel_chain(1, 2, 3, 3, &FreerelConjugators::trivial(3).unwrap()).unwrap();
    let one = cutnum::group::Word::identity(chain[0].alphabet());
    assert!(chain.iter().all(|w| equal_mod_second_derived(w, &one).unwrap()));
}

#[test]
fn muij2_commutator_instance_and_degenerate_case() {
    let al = Alphabet::indexed("x", 3).unwrap();
    let v = cutnum::group::parse_word("[x1,x2]", &al).unwrap();
    let omega = cutnum::group::parse_word("[x1,x3]", &al).unwrap();
    assert!(verify_muij2_reduction(&v, &omega, 1, 2, 3).unwrap());
    let one = cutnum::group::Word::identity(&al);
    assert!(verify_muij2_reduction(&one, &one, 1, 2, 3).unwrap());
    let x1 = cutnum::group::Word::generator(&al, 0).unwrap();
    assert!(verify_muij2_reduction(&x1, &one, 1, 2, 3).is_err());
}

#[test]
fn pair_index_is_dictionary_order() {
    let pairs = PairIndex::new(4);
    assert_eq!(pairs.pairs(), &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]);
    assert_eq!(pairs.position(3, 1), Some(1));
}
