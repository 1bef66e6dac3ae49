use cutnum::ring::{IntMatrix, JetAtOne, LaurentPoly, Matrix, PolyMatrix};
use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

fn univariate() -> impl Strategy<Value = LaurentPoly> {
    (-4i64..=4, prop::collection::vec(-6i64..=6, 0..6)).prop_map(|(low, cs)| {
        let cs: Vec<BigInt> = cs.into_iter().map(BigInt::from).collect();
        LaurentPoly::from_dense(low, &cs)
    })
}

fn bivariate() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec(((-3i64..=3, -3i64..=3), -5i64..=5), 0..6).prop_map(|terms| {
        LaurentPoly::from_terms(2, terms.into_iter().map(|((a, b), c)| (vec![a, b], BigInt::from(c)))).unwrap()
    })
}

fn int_matrix(max: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=max).prop_flat_map(|n| prop::collection::vec(prop::collection::vec(-7i64..=7, n), n))
}

/// Cofactor expansion along the first row.
fn cofactor_det(m: &[Vec<i64>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::from(1);
    }
    let mut total = BigInt::from(0);
    for c in 0..n {
        let minor: Vec<Vec<i64>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(j, _)| *j != c)
                    .map(|(_, v)| *v)
                    .collect()
            })
            .collect();
        let term = BigInt::from(m[0][c]) * cofactor_det(&minor);
        if c % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// `p(1)` and `p'(1)` from the dense coefficients.
fn jet_oracle(p: &LaurentPoly) -> (BigInt, BigInt) {
    let (low, cs) = p.to_dense();
    let mut value = BigInt::from(0);
    let mut slope = BigInt::from(0);
    for (k, c) in cs.iter().enumerate() {
        value += c;
        slope += c * BigInt::from(low + k as i64);
    }
    (value, slope)
}

proptest! {
    #[test]
    fn ring_axioms(a in bivariate(), b in bivariate(), c in bivariate()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &LaurentPoly::one(2), a.clone());
    }

    #[test]
    fn jet_is_a_ring_homomorphism(p in univariate(), q in univariate()) {
        let (jp, jq) = (p.jet_at_one().unwrap(), q.jet_at_one().unwrap());
        prop_assert_eq!((&p * &q).jet_at_one().unwrap(), &jp * &jq);
        prop_assert_eq!((&p + &q).jet_at_one().unwrap(), &jp + &jq);
        let (v, s) = jet_oracle(&p);
        prop_assert_eq!(jp, JetAtOne::new(v, s));
    }

    #[test]
    fn specialization_is_multiplicative(a in bivariate(), b in bivariate(), n1 in -3i64..=3, n2 in -3i64..=3) {
        let n = [n1, n2];
        prop_assert_eq!((&a * &b).specialize(&n).unwrap(), &a.specialize(&n).unwrap() * &b.specialize(&n).unwrap());
    }

    #[test]
    fn exact_division_inverts_multiplication(p in univariate(), q in univariate()) {
        prop_assume!(!q.is_zero());
        prop_assert_eq!((&p * &q).divide_exact(&q).unwrap(), p);
    }

    #[test]
    fn bareiss_matches_cofactor_oracle(rows in int_matrix(4)) {
        let m = IntMatrix::from_i64_rows(&rows).unwrap();
        prop_assert_eq!(m.det().unwrap(), cofactor_det(&rows));
        prop_assert_eq!(m.rank() == rows.len(), !cofactor_det(&rows).is_zero());
    }

    #[test]
    fn determinant_is_multiplicative(a in int_matrix(4)) {
        let n = a.len();
        let b: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| ((i * 3 + j * 5) % 7) as i64 - 3).collect()).collect();
        let ab: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum()).collect())
            .collect();
        let det = |r: &Vec<Vec<i64>>| IntMatrix::from_i64_rows(r).unwrap().det().unwrap();
        prop_assert_eq!(det(&ab), det(&a) * det(&b));
    }

    #[test]
    fn poly_det_commutes_with_evaluation(entries in prop::collection::vec(univariate(), 9)) {
        let rows: Vec<Vec<LaurentPoly>> = entries.chunks(3).map(|c| c.to_vec()).collect();
        let m = PolyMatrix::from_rows(1, 3, rows).unwrap();
        let det = m.det().unwrap();
        let at_one: Vec<Vec<i64>> = (0..3)
            .map(|i| (0..3).map(|j| i64::try_from(m.get(i, j).eval_at_one()).unwrap()).collect())
            .collect();
        prop_assert_eq!(det.eval_at_one(), cofactor_det(&at_one));
        prop_assert_eq!(m.rank_over_fraction_field() == 3, !det.is_zero());
    }
}

#[test]
fn matrix_display_and_transpose() {
    let m = Matrix::from_fn(2, 3, |i, j| (i * 3 + j) as i64);
    assert_eq!(m.transpose().transpose(), m);
    assert_eq!(*m.transpose().get(2, 1), 5);
}

#[test]
fn empty_determinant_is_one() {
    assert_eq!(IntMatrix::identity(0).det().unwrap(), BigInt::from(1));
}
