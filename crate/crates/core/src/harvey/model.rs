//! The model in which every conjugator is trivial: `μ_ij = [x_i, x_j]`.
//! It gives a second, independent route to the relation matrix and a concrete
//! presentation for the Fox-calculus pipeline.

use std::sync::Arc;

use crate::alexander::Presentation;
use crate::group::{Alphabet, Word};
use crate::quotients::equal_mod_second_derived;
use crate::ring::{LaurentPoly, Matrix, PolyMatrix};

use super::{HarveyError, HarveyParams, PairIndex};

fn t_minus(n: i64) -> LaurentPoly {
    LaurentPoly::t_pow_minus_one(n)
}

/// The full relation matrix of the trivial-conjugator model.
///
/// Rows `iN` are the longitude relations
/// `Σ_{j<i} (t^{-n_j} - 1) μ_ji + Σ_{k>i} (1 - t^{-n_k}) μ_ik`, rows `Nj` are
/// their negatives, and the remaining rows are the Jacobi relations
/// `J(a,b,c) = (t^{n_a}-1) μ_bc - (t^{n_b}-1) μ_ac + (t^{n_c}-1) μ_ab`,
/// taken as `J(N,i,j)`, `-J(i,N,j)` or `J(i,j,N)` by the position of `N`.
pub fn model_relation_matrix(params: &HarveyParams) -> Result<PolyMatrix, HarveyError> {
    let m = params.m();
    let nn = params.big_n();
    let n = |k: usize| params.n_at(k);
    let idx = PairIndex::new(m);
    let size = idx.len();
    let pos = |a: usize, b: usize| idx.position(a, b).expect("valid pair");
    let mut out = Matrix::from_fn(size, size, |_, _| LaurentPoly::zero(1));

    let longitude = |i: usize| -> Vec<(usize, LaurentPoly)> {
        let mut row = Vec::new();
        for j in 1..i {
            row.push((pos(j, i), t_minus(-n(j))));
        }
        for k in i + 1..=m {
            row.push((pos(i, k), -t_minus(-n(k))));
        }
        row
    };
    let jacobi = |a: usize, b: usize, c: usize| -> Vec<(usize, LaurentPoly)> {
        vec![
            (pos(b, c), t_minus(n(a))),
            (pos(a, c), -t_minus(n(b))),
            (pos(a, b), t_minus(n(c))),
        ]
    };

    for (row, &(i, j)) in idx.pairs().iter().enumerate() {
        let coeffs = if j == nn {
            longitude(i)
        } else if i == nn {
            longitude(j).into_iter().map(|(c, p)| (c, -p)).collect()
        } else if nn < i {
            jacobi(nn, i, j)
        } else if nn < j {
            jacobi(i, nn, j).into_iter().map(|(c, p)| (c, -p)).collect()
        } else {
            jacobi(i, j, nn)
        };
        for (col, p) in coeffs {
            let sum = out.get(row, col) + &p;
            out.set(row, col, sum);
        }
    }
    Ok(PolyMatrix::new(1, out)?)
}

fn generators(m: usize) -> Result<(Arc<Alphabet>, Vec<Word>), HarveyError> {
    let alphabet = Alphabet::indexed("x", m)?;
    let xs = (0..m)
        .map(|k| Word::generator(&alphabet, k))
        .collect::<Result<Vec<_>, _>>()?;
    Ok((alphabet, xs))
}

/// `⟨x_1, …, x_m | l_1, …, l_m⟩` with longitudes
/// `l_i = Π_{j<i} [x_j^{-1}, [x_j, x_i]] · Π_{k>i} [[x_i, x_k], x_k^{-1}]`.
pub fn model_group_presentation(m: usize) -> Result<Presentation, HarveyError> {
    if m == 0 {
        return Err(HarveyError::InvalidParams("m must be at least 1".into()));
    }
    let (alphabet, x) = generators(m)?;
    let c = Word::commutator;
    let mut relators = Vec::with_capacity(m);
    for i in 0..m {
        let mut l = Word::identity(&alphabet);
        for j in 0..i {
            l = l.mul(&c(&x[j].inv(), &c(&x[j], &x[i])?)?)?;
        }
        for k in i + 1..m {
            l = l.mul(&c(&c(&x[i], &x[k])?, &x[k].inv())?)?;
        }
        relators.push(l);
    }
    Ok(Presentation::new(alphabet, relators)?)
}

fn check_pair(i: usize, j: usize, m: usize) -> Result<(), HarveyError> {
    if !(1 <= i && i < j && j <= m) {
        return Err(HarveyError::BadIndices(format!(
            "need 1 <= i < j <= m, got ({i}, {j}), m = {m}"
        )));
    }
    Ok(())
}

fn check_commutator(w: &Word, name: &str, m: usize) -> Result<(), HarveyError> {
    if w.alphabet().rank() != m {
        return Err(HarveyError::BadIndices(format!("{name} is not a word in x1..x{m}")));
    }
    if !w.in_commutator_subgroup() {
        return Err(HarveyError::NotInCommutatorSubgroup(name.to_string()));
    }
    Ok(())
}

/// Checks `[x_i, v x_j v^{-1}]^{ω} = [x_i, [v, x_j]] [x_i, x_j]` modulo the
/// second derived subgroup, for `v, ω` in the commutator subgroup. Indices
/// are 1-based and the words must be over `x1..xm`.
pub fn verify_muij2_reduction(v: &Word, omega: &Word, i: usize, j: usize, m: usize) -> Result<bool, HarveyError> {
    check_pair(i, j, m)?;
    check_commutator(v, "v", m)?;
    check_commutator(omega, "omega", m)?;
    if v.alphabet() != omega.alphabet() {
        return Err(crate::group::GroupError::AlphabetMismatch.into());
    }
    let alphabet = v.alphabet();
    let xi = Word::generator(alphabet, i - 1)?;
    let xj = Word::generator(alphabet, j - 1)?;
    let c = Word::commutator;
    let conj_xj = Word::conjugate(&xj, v)?;
    let lhs = Word::conjugate(&c(&xi, &conj_xj)?, omega)?;
    let rhs = c(&xi, &c(v, &xj)?)?.mul(&c(&xi, &xj)?)?;
    Ok(equal_mod_second_derived(&lhs, &rhs)?)
}

/// Conjugators `v_ij, v_ik, v_jk` for one Jacobi triple.
#[derive(Clone, Debug)]
pub struct FreerelConjugators {
    pub v_ij: Word,
    pub v_ik: Word,
    pub v_jk: Word,
}

impl FreerelConjugators {
    pub fn trivial(m: usize) -> Result<Self, HarveyError> {
        let alphabet = Alphabet::indexed("x", m)?;
        let one = Word::identity(&alphabet);
        Ok(FreerelConjugators {
            v_ij: one.clone(),
            v_ik: one.clone(),
            v_jk: one,
        })
    }
}

/// The successive forms of the Jacobi relation `J(i,j,k)` after writing
/// `[x_a, x_b] = [[v_ab, x_b], x_a] μ_ab` with `μ_ab = [x_a, v_ab x_b v_ab^{-1}]`.
/// Each word should be trivial modulo the second derived subgroup.
pub fn freerel_chain(i: usize, j: usize, k: usize, m: usize, v: &FreerelConjugators) -> Result<Vec<Word>, HarveyError> {
    if !(1 <= i && i < j && j < k && k <= m) {
        return Err(HarveyError::BadIndices(format!(
            "need 1 <= i < j < k <= m, got ({i}, {j}, {k}), m = {m}"
        )));
    }
    check_commutator(&v.v_ij, "v_ij", m)?;
    check_commutator(&v.v_ik, "v_ik", m)?;
    check_commutator(&v.v_jk, "v_jk", m)?;
    let alphabet = v.v_ij.alphabet().clone();
    let x = |a: usize| Word::generator(&alphabet, a - 1);
    let (xi, xj, xk) = (x(i)?, x(j)?, x(k)?);
    let c = Word::commutator;
    let mu = |a: &Word, b: &Word, w: &Word| -> Result<Word, HarveyError> { Ok(c(a, &Word::conjugate(b, w)?)?) };
    let mu_jk = mu(&xj, &xk, &v.v_jk)?;
    let mu_ik = mu(&xi, &xk, &v.v_ik)?;
    let mu_ij = mu(&xi, &xj, &v.v_ij)?;
    // correction terms [[v_jk,x_k],x_j], [x_i,[v_ik,x_k]], [[v_ij,x_j],x_i]
    let e_jk = c(&c(&v.v_jk, &xk)?, &xj)?;
    let e_ik = c(&xi, &c(&v.v_ik, &xk)?)?;
    let e_ij = c(&c(&v.v_ij, &xj)?, &xi)?;

    let product = |ws: &[Word]| -> Result<Word, HarveyError> {
        let mut acc = Word::identity(&alphabet);
        for w in ws {
            acc = acc.mul(w)?;
        }
        Ok(acc)
    };

    let line0 = product(&[
        c(&xi, &c(&xj, &xk)?)?,
        c(&xj, &c(&xi, &xk)?.inv())?,
        c(&xk, &c(&xi, &xj)?)?,
    ])?;
    let line1 = product(&[
        c(&xi, &e_jk.mul(&mu_jk)?)?,
        c(&xj, &mu_ik.inv().mul(&e_ik)?)?,
        c(&xk, &e_ij.mul(&mu_ij)?)?,
    ])?;
    let line2 = product(&[
        c(&xi, &e_jk)?,
        c(&xi, &mu_jk)?,
        c(&xj, &mu_ik.inv())?,
        c(&xj, &e_ik)?,
        c(&xk, &e_ij)?,
        c(&xk, &mu_ij)?,
    ])?;
    let line3 = product(&[
        c(&xi, &mu_jk)?,
        c(&xj, &mu_ik.inv())?,
        c(&xk, &mu_ij)?,
        c(&xi, &e_jk)?,
        c(&xj, &e_ik)?,
        c(&xk, &e_ij)?,
    ])?;
    Ok(vec![line0, line1, line2, line3])
}

/// Every form in [`freerel_chain`] is trivial modulo `F''`.
pub fn verify_freerel(i: usize, j: usize, k: usize, m: usize, v: &FreerelConjugators) -> Result<bool, HarveyError> {
    let chain = freerel_chain(i, j, k, m, v)?;
    let one = Word::identity(chain[0].alphabet());
    for w in &chain {
        if !equal_mod_second_derived(w, &one)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::parse_word;

    #[test]
    fn model_matrix_small() {
        let p = HarveyParams::new(2, vec![1, 1], Some(1)).unwrap();
        let m = model_relation_matrix(&p).unwrap();
        assert_eq!((m.rows(), m.cols()), (1, 1));
        // row 12 with N = 1 is -l_2 = -(t^{-1} - 1) μ_12
        assert_eq!(m.get(0, 0), &(-t_minus(-1)));
        assert_eq!(
            m.get(0, 0).jet_at_one().unwrap(),
            crate::ring::JetAtOne::from_ints(0, 1)
        );
        let one = HarveyParams::new(1, vec![1], None).unwrap();
        assert_eq!(model_relation_matrix(&one).unwrap().rows(), 0);
    }

    #[test]
    fn model_presentation_two_generators() {
        let p = model_group_presentation(2).unwrap();
        let al = p.alphabet().clone();
        let expect = [
            parse_word("[[x1,x2],x2^-1]", &al).unwrap(),
            parse_word("[x1^-1,[x1,x2]]", &al).unwrap(),
        ];
        assert_eq!(p.relators(), &expect);
        let single = model_group_presentation(1).unwrap();
        assert_eq!(single.relators().len(), 1);
        assert!(single.relators()[0].is_identity());
    }

    #[test]
    fn muij2_examples() {
        let al = Alphabet::indexed("x", 3).unwrap();
        let v = parse_word("[x1,x2]", &al).unwrap();
        let w = parse_word("[x1,x3]", &al).unwrap();
        assert!(verify_muij2_reduction(&v, &w, 1, 2, 3).unwrap());
        let one = Word::identity(&al);
        assert!(verify_muij2_reduction(&one, &one, 1, 2, 3).unwrap());
        let x1 = parse_word("x1", &al).unwrap();
        assert!(matches!(
            verify_muij2_reduction(&x1, &one, 1, 2, 3),
            Err(HarveyError::NotInCommutatorSubgroup(_))
        ));
        assert!(verify_muij2_reduction(&one, &one, 2, 1, 3).is_err());
    }

    #[test]
    fn freerel_trivial_and_nontrivial_conjugators() {
        assert!(verify_freerel(1, 2, 3, 3, &FreerelConjugators::trivial(3).unwrap()).unwrap());
        let al = Alphabet::indexed("x", 4).unwrap();
        let v = FreerelConjugators {
            v_ij: parse_word("[x1,x4][x2,x3]^2", &al).unwrap(),
            v_ik: parse_word("[x3,x2^-1 x4]", &al).unwrap(),
            v_jk: parse_word("x1 [x2,x3] x1^-1", &al).unwrap(),
        };
        assert!(verify_freerel(1, 3, 4, 4, &v).unwrap());
        assert!(verify_freerel(3, 2, 4, 4, &v).is_err());
    }
}
