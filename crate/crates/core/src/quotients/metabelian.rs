use crate::group::{Letter, Word};
use crate::ring::LaurentPoly;

use super::QuotientError;

/// Image of a word under the Magnus embedding of the free metabelian group
/// `F/F''`: its abelianization together with its abelianized Fox derivatives.
///
/// Two words have the same image exactly when they agree modulo `F''`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MetabelianImage {
    abelianization: Vec<i64>,
    derivatives: Vec<LaurentPoly>,
}

impl MetabelianImage {
    pub fn identity(m: usize) -> Self {
        MetabelianImage {
            abelianization: vec![0; m],
            derivatives: vec![LaurentPoly::zero(m); m],
        }
    }

    /// Image of a single generator or inverse generator.
    pub fn of_letter(m: usize, l: Letter) -> Self {
        let g = l.gen.0;
        let mut out = Self::identity(m);
        out.abelianization[g] = l.sign();
        out.derivatives[g] = if l.inverse {
            let mut e = vec![0; m];
            e[g] = -1;
            LaurentPoly::monomial(e, -1)
        } else {
            LaurentPoly::one(m)
        };
        out
    }

    pub fn rank(&self) -> usize {
        self.abelianization.len()
    }

    pub fn abelianization(&self) -> &[i64] {
        &self.abelianization
    }

    pub fn derivatives(&self) -> &[LaurentPoly] {
        &self.derivatives
    }

    /// `(α_u + α_v, d_u + x^{α_u} d_v)`.
    pub fn mul(&self, other: &MetabelianImage) -> Result<MetabelianImage, QuotientError> {
        if self.rank() != other.rank() {
            return Err(QuotientError::RankMismatch(self.rank(), other.rank()));
        }
        let abelianization = self
            .abelianization
            .iter()
            .zip(&other.abelianization)
            .map(|(a, b)| a + b)
            .collect();
        let derivatives = self
            .derivatives
            .iter()
            .zip(&other.derivatives)
            .map(|(du, dv)| du + &dv.shift(&self.abelianization))
            .collect();
        Ok(MetabelianImage {
            abelianization,
            derivatives,
        })
    }

    pub fn is_trivial(&self) -> bool {
        self.abelianization.iter().all(|&k| k == 0) && self.derivatives.iter().all(LaurentPoly::is_zero)
    }

    /// Checks `Σ_i d_i (x_i - 1) = x^α - 1`.
    pub fn fundamental_identity_holds(&self) -> bool {
        let m = self.rank();
        let one = LaurentPoly::one(m);
        let lhs = self
            .derivatives
            .iter()
            .enumerate()
            .fold(LaurentPoly::zero(m), |acc, (i, d)| {
                &acc + &(d * &(&LaurentPoly::variable(m, i) - &one))
            });
        let rhs = &LaurentPoly::monomial(self.abelianization.clone(), 1) - &one;
        lhs == rhs
    }
}

/// Magnus-embedding image of a word.
pub fn magnus_image(w: &Word) -> MetabelianImage {
    let m = w.alphabet().rank();
    let mut prefix = vec![0i64; m];
    let mut derivatives = vec![LaurentPoly::zero(m); m];
    for l in w.letters() {
        let g = l.gen.0;
        if l.inverse {
            prefix[g] -= 1;
            derivatives[g] = &derivatives[g] - &LaurentPoly::monomial(prefix.clone(), 1);
        } else {
            derivatives[g] = &derivatives[g] + &LaurentPoly::monomial(prefix.clone(), 1);
            prefix[g] += 1;
        }
    }
    MetabelianImage {
        abelianization: prefix,
        derivatives,
    }
}

/// Whether `u` and `v` agree in the free metabelian group `F/F''`.
pub fn equal_mod_second_derived(u: &Word, v: &Word) -> Result<bool, QuotientError> {
    if u.alphabet() != v.alphabet() {
        return Err(QuotientError::Group(crate::group::GroupError::AlphabetMismatch));
    }
    Ok(magnus_image(u) == magnus_image(v))
}

/// Jacobi relation `[x_i,[x_j,x_k]] [x_j,[x_k,x_i]] [x_k,[x_i,x_j]] = 1` in
/// `F/F''` for `1 ≤ i < j < k ≤ m` (1-based).
pub fn verify_jacobi(i: usize, j: usize, k: usize, m: usize) -> Result<bool, QuotientError> {
    if !(1 <= i && i < j && j < k && k <= m) {
        return Err(QuotientError::BadIndices(format!(
            "need 1 <= i < j < k <= m, got ({i}, {j}, {k}) with m = {m}"
        )));
    }
    let alphabet = crate::group::Alphabet::indexed("x", m)?;
    let x = |a: usize| Word::generator(&alphabet, a - 1);
    let (xi, xj, xk) = (x(i)?, x(j)?, x(k)?);
    let c = Word::commutator;
    let product = c(&xi, &c(&xj, &xk)?)?
        .mul(&c(&xj, &c(&xk, &xi)?)?)?
        .mul(&c(&xk, &c(&xi, &xj)?)?)?;
    equal_mod_second_derived(&product, &Word::identity(&alphabet))
}
