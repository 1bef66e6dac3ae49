use crate::group::abelianized_fox_derivative;
use crate::ring::{LaurentPoly, PolyMatrix};

use super::{AlexanderError, PhiMap, Presentation};

/// Abelianized Fox matrix: entry `(ρ, i)` is `∂r_ρ/∂x_i` pushed to
/// `Z[x_1^{±1}, …, x_g^{±1}]`.
pub fn alexander_matrix(p: &Presentation) -> Result<PolyMatrix, AlexanderError> {
    let g = p.generator_count();
    let rows = p
        .relators()
        .iter()
        .map(|r| {
            (0..g)
                .map(|i| abelianized_fox_derivative(r, i))
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(PolyMatrix::from_rows(g, g, rows)?)
}

/// The Alexander matrix with `x_i ↦ t^{n_i}`, after validating `φ`.
pub fn specialized_matrix(p: &Presentation, phi: &PhiMap) -> Result<PolyMatrix, AlexanderError> {
    phi.validate(p)?;
    Ok(alexander_matrix(p)?.specialize(phi.exponents())?)
}

/// Rank over `Z[t^{±1}]` of `H_1` of the infinite cyclic cover determined
/// by `φ`, computed as `(g - 1) - rank M_φ`.
pub fn h1_rank_of_cover(p: &Presentation, phi: &PhiMap) -> Result<usize, AlexanderError> {
    let m = specialized_matrix(p, phi)?;
    let rank = m.rank_over_fraction_field();
    let bound = p.generator_count() - 1;
    if rank > bound {
        return Err(AlexanderError::RankBound { rank, bound });
    }
    Ok(bound - rank)
}

/// Checks `M_φ · (t^{n_i} - 1)_i = 0`, which the fundamental formula of Fox
/// calculus forces for every relator.
pub fn fundamental_identity_check(p: &Presentation, phi: &PhiMap) -> Result<bool, AlexanderError> {
    let m = specialized_matrix(p, phi)?;
    let v: Vec<LaurentPoly> = phi
        .exponents()
        .iter()
        .map(|&k| LaurentPoly::t_pow_minus_one(k))
        .collect();
    Ok(m.mul_vector(&v)?.iter().all(LaurentPoly::is_zero))
}
