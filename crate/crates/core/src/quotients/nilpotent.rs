//! The Alexander module `N/N'` of the free nilpotent group `F/F_{k+1}` on
//! two generators, where `N` is the kernel of `x ↦ t, y ↦ 1`.
//!
//! Every element `g` of `N` has Magnus expansion `1 + (terms containing Y)`.
//! Keeping only the monomials with exactly one `Y` is additive on `N` and
//! kills `N'`, so it gives a homomorphism `N/N' → Z^L`. The iterated
//! commutators `c_j = [x,[x,…,[x,y]]]` (j copies of `x`) represent
//! `(t-1)^j y` and generate `N/N'` additively until the first one that is
//! trivial in `F/F_{k+1}`. When their images are independent the module is
//! free abelian on them and the rank and annihilator can be read off.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::group::{Alphabet, Word};
use crate::ring::IntMatrix;

use super::magnus::{magnus_series, MagnusSeries, NcMonomial};
use super::QuotientError;

/// Largest nilpotency class accepted by [`free_nilpotent_alexander`].
pub const MAX_SUPPORTED_CLASS: usize = 6;

/// Additive structure of `N/N'` as a `Z[t^{±1}]`-module.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NilpotentAlexanderModule {
    pub additive_rank: usize,
    /// Smallest `e` with `J^e · N/N' = 0`.
    pub annihilator_exponent: usize,
    /// Whether `N/N'` is generated by the class of `y`.
    pub cyclic: bool,
}

fn single_y_part(s: &MagnusSeries, y: u16) -> BTreeMap<NcMonomial, BigInt> {
    s.terms()
        .filter(|(m, _)| m.iter().filter(|&&g| g == y).count() == 1)
        .map(|(m, c)| (m.clone(), c.clone()))
        .collect()
}

fn to_rows(parts: &[BTreeMap<NcMonomial, BigInt>], keys: &[NcMonomial]) -> Vec<Vec<BigInt>> {
    parts
        .iter()
        .map(|p| keys.iter().map(|k| p.get(k).cloned().unwrap_or_default()).collect())
        .collect()
}

/// Solves `Σ λ_i basis_i = target` over the rationals, returning `λ` when a
/// solution exists. `basis` must be linearly independent.
fn solve_rational(basis: &[Vec<BigInt>], target: &[BigInt]) -> Option<Vec<BigRational>> {
    let e = basis.len();
    let len = target.len();
    // augmented system with one row per coordinate
    let mut a: Vec<Vec<BigRational>> = (0..len)
        .map(|r| {
            let mut row: Vec<BigRational> = basis.iter().map(|b| BigRational::from(b[r].clone())).collect();
            row.push(BigRational::from(target[r].clone()));
            row
        })
        .collect();
    let mut pivot_row = 0;
    let mut pivots = Vec::new();
    for col in 0..e {
        let Some(p) = (pivot_row..len).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(pivot_row, p);
        let inv = a[pivot_row][col].recip();
        for v in a[pivot_row].iter_mut() {
            *v = &*v * &inv;
        }
        for r in 0..len {
            if r != pivot_row && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                let pivot = a[pivot_row].clone();
                for (x, y) in a[r].iter_mut().zip(&pivot) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(col);
        pivot_row += 1;
    }
    if a[pivot_row..].iter().any(|row| !row[e].is_zero()) {
        return None;
    }
    let mut lambda = vec![BigRational::zero(); e];
    for (r, &c) in pivots.iter().enumerate() {
        lambda[c] = a[r][e].clone();
    }
    Some(lambda)
}

/// Computes `(additive rank, annihilator exponent, cyclic)` of `N/N'` for the
/// free nilpotent group of the given class on two generators, with the
/// character `(1, 0)`.
pub fn free_nilpotent_alexander(
    rank: usize,
    class: usize,
    phi: &[i64],
) -> Result<NilpotentAlexanderModule, QuotientError> {
    if rank != 2 || phi != [1, 0] {
        return Err(QuotientError::Unsupported(format!(
            "only rank 2 with phi = (1, 0) is supported, got rank {rank} and phi = {phi:?}"
        )));
    }
    if class == 0 || class > MAX_SUPPORTED_CLASS {
        return Err(QuotientError::Unsupported(format!(
            "class must lie in 1..={MAX_SUPPORTED_CLASS}, got {class}"
        )));
    }
    let alphabet = Alphabet::new(["x", "y"])?;
    let x = Word::generator(&alphabet, 0)?;
    let y = Word::generator(&alphabet, 1)?;
    let degree = class;

    // c_j = (t-1)^j y until it dies in F/F_{class+1}
    let mut generators = Vec::new();
    let mut c = y.clone();
    loop {
        let s = magnus_series(&c, degree)?;
        if s.is_one() {
            break;
        }
        generators.push(s);
        c = Word::commutator(&x, &c)?;
        if generators.len() > class + 1 {
            return Err(QuotientError::Uncertified(
                "iterated commutators did not vanish in the nilpotent quotient".into(),
            ));
        }
    }
    let upper = generators.len();

    let parts: Vec<_> = generators.iter().map(|s| single_y_part(s, 1)).collect();
    let keys: Vec<NcMonomial> = parts
        .iter()
        .flat_map(|p| p.keys().cloned())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let rows = to_rows(&parts, &keys);
    let lower = if rows.is_empty() {
        0
    } else {
        IntMatrix::from_rows(keys.len(), rows.clone())?.rank()
    };
    if lower != upper {
        return Err(QuotientError::Uncertified(format!(
            "rank bounds disagree: {upper} generators but image rank {lower}"
        )));
    }

    // With the map injective, J^e kills N/N' iff it kills the generator y,
    // i.e. iff c_e vanishes. The first vanishing c_j is j = upper.
    let annihilator_exponent = parts.iter().position(BTreeMap::is_empty).unwrap_or(upper);

    // every conjugate x^a y x^-a must be an integral combination of the c_j
    let bound = class as i64 + 1;
    let mut cyclic = true;
    for a in -bound..=bound {
        let conj = Word::conjugate(&y, &x.pow(a))?;
        let part = single_y_part(&magnus_series(&conj, degree)?, 1);
        let target: Vec<BigInt> = keys.iter().map(|k| part.get(k).cloned().unwrap_or_default()).collect();
        if part.keys().any(|k| !keys.contains(k)) {
            cyclic = false;
            break;
        }
        match solve_rational(&rows, &target) {
            Some(lambda) if lambda.iter().all(|l| l.denom().is_one()) => {}
            _ => {
                cyclic = false;
                break;
            }
        }
    }

    Ok(NilpotentAlexanderModule {
        additive_rank: upper,
        annihilator_exponent,
        cyclic,
    })
}
