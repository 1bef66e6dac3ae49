use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::group::{Letter, Word};

use super::QuotientError;

/// A noncommutative monomial `X_{i_1} X_{i_2} … X_{i_d}`, stored as indices.
pub type NcMonomial = Vec<u16>;

/// Truncated Magnus expansion `x_i ↦ 1 + X_i` in `Z⟨⟨X_1, …, X_m⟩⟩`,
/// keeping only terms of total degree at most `degree`.
///
/// A word lies in the `k`-th lower central term `F_k` exactly when its
/// expansion is `1` plus terms of degree `≥ k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MagnusSeries {
    rank: usize,
    degree: usize,
    coeffs: BTreeMap<NcMonomial, BigInt>,
}

impl MagnusSeries {
    pub fn one(rank: usize, degree: usize) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(Vec::new(), BigInt::one());
        MagnusSeries { rank, degree, coeffs }
    }

    /// `1 + X_g`, or the geometric series `1 - X_g + X_g^2 - …` for an inverse.
    pub fn of_letter(rank: usize, degree: usize, l: Letter) -> Self {
        let mut s = Self::one(rank, degree);
        let g = l.gen.0 as u16;
        if l.inverse {
            for k in 1..=degree {
                let c = if k % 2 == 0 { 1 } else { -1 };
                s.coeffs.insert(vec![g; k], BigInt::from(c));
            }
        } else if degree >= 1 {
            s.coeffs.insert(vec![g], BigInt::one());
        }
        s
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coefficient(&self, m: &[u16]) -> BigInt {
        self.coeffs.get(m).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Nonzero terms in lexicographic monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&NcMonomial, &BigInt)> {
        self.coeffs.iter()
    }

    pub fn mul(&self, other: &MagnusSeries) -> Result<MagnusSeries, QuotientError> {
        if self.rank != other.rank || self.degree != other.degree {
            return Err(QuotientError::RankMismatch(self.rank, other.rank));
        }
        let mut out: BTreeMap<NcMonomial, BigInt> = BTreeMap::new();
        for (a, ca) in &self.coeffs {
            for (b, cb) in &other.coeffs {
                if a.len() + b.len() > self.degree {
                    continue;
                }
                let mut key = a.clone();
                key.extend_from_slice(b);
                *out.entry(key).or_insert_with(BigInt::zero) += ca * cb;
            }
        }
        out.retain(|_, c| !c.is_zero());
        Ok(MagnusSeries {
            rank: self.rank,
            degree: self.degree,
            coeffs: out,
        })
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&Vec::new()).is_some_and(One::is_one)
    }

    /// Smallest positive degree carrying a nonzero coefficient.
    pub fn lowest_nontrivial_degree(&self) -> Option<usize> {
        self.coeffs.keys().map(Vec::len).filter(|&d| d > 0).min()
    }

    /// Terms of degree exactly `d`.
    pub fn homogeneous_part(&self, d: usize) -> BTreeMap<NcMonomial, BigInt> {
        self.coeffs
            .iter()
            .filter(|(k, _)| k.len() == d)
            .map(|(k, c)| (k.clone(), c.clone()))
            .collect()
    }
}

impl fmt::Display for MagnusSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut keys: Vec<_> = self.coeffs.iter().collect();
        keys.sort_by(|a, b| a.0.len().cmp(&b.0.len()).then_with(|| a.0.cmp(b.0)));
        for (i, (k, c)) in keys.into_iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if k.is_empty() {
                write!(f, "{c}")?;
            } else {
                if !c.is_one() {
                    write!(f, "({c})")?;
                }
                for g in k {
                    write!(f, "X{}", g + 1)?;
                }
            }
        }
        Ok(())
    }
}

/// Truncated Magnus expansion of a word up to total degree `degree`.
pub fn magnus_series(w: &Word, degree: usize) -> Result<MagnusSeries, QuotientError> {
    if degree == 0 {
        return Err(QuotientError::InvalidDegree);
    }
    let rank = w.alphabet().rank();
    let mut s = MagnusSeries::one(rank, degree);
    for &l in w.letters() {
        s = s.mul(&MagnusSeries::of_letter(rank, degree, l))?;
    }
    Ok(s)
}

/// Position of a word in the lower central series.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum LcsWeight {
    /// `w ∈ F_k` but `w ∉ F_{k+1}`.
    Exact(usize),
    /// `w ∈ F_{k}` for the given bound (the search stopped there).
    AtLeast(usize),
    /// The word is trivial in the free group.
    Identity,
}

impl fmt::Display for LcsWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LcsWeight::Exact(k) => write!(f, "{k}"),
            LcsWeight::AtLeast(k) => write!(f, ">={k}"),
            LcsWeight::Identity => write!(f, "identity"),
        }
    }
}

/// Largest `k ≤ max_k` with `w ∈ F_k`, read off the lowest nonvanishing
/// degree of the Magnus expansion truncated at `max_k`.
pub fn lcs_weight(w: &Word, max_k: usize) -> Result<LcsWeight, QuotientError> {
    if max_k == 0 {
        return Err(QuotientError::InvalidDegree);
    }
    if w.is_identity() {
        return Ok(LcsWeight::Identity);
    }
    let s = magnus_series(w, max_k)?;
    Ok(match s.lowest_nontrivial_degree() {
        Some(d) => LcsWeight::Exact(d),
        None => LcsWeight::AtLeast(max_k + 1),
    })
}
