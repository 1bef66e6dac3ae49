//! Alexander matrices of finite presentations, ranks of infinite cyclic
//! covers, and the corank obstruction certificates built on them.
//!
//! For a presentation with `g` generators and a primitive character
//! `φ: x_i ↦ t^{n_i}`, the rank of `H_1` of the infinite cyclic cover over
//! `Z[t^{±1}]` is `(g - 1) - rank M_φ`, where `M_φ` is the abelianized Fox
//! matrix specialized along `φ`.

mod certificate;
mod cover;
mod presentation;
mod sample;

pub use certificate::{citations, corank_obstruction, Conclusion, FamilyWitness, PhiRank, RankCertificate, SampleKind};
pub use cover::{alexander_matrix, fundamental_identity_check, h1_rank_of_cover, specialized_matrix};
pub use presentation::{PhiMap, Presentation};
pub use sample::{integer_kernel, sample_phis};

use thiserror::Error;

use crate::group::{GroupError, ParseError};
use crate::ring::RingError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlexanderError {
    #[error("{0}")]
    Syntax(#[from] ParseError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("phi = {0:?} is not primitive")]
    NonPrimitive(Vec<i64>),
    #[error("phi is not a homomorphism: relator {relator} has exponent sum {sum}")]
    Inconsistent { relator: usize, sum: i64 },
    #[error("phi has {found} entries but the presentation has {expected} generators")]
    LengthMismatch { expected: usize, found: usize },
    #[error("no characters to test")]
    EmptySample,
    #[error("the presentation admits no surjection onto the integers")]
    NoCharacters,
    #[error("specialized Fox matrix has rank {rank}, above the bound {bound}")]
    RankBound { rank: usize, bound: usize },
}

impl AlexanderError {
    /// Stable machine-readable code.
    pub fn code(&self) -> &'static str {
        match self {
            AlexanderError::Syntax(_) => "parse_error",
            AlexanderError::Group(_) => "group_error",
            AlexanderError::Ring(_) => "ring_error",
            AlexanderError::NonPrimitive(_) => "phi_not_primitive",
            AlexanderError::Inconsistent { .. } => "phi_inconsistent",
            AlexanderError::LengthMismatch { .. } => "phi_length_mismatch",
            AlexanderError::EmptySample => "empty_sample",
            AlexanderError::NoCharacters => "no_characters",
            AlexanderError::RankBound { .. } => "rank_bound_violated",
        }
    }
}
