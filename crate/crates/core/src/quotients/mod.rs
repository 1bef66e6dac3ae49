//! Quotients of free groups: the free metabelian group via the Magnus
//! embedding, lower central series weights via truncated Magnus series, and
//! the Alexander module of a free nilpotent group.

mod magnus;
mod metabelian;
mod nilpotent;

pub use magnus::{lcs_weight, magnus_series, LcsWeight, MagnusSeries, NcMonomial};
pub use metabelian::{equal_mod_second_derived, magnus_image, verify_jacobi, MetabelianImage};
pub use nilpotent::{free_nilpotent_alexander, NilpotentAlexanderModule, MAX_SUPPORTED_CLASS};

use thiserror::Error;

use crate::group::GroupError;
use crate::ring::RingError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuotientError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("truncation degree must be positive")]
    InvalidDegree,
    #[error("bad indices: {0}")]
    BadIndices(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("could not certify: {0}")]
    Uncertified(String),
}
