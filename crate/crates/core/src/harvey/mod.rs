//! The relation matrices of the torsion Alexander family: for `β_1 = m`
//! and a primitive character `x_i ↦ t^{n_i}`, the `C(m,2)`-square matrix
//! `M = (t^{n_N} - 1) I + (t - 1) S + (t - 1)^2 E` with `S` skew, its
//! nonsingularity via `A(1) = n_N I + S(1)`, and the certificates built on it.

mod certificate;
mod model;
mod params;
mod table;

pub use certificate::{
    all_phi_witness, f4_obstruction_certificate, f4_obstruction_certificate_from_parts, family_rank_certificate,
    nonsingularity_certificate, nonsingularity_certificate_from_parts, CertificateKind, HarveyCertificate, NamedCheck,
    F4_GUARD_DEGREE, TOOL_VERSION,
};
pub use model::{
    freerel_chain, model_group_presentation, model_relation_matrix, verify_freerel, verify_muij2_reduction,
    FreerelConjugators,
};
pub use params::{HarveyParams, PairIndex};
pub use table::{
    a_at_one, case_table_polynomials, quadratic_form_check, relation_matrix_mod_j2, s_at_one, symbolic_relation_matrix,
    symbolic_structure_holds, verify_decomposition, CaseEntry, DecompositionChecks,
};

use thiserror::Error;

use crate::alexander::AlexanderError;
use crate::group::{GroupError, ParseError};
use crate::quotients::QuotientError;
use crate::ring::RingError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HarveyError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("n = {0:?} is not primitive")]
    NonPrimitive(Vec<i64>),
    #[error("bad indices: {0}")]
    BadIndices(String),
    #[error("{0} is not in the commutator subgroup")]
    NotInCommutatorSubgroup(String),
    #[error("check failed: {0}")]
    CheckFailed(String),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Quotient(#[from] QuotientError),
    #[error(transparent)]
    Alexander(#[from] AlexanderError),
}

impl HarveyError {
    /// Whether the error is a mathematical refusal rather than bad input.
    pub fn is_refusal(&self) -> bool {
        matches!(self, HarveyError::CheckFailed(_))
    }

    /// Stable machine-readable code.
    pub fn code(&self) -> &'static str {
        match self {
            HarveyError::InvalidParams(_) => "invalid_params",
            HarveyError::NonPrimitive(_) => "phi_not_primitive",
            HarveyError::BadIndices(_) => "bad_indices",
            HarveyError::NotInCommutatorSubgroup(_) => "not_in_commutator_subgroup",
            HarveyError::CheckFailed(_) => "check_failed",
            HarveyError::Ring(_) => "ring_error",
            HarveyError::Group(_) => "group_error",
            HarveyError::Parse(_) => "parse_error",
            HarveyError::Quotient(_) => "quotient_error",
            HarveyError::Alexander(e) => e.code(),
        }
    }
}
