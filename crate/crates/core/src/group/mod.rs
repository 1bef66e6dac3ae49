//! Free groups: reduced words, the commutator and conjugation conventions
//! `[a,b] = a b a^-1 b^-1` and `a^b = b a b^-1`, and Fox calculus.

mod fox;
mod parse;
mod word;

pub use fox::{abelianize_derivative, abelianized_fox_derivative, fox_derivative, GroupRingElt};
pub use parse::{parse_word, parse_word_at, parse_word_inferring, ParseError};
pub use word::{verify_commutator_expansion, Alphabet, Gen, Letter, Word};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("words belong to different alphabets")]
    AlphabetMismatch,
    #[error("generator index {index} out of range for rank {rank}")]
    GeneratorOutOfRange { index: usize, rank: usize },
    #[error("unknown generator '{0}'")]
    UnknownGenerator(String),
    #[error("an alphabet needs at least one generator")]
    EmptyAlphabet,
    #[error("invalid generator name '{0}'")]
    InvalidName(String),
    #[error("duplicate generator name '{0}'")]
    DuplicateName(String),
}
