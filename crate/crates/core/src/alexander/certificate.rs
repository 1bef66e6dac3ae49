use serde::{Serialize, Serializer};

use super::{h1_rank_of_cover, AlexanderError, PhiMap, Presentation};

/// Citation strings attached to conclusions.
pub mod citations {
    pub const RANK_OBSTRUCTION: &str = "rank obstruction: if c(X, phi) >= 2 then rank H_1(X_phi) >= 1 over Z[t^{+-1}]";
    pub const METABELIAN_OBSTRUCTION: &str =
        "metabelian obstruction: an epimorphism onto F/F'' with F free of rank 2 forces a character with rank H_1(X_phi) >= 1";
    pub const CUT_NUMBER_BOUNDS: &str =
        "cut number bounds: 1 <= c(X) <= beta_1(X), c(X) = max over primitive phi of c(X, phi)";
    pub const TORSION_FAMILY: &str =
        "torsion Alexander family: M = (t^{n_N} - 1) I + (t - 1) S + (t - 1)^2 E with A(1) = n_N I + S(1) nonsingular";
    pub const LOWER_CENTRAL_F4: &str =
        "lower-central F4 obstruction: N/N' = Z[t^{+-1}]/J^3 for F/F_4 while every element of H_1(W_psi) is (t-1)-torsion";
}

/// A statement together with the result that licenses it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Conclusion {
    pub statement: String,
    pub citation: String,
}

impl Conclusion {
    pub fn new(statement: impl Into<String>, citation: &str) -> Self {
        Conclusion {
            statement: statement.into(),
            citation: citation.to_string(),
        }
    }
}

/// Evidence that a list of characters covers a whole family. Only the
/// symbolic family checks in this crate can produce one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyWitness {
    description: String,
}

impl FamilyWitness {
    pub(crate) fn new(description: impl Into<String>) -> Self {
        FamilyWitness {
            description: description.into(),
        }
    }

    pub fn description(&self) -> &str {
        &self.description
    }
}

impl Serialize for FamilyWitness {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.description)
    }
}

/// How the characters in a certificate were chosen.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SampleKind {
    /// Supplied by the caller.
    Explicit,
    /// Drawn by [`super::sample_phis`].
    Sampled { seed: u64 },
    /// Every primitive character is covered by a symbolic argument.
    ExhaustiveForFamily { witness: FamilyWitness },
}

impl SampleKind {
    pub fn is_exhaustive(&self) -> bool {
        matches!(self, SampleKind::ExhaustiveForFamily { .. })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PhiRank {
    pub phi: PhiMap,
    pub alexander_rank: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankCertificate {
    pub presentation_digest: String,
    pub generators: usize,
    pub relators: usize,
    pub sample: SampleKind,
    pub ranks: Vec<PhiRank>,
    pub conclusions: Vec<Conclusion>,
    pub caveats: Vec<String>,
}

impl RankCertificate {
    pub fn all_ranks_zero(&self) -> bool {
        self.ranks.iter().all(|r| r.alexander_rank == 0)
    }
}

/// Computes the cover rank for each character and records what follows.
///
/// A character with rank 0 has `c(X, φ) = 1`. The universal statements
/// (no epimorphism onto `F/F''`, `c(X) = 1`) are drawn only when every rank
/// is 0 and the sample is exhaustive for a family.
pub fn corank_obstruction(
    p: &Presentation,
    phis: &[PhiMap],
    sample: SampleKind,
) -> Result<RankCertificate, AlexanderError> {
    if phis.is_empty() {
        return Err(AlexanderError::EmptySample);
    }
    let ranks = phis
        .iter()
        .map(|phi| {
            Ok(PhiRank {
                phi: phi.clone(),
                alexander_rank: h1_rank_of_cover(p, phi)?,
            })
        })
        .collect::<Result<Vec<_>, AlexanderError>>()?;

    let mut conclusions: Vec<Conclusion> = ranks
        .iter()
        .filter(|r| r.alexander_rank == 0)
        .map(|r| {
            Conclusion::new(
                format!("c(X, phi) = 1 for phi = {}", r.phi),
                citations::RANK_OBSTRUCTION,
            )
        })
        .collect();
    let mut caveats = Vec::new();
    let all_zero = ranks.iter().all(|r| r.alexander_rank == 0);
    if all_zero && sample.is_exhaustive() {
        conclusions.push(Conclusion::new(
            "there is no epimorphism from pi_1(X) onto F/F'' with F free of rank 2",
            citations::METABELIAN_OBSTRUCTION,
        ));
        conclusions.push(Conclusion::new("c(X) = 1", citations::CUT_NUMBER_BOUNDS));
        caveats.push(
            "the universal conclusions rest on the family witness covering every primitive phi, not on the listed ranks alone"
                .to_string(),
        );
    } else if all_zero {
        caveats.push(
            "the characters are a finite sample, not every primitive class; c(X) = 1 is not concluded".to_string(),
        );
    }
    if !all_zero {
        caveats.push("some character has positive rank; the obstruction is silent for it".to_string());
    }

    Ok(RankCertificate {
        presentation_digest: p.digest(),
        generators: p.generator_count(),
        relators: p.relators().len(),
        sample,
        ranks,
        conclusions,
        caveats,
    })
}
