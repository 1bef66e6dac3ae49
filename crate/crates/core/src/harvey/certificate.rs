use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Serialize, Serializer};

use crate::alexander::{
    citations, corank_obstruction, fundamental_identity_check, sample_phis, Conclusion, FamilyWitness, RankCertificate,
    SampleKind,
};
use crate::group::{parse_word, Alphabet};
use crate::quotients::{free_nilpotent_alexander, lcs_weight, LcsWeight, NilpotentAlexanderModule};
use crate::ring::{IntMatrix, JetAtOne, Matrix};

use super::model::{model_group_presentation, model_relation_matrix};
use super::table::{a_at_one, quadratic_form_check, relation_matrix_mod_j2, s_at_one, symbolic_structure_holds};
use super::{verify_decomposition, HarveyError, HarveyParams, PairIndex};

/// Truncation degree for lower-central work on `F/F_4`: degree 3 plus one
/// guard degree.
pub const F4_GUARD_DEGREE: usize = 4;

pub const TOOL_VERSION: &str = concat!(env!("CARGO_PKG_NAME"), " ", env!("CARGO_PKG_VERSION"));

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CertificateKind {
    Nonsingularity,
    F4Obstruction,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NamedCheck {
    pub name: String,
    pub passed: bool,
}

fn ser_int_matrix<S: Serializer>(m: &IntMatrix, s: S) -> Result<S::Ok, S::Error> {
    let rows: Vec<Vec<String>> = (0..m.rows())
        .map(|r| m.row(r).iter().map(ToString::to_string).collect())
        .collect();
    rows.serialize(s)
}

fn ser_jet_matrix<S: Serializer>(m: &Matrix<JetAtOne>, s: S) -> Result<S::Ok, S::Error> {
    m.row_vecs().serialize(s)
}

fn ser_bigint<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

/// A verified record that `M` is nonsingular for one family member, with
/// the facts it rests on and what they imply.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HarveyCertificate {
    pub kind: CertificateKind,
    pub tool_version: String,
    pub params: HarveyParams,
    pub pairs: Vec<(usize, usize)>,
    #[serde(serialize_with = "ser_jet_matrix")]
    pub matrix_mod_j2: Matrix<JetAtOne>,
    #[serde(serialize_with = "ser_int_matrix")]
    pub s_at_one: IntMatrix,
    #[serde(serialize_with = "ser_int_matrix")]
    pub a_at_one: IntMatrix,
    #[serde(rename = "detA1", serialize_with = "ser_bigint")]
    pub det_a1: BigInt,
    pub checks: Vec<NamedCheck>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nilpotent_module: Option<NilpotentAlexanderModule>,
    pub conclusions: Vec<Conclusion>,
    pub seed: Option<u64>,
}

impl HarveyCertificate {
    pub fn check(&self, name: &str) -> Option<bool> {
        self.checks.iter().find(|c| c.name == name).map(|c| c.passed)
    }
}

struct Recorder(Vec<NamedCheck>);

impl Recorder {
    fn require(&mut self, name: &str, passed: bool) -> Result<(), HarveyError> {
        self.0.push(NamedCheck {
            name: name.to_string(),
            passed,
        });
        if passed {
            Ok(())
        } else {
            Err(HarveyError::CheckFailed(name.to_string()))
        }
    }
}

/// Runs every check and builds the certificate for `params`.
pub fn nonsingularity_certificate(params: &HarveyParams) -> Result<HarveyCertificate, HarveyError> {
    let jets = relation_matrix_mod_j2(params)?;
    nonsingularity_certificate_from_parts(params, jets, None)
}

/// As [`nonsingularity_certificate`], starting from a supplied `M mod J^2`
/// and optionally a supplied `A(1)`. Every check is rerun on the inputs, so
/// a tampered matrix is refused.
pub fn nonsingularity_certificate_from_parts(
    params: &HarveyParams,
    jets: Matrix<JetAtOne>,
    a1_override: Option<IntMatrix>,
) -> Result<HarveyCertificate, HarveyError> {
    let mut rec = Recorder(Vec::new());
    let dec = verify_decomposition(&jets, params);
    rec.require("diagonal", dec.diagonal)?;
    rec.require("off_diagonal_in_j", dec.off_diagonal_in_j)?;
    rec.require("skew_symmetry", dec.skew_symmetry)?;

    let derived = a_at_one(&jets, params)?;
    let a1 = a1_override.unwrap_or_else(|| derived.clone());
    rec.require("quadratic_form", quadratic_form_check(&a1, params))?;
    let det = a1.det()?;
    rec.require("determinant_nonzero", !det.is_zero())?;
    rec.require("a_at_one_matches_matrix", a1 == derived)?;
    let model = model_relation_matrix(params)?.jets()?;
    rec.require("model_agreement", model == jets)?;

    let m = params.m();
    let conclusions = vec![
        Conclusion::new("M is nonsingular over Q(t)", citations::TORSION_FAMILY),
        Conclusion::new(
            "each mu_ij is Z[t^{+-1}]-torsion in H_1(X_phi)",
            citations::TORSION_FAMILY,
        ),
        Conclusion::new(
            format!(
                "rank H_1(X_phi) = 0 over Z[t^{{+-1}}], using H_1(W_psi) = Z^{} with trivial t-action",
                m - 1
            ),
            citations::TORSION_FAMILY,
        ),
        Conclusion::new(
            format!("c(X, phi) = 1 for phi = n = {:?}", params.n()),
            citations::RANK_OBSTRUCTION,
        ),
    ];
    Ok(HarveyCertificate {
        kind: CertificateKind::Nonsingularity,
        tool_version: TOOL_VERSION.to_string(),
        params: params.clone(),
        pairs: PairIndex::new(m).pairs().to_vec(),
        s_at_one: s_at_one(&a1, params),
        matrix_mod_j2: jets,
        a_at_one: a1,
        det_a1: det,
        checks: rec.0,
        nilpotent_module: None,
        conclusions,
        seed: None,
    })
}

/// Certificate that the family member admits no epimorphism onto `F/F_4`.
pub fn f4_obstruction_certificate(params: &HarveyParams) -> Result<HarveyCertificate, HarveyError> {
    let jets = relation_matrix_mod_j2(params)?;
    f4_obstruction_certificate_from_parts(params, jets, None)
}

/// As [`f4_obstruction_certificate`] from supplied parts, for fault injection.
pub fn f4_obstruction_certificate_from_parts(
    params: &HarveyParams,
    jets: Matrix<JetAtOne>,
    a1_override: Option<IntMatrix>,
) -> Result<HarveyCertificate, HarveyError> {
    let mut cert = nonsingularity_certificate_from_parts(params, jets, a1_override)?;
    cert.kind = CertificateKind::F4Obstruction;
    let mut rec = Recorder(std::mem::take(&mut cert.checks));

    let module = free_nilpotent_alexander(2, 3, &[1, 0])?;
    let expected = NilpotentAlexanderModule {
        additive_rank: 3,
        annihilator_exponent: 3,
        cyclic: true,
    };
    rec.require("nilpotent_module_is_quotient_by_j_cubed", module == expected)?;
    let al = Alphabet::new(["x", "y"])?;
    let weight = lcs_weight(&parse_word("[x,[x,[x,y]]]", &al)?, F4_GUARD_DEGREE)?;
    rec.require("basic_commutator_weight_four", weight == LcsWeight::Exact(4))?;

    let mut conclusions = vec![Conclusion::new(
        "N/N' = Z[t^{+-1}]/J^3 for F/F_4 with x -> t, y -> 1 (additive rank 3, annihilated by J^3, cyclic)",
        citations::LOWER_CENTRAL_F4,
    )];
    if params.m() < 2 {
        conclusions.push(Conclusion::new(
            "beta_1(X) = 1 < 2, so pi_1(X) cannot surject onto a group with rank-2 abelianization",
            citations::CUT_NUMBER_BOUNDS,
        ));
    }
    conclusions.push(Conclusion::new(
        "there is no epimorphism from pi_1(X) onto F/F_4 with F free of rank 2",
        citations::LOWER_CENTRAL_F4,
    ));
    cert.checks = rec.0;
    cert.nilpotent_module = Some(module);
    cert.conclusions = conclusions;
    Ok(cert)
}

/// Checks the case table symbolically for every choice of `N`. Since every
/// primitive `n` has some `n_N ≠ 0`, this covers every primitive character.
pub fn all_phi_witness(m: usize) -> Result<FamilyWitness, HarveyError> {
    for big_n in 1..=m {
        if !symbolic_structure_holds(m, big_n)? {
            return Err(HarveyError::CheckFailed(format!("symbolic_structure_N{big_n}")));
        }
    }
    Ok(FamilyWitness::new(format!(
        "for every N in 1..={m} the mod J^2 relation matrix is (t^{{n_N}}-1) I + (t-1) S with S skew, so A(1) = n_N I + S(1) is nonsingular whenever n_N != 0"
    )))
}

/// Rank certificate for the trivial-conjugator model presentation, marked
/// exhaustive by the symbolic family check. The listed characters are a
/// seeded sample on which the Fox-calculus ranks are also computed.
pub fn family_rank_certificate(m: usize, samples: usize, seed: u64) -> Result<RankCertificate, HarveyError> {
    let witness = all_phi_witness(m)?;
    let p = model_group_presentation(m)?;
    let phis = sample_phis(&p, samples.max(1), seed)?;
    for phi in &phis {
        if !fundamental_identity_check(&p, phi)? {
            return Err(HarveyError::CheckFailed("fundamental_identity".into()));
        }
    }
    let cert = corank_obstruction(&p, &phis, SampleKind::ExhaustiveForFamily { witness })?;
    if !cert.all_ranks_zero() {
        return Err(HarveyError::CheckFailed("fox_pipeline_rank_zero".into()));
    }
    Ok(cert)
}
