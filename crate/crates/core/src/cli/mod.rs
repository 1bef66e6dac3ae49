//! Command-line front end. [`run`] parses arguments, dispatches to the
//! library and returns the process exit code:
//!
//! - `0`: everything requested was computed and every check passed;
//! - `1`: usage, parse, or input-validation error;
//! - `2`: a check failed and the certificate was refused.
//!
//! Errors are reported on the error stream as a single JSON object
//! `{"error": {"code", "message", "exit_code"}}`.

mod output;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use thiserror::Error;

use crate::alexander::{
    corank_obstruction, sample_phis, AlexanderError, PhiMap, Presentation, RankCertificate, SampleKind,
};
use crate::group::{parse_word, parse_word_inferring, Alphabet, GroupError, ParseError, Word};
use crate::harvey::{
    f4_obstruction_certificate, family_rank_certificate, model_relation_matrix, nonsingularity_certificate,
    relation_matrix_mod_j2, symbolic_relation_matrix, HarveyCertificate, HarveyError, HarveyParams, PairIndex,
    F4_GUARD_DEGREE,
};
use crate::quotients::{equal_mod_second_derived, lcs_weight, magnus_series, QuotientError};

pub use output::{resolve_output_path, write_atomically, OUTPUT_DIR_VAR};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Io(String),
    #[error("{0}")]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Quotient(#[from] QuotientError),
    #[error(transparent)]
    Alexander(#[from] AlexanderError),
    #[error(transparent)]
    Harvey(#[from] HarveyError),
}

impl CliError {
    pub fn code(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Io(_) => "io_error",
            CliError::Parse(_) => "parse_error",
            CliError::Group(_) => "group_error",
            CliError::Quotient(_) => "quotient_error",
            CliError::Alexander(e) => e.code(),
            CliError::Harvey(e) => e.code(),
        }
    }

    /// Line and column of a syntax error, if this is one.
    pub fn location(&self) -> Option<(usize, usize)> {
        let p = match self {
            CliError::Parse(p)
            | CliError::Alexander(AlexanderError::Syntax(p))
            | CliError::Harvey(HarveyError::Parse(p))
            | CliError::Harvey(HarveyError::Alexander(AlexanderError::Syntax(p))) => p,
            _ => return None,
        };
        Some((p.line, p.column))
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Harvey(e) if e.is_refusal() => 2,
            _ => 1,
        }
    }
}

#[derive(Serialize)]
struct ErrorBody<'a> {
    code: &'a str,
    message: String,
    exit_code: i32,
    #[serde(skip_serializing_if = "Option::is_none")]
    line: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    column: Option<usize>,
}

#[derive(Serialize)]
struct ErrorObject<'a> {
    error: ErrorBody<'a>,
}

#[derive(Parser, Debug)]
#[command(
    name = "cutnum",
    version,
    about = "Exact Alexander-module and cut-number certificates"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Relation matrices and certificates for the torsion Alexander family.
    #[command(subcommand)]
    Harvey(HarveyCommand),
    /// Alexander-module ranks of finite presentations.
    #[command(subcommand)]
    Alex(AlexCommand),
    /// Identities in free groups and their quotients.
    #[command(subcommand)]
    Group(GroupCommand),
    /// Magnus expansions and lower central series weights.
    #[command(subcommand)]
    Magnus(MagnusCommand),
}

#[derive(Args, Debug)]
struct FamilyArgs {
    /// Number of generators (first Betti number).
    #[arg(long)]
    m: usize,
    /// Exponents n_1,..,n_m of the character.
    #[arg(long, value_parser = parse_int_list, allow_hyphen_values = true)]
    n: Option<IntList>,
    /// Distinguished index N with n_N != 0 (defaults to the first).
    #[arg(long = "N")]
    big_n: Option<usize>,
    /// Write JSON to this path ('-' for standard output).
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum HarveyCommand {
    /// Certify that the relation matrix is nonsingular.
    Certify {
        #[command(flatten)]
        family: FamilyArgs,
        /// Also certify every primitive character via the symbolic table.
        #[arg(long)]
        all_phi: bool,
        /// Characters sampled for the Fox-calculus cross-check with --all-phi.
        #[arg(long, default_value_t = 4)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Print the relation matrix: symbolic without --n, jets by default, or
    /// the full model matrix with --full.
    Matrix {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, conflicts_with = "jets")]
        full: bool,
        #[arg(long)]
        jets: bool,
    },
    /// Certify that there is no epimorphism onto F/F_4.
    F4 {
        #[command(flatten)]
        family: FamilyArgs,
    },
}

#[derive(Subcommand, Debug)]
enum AlexCommand {
    /// Rank of H_1 of the infinite cyclic cover for each character.
    Rank {
        /// Presentation file ("gens ..." then "rel <word>" lines).
        #[arg(long)]
        pres: PathBuf,
        /// Character exponents; may be repeated.
        #[arg(long, value_parser = parse_int_list, allow_hyphen_values = true)]
        phi: Vec<IntList>,
        /// Sample this many primitive consistent characters instead.
        #[arg(long, conflicts_with = "phi")]
        sample: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum GroupCommand {
    /// Decide whether two words are equal in a quotient of the free group.
    Check {
        #[arg(long)]
        lhs: String,
        #[arg(long, default_value = "1")]
        rhs: String,
        /// Generator names, comma or space separated (inferred if omitted).
        #[arg(long)]
        gens: Option<String>,
        /// free, metabelian, or nilpotent:K (the class-K quotient F/F_{K+1}).
        #[arg(long, default_value = "free")]
        modulo: String,
    },
}

#[derive(Subcommand, Debug)]
enum MagnusCommand {
    /// Lower central series weight of a word.
    Weight {
        #[arg(long)]
        word: String,
        #[arg(long)]
        gens: Option<String>,
        #[arg(long = "max-k", default_value_t = F4_GUARD_DEGREE)]
        max_k: usize,
    },
}

#[derive(Clone, Debug)]
struct IntList(Vec<i64>);

fn parse_int_list(s: &str) -> Result<IntList, String> {
    s.split(',')
        .map(|p| p.trim().parse::<i64>().map_err(|_| format!("'{p}' is not an integer")))
        .collect::<Result<Vec<_>, _>>()
        .map(IntList)
}

/// Runs the CLI on `args` (including the program name) and returns the exit
/// code.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return 0;
            }
            let msg = e.render().to_string();
            let first = msg
                .lines()
                .next()
                .unwrap_or("")
                .trim_start_matches("error: ")
                .to_string();
            return report(err, &CliError::Usage(first));
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => report(err, &e),
    }
}

fn report(err: &mut dyn Write, e: &CliError) -> i32 {
    let code = e.exit_code();
    let obj = ErrorObject {
        error: ErrorBody {
            code: e.code(),
            message: e.to_string(),
            exit_code: code,
            line: e.location().map(|l| l.0),
            column: e.location().map(|l| l.1),
        },
    };
    let _ = writeln!(err, "{}", serde_json::to_string(&obj).unwrap_or_default());
    code
}

fn io(e: std::io::Error) -> CliError {
    CliError::Io(e.to_string())
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> Result<i32, CliError> {
    match cmd {
        Command::Harvey(h) => harvey(h, out),
        Command::Alex(AlexCommand::Rank {
            pres,
            phi,
            sample,
            seed,
            json,
        }) => alex_rank(&pres, phi, sample, seed, json.as_deref(), out),
        Command::Group(GroupCommand::Check { lhs, rhs, gens, modulo }) => {
            group_check(&lhs, &rhs, gens.as_deref(), &modulo, out)
        }
        Command::Magnus(MagnusCommand::Weight { word, gens, max_k }) => {
            let w = parse_words(&[&word], gens.as_deref())?.remove(0);
            let weight = lcs_weight(&w, max_k)?;
            writeln!(out, "{weight}").map_err(io)?;
            Ok(0)
        }
    }
}

/// Emits JSON to a file or stdout; returns whether human output should follow.
fn emit_json<T: Serialize>(value: &T, json: Option<&Path>, out: &mut dyn Write) -> Result<bool, CliError> {
    match json {
        None => Ok(true),
        Some(p) if p == Path::new("-") => {
            write!(out, "{}", output::to_json(value)?).map_err(io)?;
            Ok(false)
        }
        Some(p) => {
            let written = write_atomically(p, &output::to_json(value)?)?;
            writeln!(out, "wrote {}", written.display()).map_err(io)?;
            Ok(true)
        }
    }
}

fn params_from(f: &FamilyArgs) -> Result<HarveyParams, CliError> {
    let n = f.n.as_ref().ok_or_else(|| CliError::Usage("--n is required".into()))?;
    Ok(HarveyParams::new(f.m, n.0.clone(), f.big_n)?)
}

fn print_certificate(cert: &HarveyCertificate, out: &mut dyn Write) -> std::io::Result<()> {
    let title = match cert.kind {
        crate::harvey::CertificateKind::Nonsingularity => "nonsingularity certificate",
        crate::harvey::CertificateKind::F4Obstruction => "F/F_4 obstruction certificate",
    };
    writeln!(out, "{title}")?;
    writeln!(out, "params: {}", cert.params)?;
    let pairs: Vec<String> = cert.pairs.iter().map(|(i, j)| format!("{i}{j}")).collect();
    writeln!(out, "pairs: {}", pairs.join(" "))?;
    writeln!(out, "A(1) =")?;
    write!(out, "{}", cert.a_at_one)?;
    writeln!(out, "det A(1) = {}", cert.det_a1)?;
    writeln!(out, "checks:")?;
    for c in &cert.checks {
        writeln!(out, "  {}: {}", c.name, if c.passed { "pass" } else { "FAIL" })?;
    }
    writeln!(out, "conclusions:")?;
    for c in &cert.conclusions {
        writeln!(out, "  - {} [{}]", c.statement, c.citation)?;
    }
    Ok(())
}

#[derive(Serialize)]
struct CertifyOutput<'a> {
    certificate: &'a HarveyCertificate,
    #[serde(skip_serializing_if = "Option::is_none")]
    family: Option<&'a RankCertificate>,
}

fn harvey(cmd: HarveyCommand, out: &mut dyn Write) -> Result<i32, CliError> {
    match cmd {
        HarveyCommand::Certify {
            family,
            all_phi,
            samples,
            seed,
        } => {
            let params = params_from(&family)?;
            let mut cert = nonsingularity_certificate(&params)?;
            let family_cert = if all_phi {
                cert.seed = Some(seed);
                Some(family_rank_certificate(params.m(), samples, seed)?)
            } else {
                None
            };
            let payload = CertifyOutput {
                certificate: &cert,
                family: family_cert.as_ref(),
            };
            if emit_json(&payload, family.json.as_deref(), out)? {
                print_certificate(&cert, out).map_err(io)?;
                if let Some(fc) = &family_cert {
                    writeln!(out, "all characters:").map_err(io)?;
                    for c in &fc.conclusions {
                        if !c.statement.starts_with("c(X, phi)") {
                            writeln!(out, "  - {} [{}]", c.statement, c.citation).map_err(io)?;
                        }
                    }
                    for c in &fc.caveats {
                        writeln!(out, "  caveat: {c}").map_err(io)?;
                    }
                }
            }
            Ok(0)
        }
        HarveyCommand::F4 { family } => {
            let params = params_from(&family)?;
            let cert = f4_obstruction_certificate(&params)?;
            if emit_json(&cert, family.json.as_deref(), out)? {
                print_certificate(&cert, out).map_err(io)?;
            }
            Ok(0)
        }
        HarveyCommand::Matrix { family, full, jets } => harvey_matrix(&family, full, jets, out),
    }
}

#[derive(Serialize)]
struct MatrixOutput<T: Serialize> {
    m: usize,
    #[serde(rename = "N")]
    big_n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    n: Option<Vec<i64>>,
    form: &'static str,
    pairs: Vec<(usize, usize)>,
    rows: Vec<Vec<T>>,
}

fn harvey_matrix(family: &FamilyArgs, full: bool, jets: bool, out: &mut dyn Write) -> Result<i32, CliError> {
    let pairs = PairIndex::new(family.m).pairs().to_vec();
    let header = |out: &mut dyn Write| -> Result<(), CliError> {
        let names: Vec<String> = pairs.iter().map(|(i, j)| format!("{i}{j}")).collect();
        writeln!(out, "pairs: {}", names.join(" ")).map_err(io)
    };
    match &family.n {
        None => {
            if full || jets {
                return Err(CliError::Usage("--full and --jets need --n".into()));
            }
            let big_n = family.big_n.unwrap_or(1);
            let table = symbolic_relation_matrix(family.m, big_n)?;
            let rows: Vec<Vec<String>> = table
                .row_vecs()
                .iter()
                .map(|r| r.iter().map(ToString::to_string).collect())
                .collect();
            let payload = MatrixOutput {
                m: family.m,
                big_n,
                n: None,
                form: "symbolic_mod_j2",
                pairs: pairs.clone(),
                rows,
            };
            if emit_json(&payload, family.json.as_deref(), out)? {
                writeln!(out, "M mod (t-1)^2, m = {}, N = {big_n}", family.m).map_err(io)?;
                header(out)?;
                write!(out, "{table}").map_err(io)?;
            }
        }
        Some(_) => {
            let params = params_from(family)?;
            if full {
                let model = model_relation_matrix(&params)?;
                let payload = MatrixOutput {
                    m: params.m(),
                    big_n: params.big_n(),
                    n: Some(params.n().to_vec()),
                    form: "full_model",
                    pairs: pairs.clone(),
                    rows: model.as_matrix().row_vecs(),
                };
                if emit_json(&payload, family.json.as_deref(), out)? {
                    writeln!(out, "M (trivial conjugators), {params}").map_err(io)?;
                    header(out)?;
                    write!(out, "{}", model.as_matrix()).map_err(io)?;
                }
            } else {
                let m = relation_matrix_mod_j2(&params)?;
                let payload = MatrixOutput {
                    m: params.m(),
                    big_n: params.big_n(),
                    n: Some(params.n().to_vec()),
                    form: "jets",
                    pairs: pairs.clone(),
                    rows: m.row_vecs(),
                };
                if emit_json(&payload, family.json.as_deref(), out)? {
                    writeln!(out, "M mod (t-1)^2 as (value, slope) at t = 1, {params}").map_err(io)?;
                    header(out)?;
                    write!(out, "{m}").map_err(io)?;
                }
            }
        }
    }
    Ok(0)
}

fn alex_rank(
    pres: &Path,
    phi: Vec<IntList>,
    sample: Option<usize>,
    seed: u64,
    json: Option<&Path>,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let text = std::fs::read_to_string(pres).map_err(|e| CliError::Io(format!("{}: {e}", pres.display())))?;
    let p = Presentation::parse(&text)?;
    let (phis, kind) = match sample {
        Some(k) => (sample_phis(&p, k, seed)?, SampleKind::Sampled { seed }),
        None => {
            if phi.is_empty() {
                return Err(CliError::Usage("give --phi or --sample".into()));
            }
            let phis = phi
                .into_iter()
                .map(|v| PhiMap::for_presentation(v.0, &p))
                .collect::<Result<Vec<_>, _>>()?;
            (phis, SampleKind::Explicit)
        }
    };
    let cert = corank_obstruction(&p, &phis, kind)?;
    if emit_json(&cert, json, out)? {
        for r in &cert.ranks {
            writeln!(out, "phi = {}: rank {}", r.phi, r.alexander_rank).map_err(io)?;
        }
        for c in &cert.conclusions {
            writeln!(out, "  - {} [{}]", c.statement, c.citation).map_err(io)?;
        }
        for c in &cert.caveats {
            writeln!(out, "  caveat: {c}").map_err(io)?;
        }
    }
    Ok(0)
}

fn split_names(s: &str) -> Vec<&str> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|p| !p.is_empty())
        .collect()
}

/// Parses words over `gens`, or over the generators they mention in order of
/// first appearance.
fn parse_words(texts: &[&str], gens: Option<&str>) -> Result<Vec<Word>, CliError> {
    let alphabet: Arc<Alphabet> = match gens {
        Some(g) => Alphabet::new(split_names(g))?,
        None => {
            let mut names: Vec<String> = Vec::new();
            for t in texts {
                let w = parse_word_inferring(t)?;
                for n in w.alphabet().names() {
                    if !names.contains(n) && t.contains(n.as_str()) {
                        names.push(n.clone());
                    }
                }
            }
            if names.is_empty() {
                names.push("x".into());
            }
            Alphabet::new(names)?
        }
    };
    Ok(texts
        .iter()
        .map(|t| parse_word(t, &alphabet))
        .collect::<Result<Vec<_>, _>>()?)
}

fn group_check(lhs: &str, rhs: &str, gens: Option<&str>, modulo: &str, out: &mut dyn Write) -> Result<i32, CliError> {
    let words = parse_words(&[lhs, rhs], gens)?;
    let (u, v) = (&words[0], &words[1]);
    let equal = match modulo {
        "free" => u == v,
        "metabelian" => equal_mod_second_derived(u, v)?,
        other => {
            let class = other
                .strip_prefix("nilpotent:")
                .and_then(|k| k.parse::<usize>().ok())
                .filter(|&k| k >= 1)
                .ok_or_else(|| CliError::Usage(format!("unknown quotient '{other}'")))?;
            let diff = u.mul(&v.inv())?;
            magnus_series(&diff, class)?.is_one()
        }
    };
    writeln!(out, "{equal}").map_err(io)?;
    Ok(if equal { 0 } else { 2 })
}
