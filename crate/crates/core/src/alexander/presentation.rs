use std::fmt;
use std::sync::Arc;

use num_integer::Integer;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::group::{parse_word_at, Alphabet, ParseError, Word};

use super::AlexanderError;

/// A finite presentation `⟨x_1, …, x_g | r_1, …, r_k⟩`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    alphabet: Arc<Alphabet>,
    relators: Vec<Word>,
}

impl Presentation {
    pub fn new(alphabet: Arc<Alphabet>, relators: Vec<Word>) -> Result<Self, AlexanderError> {
        if relators.iter().any(|r| r.alphabet() != &alphabet) {
            return Err(crate::group::GroupError::AlphabetMismatch.into());
        }
        Ok(Presentation { alphabet, relators })
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn generator_count(&self) -> usize {
        self.alphabet.rank()
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    /// Adds a relator (a Tietze move when it is a consequence of the others).
    pub fn with_relator(&self, r: Word) -> Result<Self, AlexanderError> {
        let mut relators = self.relators.clone();
        relators.push(r);
        Presentation::new(self.alphabet.clone(), relators)
    }

    /// The text form accepted by [`Presentation::parse`].
    pub fn canonical_text(&self) -> String {
        let mut s = format!("gens {}\n", self.alphabet.names().join(" "));
        for r in &self.relators {
            s.push_str(&format!("rel {r}\n"));
        }
        s
    }

    /// Hex SHA-256 of the canonical text.
    pub fn digest(&self) -> String {
        hex::encode(Sha256::digest(self.canonical_text().as_bytes()))
    }

    /// Parses the line format
    ///
    /// ```text
    /// # comment
    /// gens x y z
    /// rel [x,y]
    /// rel [y,z]
    /// ```
    pub fn parse(text: &str) -> Result<Self, AlexanderError> {
        let err = |line: usize, column: usize, message: String| ParseError { line, column, message };
        let mut alphabet: Option<Arc<Alphabet>> = None;
        let mut relators = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let content = raw.split('#').next().unwrap_or("");
            let trimmed = content.trim_start();
            if trimmed.trim().is_empty() {
                continue;
            }
            let indent = content.len() - trimmed.len();
            let (keyword, rest) = match trimmed.find(char::is_whitespace) {
                Some(p) => (&trimmed[..p], &trimmed[p..]),
                None => (trimmed.trim_end(), ""),
            };
            let rest_col = indent + keyword.len() + 1;
            match keyword {
                "gens" => {
                    if alphabet.is_some() {
                        return Err(err(line_no, indent + 1, "duplicate 'gens' line".into()).into());
                    }
                    let names: Vec<&str> = rest.split_whitespace().collect();
                    if names.is_empty() {
                        return Err(err(line_no, rest_col, "'gens' needs at least one generator".into()).into());
                    }
                    alphabet =
                        Some(Alphabet::new(names.iter().copied()).map_err(|e| err(line_no, rest_col, e.to_string()))?);
                }
                "rel" => {
                    let Some(al) = &alphabet else {
                        return Err(err(line_no, indent + 1, "'rel' before 'gens'".into()).into());
                    };
                    let w = parse_word_at(rest, al, line_no).map_err(|mut e| {
                        if e.line == line_no {
                            e.column += rest_col - 1;
                        }
                        e
                    })?;
                    relators.push(w);
                }
                other => {
                    return Err(err(line_no, indent + 1, format!("unknown keyword '{other}'")).into());
                }
            }
        }
        let alphabet = alphabet.ok_or_else(|| err(1, 1, "empty presentation: missing 'gens' line".into()))?;
        Presentation::new(alphabet, relators)
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{} | ", self.alphabet.names().join(", "))?;
        let rels: Vec<String> = self.relators.iter().map(ToString::to_string).collect();
        write!(f, "{}>", rels.join(", "))
    }
}

/// A primitive character `x_i ↦ t^{n_i}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct PhiMap {
    n: Vec<i64>,
}

impl PhiMap {
    /// Checks primitivity only. Non-primitive vectors are rejected, never
    /// divided through.
    pub fn new(n: Vec<i64>) -> Result<Self, AlexanderError> {
        let g = n.iter().fold(0i64, |acc, &k| acc.gcd(&k));
        if g != 1 {
            return Err(AlexanderError::NonPrimitive(n));
        }
        Ok(PhiMap { n })
    }

    /// Checks primitivity, length, and that every relator has exponent sum 0.
    pub fn for_presentation(n: Vec<i64>, p: &Presentation) -> Result<Self, AlexanderError> {
        let phi = Self::new(n)?;
        phi.validate(p)?;
        Ok(phi)
    }

    pub fn validate(&self, p: &Presentation) -> Result<(), AlexanderError> {
        if self.n.len() != p.generator_count() {
            return Err(AlexanderError::LengthMismatch {
                expected: p.generator_count(),
                found: self.n.len(),
            });
        }
        for (idx, r) in p.relators().iter().enumerate() {
            let sum: i64 = r.exponent_sums().iter().zip(&self.n).map(|(a, b)| a * b).sum();
            if sum != 0 {
                return Err(AlexanderError::Inconsistent { relator: idx, sum });
            }
        }
        Ok(())
    }

    pub fn exponents(&self) -> &[i64] {
        &self.n
    }

    pub fn negate(&self) -> PhiMap {
        PhiMap {
            n: self.n.iter().map(|k| -k).collect(),
        }
    }
}

impl fmt::Display for PhiMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.n.iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const TORUS: &str = "# three-torus\ngens x y z\nrel [x,y]\nrel [y,z]\nrel [x,z]\n";

    #[test]
    fn parses_torus() {
        let p = Presentation::parse(TORUS).unwrap();
        assert_eq!(p.generator_count(), 3);
        assert_eq!(p.relators().len(), 3);
        assert_eq!(Presentation::parse(&p.canonical_text()).unwrap(), p);
        assert_eq!(p.digest().len(), 64);
    }

    #[test]
    fn parse_errors() {
        let e = Presentation::parse("gens x y\nrel x q\n").unwrap_err();
        match e {
            AlexanderError::Syntax(pe) => assert_eq!((pe.line, pe.column), (2, 7)),
            other => panic!("{other:?}"),
        }
        assert!(Presentation::parse("gens x\ngens y\n").is_err());
        assert!(Presentation::parse("# nothing\n\n").is_err());
        assert!(Presentation::parse("rel x\ngens x\n").is_err());
        assert!(Presentation::parse("gens x x\n").is_err());
        assert!(Presentation::parse("gens x y\nrel [x,y\n").is_err());
        assert!(Presentation::parse("gens x\nrelator x\n").is_err());
    }

    #[test]
    fn phi_validation() {
        let p = Presentation::parse(TORUS).unwrap();
        assert!(PhiMap::for_presentation(vec![1, 0, 0], &p).is_ok());
        assert!(matches!(
            PhiMap::for_presentation(vec![2, 2, 0], &p),
            Err(AlexanderError::NonPrimitive(_))
        ));
        assert!(matches!(
            PhiMap::for_presentation(vec![1, 0], &p),
            Err(AlexanderError::LengthMismatch { .. })
        ));
        let q = Presentation::parse("gens x y\nrel x y^-2").unwrap();
        assert!(matches!(
            PhiMap::for_presentation(vec![1, 0], &q),
            Err(AlexanderError::Inconsistent { relator: 0, sum: 1 })
        ));
        assert!(PhiMap::for_presentation(vec![2, 1], &q).is_ok());
        assert!(PhiMap::new(vec![0, 0]).is_err());
    }
}
