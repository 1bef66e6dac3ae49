use std::fmt;
use std::sync::Arc;

use super::GroupError;

/// Generator names of a free group. Words remember the alphabet they were
/// built over, and operations on words from different alphabets fail.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Alphabet {
    names: Vec<String>,
}

/// Index of a generator within its alphabet.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Gen(pub usize);

impl Alphabet {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Arc<Self>, GroupError> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(GroupError::EmptyAlphabet);
        }
        for (i, n) in names.iter().enumerate() {
            if !is_identifier(n) {
                return Err(GroupError::InvalidName(n.clone()));
            }
            if names[..i].contains(n) {
                return Err(GroupError::DuplicateName(n.clone()));
            }
        }
        Ok(Arc::new(Alphabet { names }))
    }

    /// `prefix1, …, prefix{m}`.
    pub fn indexed(prefix: &str, m: usize) -> Result<Arc<Self>, GroupError> {
        Self::new((1..=m).map(|i| format!("{prefix}{i}")))
    }

    pub fn rank(&self) -> usize {
        self.names.len()
    }

    pub fn name(&self, g: Gen) -> &str {
        &self.names[g.0]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<Gen> {
        self.names.iter().position(|n| n == name).map(Gen)
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// A generator or its inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub gen: Gen,
    pub inverse: bool,
}

impl Letter {
    pub fn new(gen: Gen, inverse: bool) -> Self {
        Letter { gen, inverse }
    }

    pub fn inv(self) -> Self {
        Letter {
            gen: self.gen,
            inverse: !self.inverse,
        }
    }

    pub fn sign(self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }
}

/// Appends `l` to a reduced letter sequence, cancelling if possible.
pub(crate) fn push_reduced(letters: &mut Vec<Letter>, l: Letter) {
    if letters.last() == Some(&l.inv()) {
        letters.pop();
    } else {
        letters.push(l);
    }
}

/// A freely reduced word in the free group on an [`Alphabet`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Word {
    alphabet: Arc<Alphabet>,
    letters: Vec<Letter>,
}

impl Word {
    pub fn identity(alphabet: &Arc<Alphabet>) -> Self {
        Word {
            alphabet: alphabet.clone(),
            letters: Vec::new(),
        }
    }

    pub fn generator(alphabet: &Arc<Alphabet>, g: usize) -> Result<Self, GroupError> {
        Self::from_letters(alphabet, [Letter::new(Gen(g), false)])
    }

    /// Generator by name.
    pub fn named(alphabet: &Arc<Alphabet>, name: &str) -> Result<Self, GroupError> {
        let g = alphabet
            .index_of(name)
            .ok_or_else(|| GroupError::UnknownGenerator(name.to_string()))?;
        Self::generator(alphabet, g.0)
    }

    /// Freely reduces an arbitrary letter sequence.
    pub fn from_letters(
        alphabet: &Arc<Alphabet>,
        letters: impl IntoIterator<Item = Letter>,
    ) -> Result<Self, GroupError> {
        let mut out = Vec::new();
        for l in letters {
            if l.gen.0 >= alphabet.rank() {
                return Err(GroupError::GeneratorOutOfRange {
                    index: l.gen.0,
                    rank: alphabet.rank(),
                });
            }
            push_reduced(&mut out, l);
        }
        Ok(Word {
            alphabet: alphabet.clone(),
            letters: out,
        })
    }

    /// Builds a word from signed 1-based generator indices, `-2` meaning `x_2^{-1}`.
    pub fn from_signed(alphabet: &Arc<Alphabet>, signed: &[i64]) -> Result<Self, GroupError> {
        let letters = signed
            .iter()
            .map(|&s| {
                if s == 0 {
                    Err(GroupError::GeneratorOutOfRange {
                        index: 0,
                        rank: alphabet.rank(),
                    })
                } else {
                    Ok(Letter::new(Gen(s.unsigned_abs() as usize - 1), s < 0))
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_letters(alphabet, letters)
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    fn same_alphabet(&self, other: &Word) -> Result<(), GroupError> {
        if Arc::ptr_eq(&self.alphabet, &other.alphabet) || self.alphabet == other.alphabet {
            Ok(())
        } else {
            Err(GroupError::AlphabetMismatch)
        }
    }

    /// Reduced concatenation `self · other`.
    pub fn mul(&self, other: &Word) -> Result<Word, GroupError> {
        self.same_alphabet(other)?;
        let mut letters = self.letters.clone();
        for &l in &other.letters {
            push_reduced(&mut letters, l);
        }
        Ok(Word {
            alphabet: self.alphabet.clone(),
            letters,
        })
    }

    pub fn inv(&self) -> Word {
        Word {
            alphabet: self.alphabet.clone(),
            letters: self.letters.iter().rev().map(|l| l.inv()).collect(),
        }
    }

    pub fn pow(&self, k: i64) -> Word {
        let base = if k < 0 { self.inv() } else { self.clone() };
        let mut out = Word::identity(&self.alphabet);
        for _ in 0..k.unsigned_abs() {
            out = out.mul(&base).expect("same alphabet");
        }
        out
    }

    /// `[a,b] = a b a^{-1} b^{-1}`.
    pub fn commutator(a: &Word, b: &Word) -> Result<Word, GroupError> {
        a.mul(b)?.mul(&a.inv())?.mul(&b.inv())
    }

    /// `a^b = b a b^{-1}`; the conjugator acts on the left.
    pub fn conjugate(a: &Word, b: &Word) -> Result<Word, GroupError> {
        b.mul(a)?.mul(&b.inv())
    }

    /// Image in the abelianization `Z^m`.
    pub fn exponent_sums(&self) -> Vec<i64> {
        let mut v = vec![0; self.alphabet.rank()];
        for l in &self.letters {
            v[l.gen.0] += l.sign();
        }
        v
    }

    /// Whether the word lies in the commutator subgroup.
    pub fn in_commutator_subgroup(&self) -> bool {
        self.exponent_sums().iter().all(|&k| k == 0)
    }

    /// Relabels generators into another alphabet via `map[old] = new`.
    pub fn relabel(&self, target: &Arc<Alphabet>, map: &[usize]) -> Result<Word, GroupError> {
        Word::from_letters(
            target,
            self.letters.iter().map(|l| Letter::new(Gen(map[l.gen.0]), l.inverse)),
        )
    }
}

/// Writes runs of equal letters as powers: `x^2 y^-1 x`. The identity is `1`.
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        let mut i = 0;
        let mut first = true;
        while i < self.letters.len() {
            let l = self.letters[i];
            let mut run = 1;
            while i + run < self.letters.len() && self.letters[i + run] == l {
                run += 1;
            }
            if !first {
                write!(f, " ")?;
            }
            first = false;
            let exp = run as i64 * l.sign();
            write!(f, "{}", self.alphabet.name(l.gen))?;
            if exp != 1 {
                write!(f, "^{exp}")?;
            }
            i += run;
        }
        Ok(())
    }
}

/// `[a, bc] = [a, b] [a, c]^b`, checked letter for letter in the free group.
pub fn verify_commutator_expansion(a: &Word, b: &Word, c: &Word) -> Result<bool, GroupError> {
    let lhs = Word::commutator(a, &b.mul(c)?)?;
    let rhs = Word::commutator(a, b)?.mul(&Word::conjugate(&Word::commutator(a, c)?, b)?)?;
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn abc() -> (Arc<Alphabet>, Word, Word, Word) {
        let al = Alphabet::new(["x", "y", "z"]).unwrap();
        let x = Word::named(&al, "x").unwrap();
        let y = Word::named(&al, "y").unwrap();
        let z = Word::named(&al, "z").unwrap();
        (al, x, y, z)
    }

    #[test]
    fn multiplication_and_inverse() {
        let (_, x, y, z) = abc();
        assert!(x.mul(&x.inv()).unwrap().is_identity());
        let xy = x.mul(&y).unwrap();
        assert_eq!(xy.inv().to_string(), "y^-1 x^-1");
        let yiz = y.inv().mul(&z).unwrap();
        assert_eq!(xy.mul(&yiz).unwrap(), x.mul(&z).unwrap());
    }

    #[test]
    fn commutator_examples() {
        let (al, x, y, _) = abc();
        assert!(Word::commutator(&x, &x).unwrap().is_identity());
        assert_eq!(Word::commutator(&x, &y).unwrap().to_string(), "x y x^-1 y^-1");
        let e = Word::identity(&al);
        assert!(Word::commutator(&e, &y).unwrap().is_identity());
    }

    #[test]
    fn conjugation_examples() {
        let (al, x, y, _) = abc();
        let e = Word::identity(&al);
        assert_eq!(Word::conjugate(&x, &e).unwrap(), x);
        assert_eq!(Word::conjugate(&x, &y).unwrap().to_string(), "y x y^-1");
        // x [x,y] x^-1 = x x y x^-1 y^-1 x^-1
        let c = Word::conjugate(&Word::commutator(&x, &y).unwrap(), &x).unwrap();
        assert_eq!(c.to_string(), "x^2 y x^-1 y^-1 x^-1");
    }

    #[test]
    fn commutator_expansion_examples() {
        let (al, x, y, z) = abc();
        assert!(verify_commutator_expansion(&x, &y, &z).unwrap());
        assert!(verify_commutator_expansion(&x, &Word::identity(&al), &y).unwrap());
    }

    #[test]
    fn alphabet_mismatch_is_an_error() {
        let (_, x, _, _) = abc();
        let other = Alphabet::new(["a"]).unwrap();
        let a = Word::named(&other, "a").unwrap();
        assert_eq!(x.mul(&a), Err(GroupError::AlphabetMismatch));
        assert!(Word::commutator(&x, &a).is_err());
        // structurally equal alphabets are compatible
        let (_, x2, _, _) = abc();
        assert!(x.mul(&x2).is_ok());
    }

    #[test]
    fn alphabet_validation() {
        assert!(Alphabet::new(Vec::<String>::new()).is_err());
        assert!(Alphabet::new(["x", "x"]).is_err());
        assert!(Alphabet::new(["1x"]).is_err());
        assert!(Word::generator(&Alphabet::indexed("x", 2).unwrap(), 2).is_err());
    }

    #[test]
    fn powers_and_exponent_sums() {
        let (_, x, y, _) = abc();
        let w = x.pow(3).mul(&y.pow(-2)).unwrap();
        assert_eq!(w.to_string(), "x^3 y^-2");
        assert_eq!(w.exponent_sums(), vec![3, -2, 0]);
        assert!(Word::commutator(&w, &y).unwrap().in_commutator_subgroup());
    }
}
