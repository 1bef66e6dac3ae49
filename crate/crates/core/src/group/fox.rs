use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::word::{push_reduced, Alphabet, Letter, Word};
use super::GroupError;
use crate::ring::LaurentPoly;

/// An element of the integral group ring `Z[F]`.
///
/// Only what Fox calculus needs is provided: addition, negation and left
/// multiplication by a group element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupRingElt {
    alphabet: Arc<Alphabet>,
    terms: BTreeMap<Vec<Letter>, BigInt>,
}

impl GroupRingElt {
    pub fn zero(alphabet: &Arc<Alphabet>) -> Self {
        GroupRingElt {
            alphabet: alphabet.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn from_word(w: &Word) -> Self {
        let mut out = Self::zero(w.alphabet());
        out.add_term(w.letters().to_vec(), BigInt::one());
        out
    }

    pub fn one(alphabet: &Arc<Alphabet>) -> Self {
        Self::from_word(&Word::identity(alphabet))
    }

    fn add_term(&mut self, key: Vec<Letter>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(key) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    /// `(word, coefficient)` pairs in a canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (Word, &BigInt)> + '_ {
        self.terms.iter().map(|(k, c)| {
            (
                Word::from_letters(&self.alphabet, k.iter().copied()).expect("stored words are valid"),
                c,
            )
        })
    }

    pub fn add(&self, other: &GroupRingElt) -> Result<GroupRingElt, GroupError> {
        if self.alphabet != other.alphabet {
            return Err(GroupError::AlphabetMismatch);
        }
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> GroupRingElt {
        GroupRingElt {
            alphabet: self.alphabet.clone(),
            terms: self.terms.iter().map(|(k, c)| (k.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &GroupRingElt) -> Result<GroupRingElt, GroupError> {
        self.add(&other.neg())
    }

    /// `w · self`.
    pub fn left_mul(&self, w: &Word) -> Result<GroupRingElt, GroupError> {
        if &self.alphabet != w.alphabet() {
            return Err(GroupError::AlphabetMismatch);
        }
        let mut out = Self::zero(&self.alphabet);
        for (k, c) in &self.terms {
            let mut letters = w.letters().to_vec();
            for &l in k {
                push_reduced(&mut letters, l);
            }
            out.add_term(letters, c.clone());
        }
        Ok(out)
    }

    /// `self · w`.
    pub fn right_mul(&self, w: &Word) -> Result<GroupRingElt, GroupError> {
        if &self.alphabet != w.alphabet() {
            return Err(GroupError::AlphabetMismatch);
        }
        let mut out = Self::zero(&self.alphabet);
        for (k, c) in &self.terms {
            let mut letters = k.clone();
            for &l in w.letters() {
                push_reduced(&mut letters, l);
            }
            out.add_term(letters, c.clone());
        }
        Ok(out)
    }

    /// Image in `Z[F/F'] = Z[x_1^{±1}, …, x_m^{±1}]`: each word goes to the
    /// monomial of its exponent sums.
    pub fn abelianize(&self) -> LaurentPoly {
        let m = self.alphabet.rank();
        let mut out = LaurentPoly::zero(m);
        for (k, c) in &self.terms {
            let mut e = vec![0i64; m];
            for l in k {
                e[l.gen.0] += l.sign();
            }
            out = &out + &LaurentPoly::monomial(e, c.clone());
        }
        out
    }
}

/// Fox derivative `∂w/∂x_i` in `Z[F]`.
///
/// Scanning left to right with prefix `p`, an occurrence of `x_i` contributes
/// `+p` and an occurrence of `x_i^{-1}` contributes `-p x_i^{-1}`.
pub fn fox_derivative(w: &Word, i: usize) -> Result<GroupRingElt, GroupError> {
    let rank = w.alphabet().rank();
    if i >= rank {
        return Err(GroupError::GeneratorOutOfRange { index: i, rank });
    }
    let mut out = GroupRingElt::zero(w.alphabet());
    let letters = w.letters();
    for (k, l) in letters.iter().enumerate() {
        if l.gen.0 != i {
            continue;
        }
        if l.inverse {
            out.add_term(letters[..=k].to_vec(), -BigInt::one());
        } else {
            out.add_term(letters[..k].to_vec(), BigInt::one());
        }
    }
    Ok(out)
}

/// Pushes a group-ring element to the Laurent ring of the abelianization.
pub fn abelianize_derivative(d: &GroupRingElt) -> LaurentPoly {
    d.abelianize()
}

/// Abelianized Fox derivative `∂w/∂x_i` computed directly, without forming
/// the group-ring element.
pub fn abelianized_fox_derivative(w: &Word, i: usize) -> Result<LaurentPoly, GroupError> {
    let m = w.alphabet().rank();
    if i >= m {
        return Err(GroupError::GeneratorOutOfRange { index: i, rank: m });
    }
    let mut prefix = vec![0i64; m];
    let mut out = LaurentPoly::zero(m);
    for l in w.letters() {
        if l.inverse {
            prefix[l.gen.0] -= 1;
            if l.gen.0 == i {
                out = &out - &LaurentPoly::monomial(prefix.clone(), 1);
            }
        } else {
            if l.gen.0 == i {
                out = &out + &LaurentPoly::monomial(prefix.clone(), 1);
            }
            prefix[l.gen.0] += 1;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xy() -> (Arc<Alphabet>, Word, Word) {
        let al = Alphabet::new(["x", "y"]).unwrap();
        let x = Word::named(&al, "x").unwrap();
        let y = Word::named(&al, "y").unwrap();
        (al, x, y)
    }

    #[test]
    fn derivative_axioms() {
        let (al, x, y) = xy();
        assert_eq!(fox_derivative(&x, 0).unwrap(), GroupRingElt::one(&al));
        assert!(fox_derivative(&x, 1).unwrap().is_zero());
        let expect = GroupRingElt::from_word(&x.inv()).neg();
        assert_eq!(fox_derivative(&x.inv(), 0).unwrap(), expect);
        assert_eq!(fox_derivative(&x.mul(&y).unwrap(), 0).unwrap(), GroupRingElt::one(&al));
        assert!(fox_derivative(&x, 2).is_err());
    }

    #[test]
    fn commutator_derivatives() {
        let (al, x, y) = xy();
        let c = Word::commutator(&x, &y).unwrap();
        let xyxi = x.mul(&y).unwrap().mul(&x.inv()).unwrap();
        let dx = GroupRingElt::one(&al).sub(&GroupRingElt::from_word(&xyxi)).unwrap();
        assert_eq!(fox_derivative(&c, 0).unwrap(), dx);
        let dy = GroupRingElt::from_word(&x).sub(&GroupRingElt::from_word(&c)).unwrap();
        assert_eq!(fox_derivative(&c, 1).unwrap(), dy);

        let x1 = LaurentPoly::variable(2, 0);
        let x2 = LaurentPoly::variable(2, 1);
        let one = LaurentPoly::one(2);
        assert_eq!(abelianize_derivative(&dx), &one - &x2);
        assert_eq!(abelianize_derivative(&dy), &x1 - &one);
        assert!(abelianize_derivative(&GroupRingElt::zero(&al)).is_zero());
    }

    #[test]
    fn direct_abelianized_derivative_agrees() {
        let (_, x, y) = xy();
        let w = Word::commutator(&x.pow(2), &y.inv().mul(&x).unwrap())
            .unwrap()
            .mul(&y)
            .unwrap();
        for i in 0..2 {
            assert_eq!(
                abelianized_fox_derivative(&w, i).unwrap(),
                fox_derivative(&w, i).unwrap().abelianize()
            );
        }
    }
}
