//! Sparse Laurent polynomials with arbitrary-precision integer coefficients.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::jet::JetAtOne;
use super::RingError;

/// Exponent vector of a monomial; its length is the arity of the ring.
pub type Exponent = Vec<i64>;

/// Order of vanishing at `t = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Valuation {
    Finite(u32),
    Infinite,
}

/// An element of `Z[x_1^{±1}, …, x_k^{±1}]`.
///
/// Terms are kept in a `BTreeMap` keyed by exponent vector, so iteration
/// order is lexicographic and equality is structural. Zero coefficients are
/// never stored.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LaurentPoly {
    arity: usize,
    terms: BTreeMap<Exponent, BigInt>,
}

impl LaurentPoly {
    /// The zero polynomial. Panics if `arity == 0`.
    pub fn zero(arity: usize) -> Self {
        assert!(arity > 0, "Laurent polynomial arity must be positive");
        LaurentPoly {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(arity: usize) -> Self {
        Self::constant(arity, BigInt::one())
    }

    pub fn constant(arity: usize, c: impl Into<BigInt>) -> Self {
        Self::monomial(vec![0; arity], c)
    }

    /// `c · x^e`. Panics on an empty exponent vector.
    pub fn monomial(exponent: Exponent, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(exponent.len());
        let c = c.into();
        if !c.is_zero() {
            p.terms.insert(exponent, c);
        }
        p
    }

    /// The variable `x_i` (0-based) in a ring of the given arity.
    pub fn variable(arity: usize, i: usize) -> Self {
        assert!(i < arity, "variable index {i} out of range for arity {arity}");
        let mut e = vec![0; arity];
        e[i] = 1;
        Self::monomial(e, 1)
    }

    /// `t^n` in the univariate ring.
    pub fn t_pow(n: i64) -> Self {
        Self::monomial(vec![n], 1)
    }

    /// `t^n - 1`, the basic element of the augmentation ideal.
    pub fn t_pow_minus_one(n: i64) -> Self {
        Self::t_pow(n) - Self::one(1)
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, collecting
    /// repeated exponents and dropping zeros.
    pub fn from_terms<I>(arity: usize, terms: I) -> Result<Self, RingError>
    where
        I: IntoIterator<Item = (Exponent, BigInt)>,
    {
        if arity == 0 {
            return Err(RingError::ZeroArity);
        }
        let mut p = Self::zero(arity);
        for (e, c) in terms {
            if e.len() != arity {
                return Err(RingError::ArityMismatch {
                    left: arity,
                    right: e.len(),
                });
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    /// Dense univariate constructor: `coeffs[k]` multiplies `t^{low + k}`.
    pub fn from_dense(low: i64, coeffs: &[BigInt]) -> Self {
        let mut p = Self::zero(1);
        for (k, c) in coeffs.iter().enumerate() {
            p.add_term(vec![low + k as i64], c.clone());
        }
        p
    }

    fn add_term(&mut self, e: Exponent, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.iter().all(|(e, c)| c.is_one() && e.iter().all(|&k| k == 0))
    }

    /// True for `±x^e`, the units of the ring.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms.values().all(|c| c.abs().is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in lexicographic exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, e: &[i64]) -> BigInt {
        self.terms.get(e).cloned().unwrap_or_else(BigInt::zero)
    }

    fn check_arity(&self, other: &Self) -> Result<(), RingError> {
        if self.arity == other.arity {
            Ok(())
        } else {
            Err(RingError::ArityMismatch {
                left: self.arity,
                right: other.arity,
            })
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, RingError> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, RingError> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, RingError> {
        self.check_arity(other)?;
        let mut out = Self::zero(self.arity);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Exponent = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        Ok(out)
    }

    /// Multiplies by the monomial `x^shift`.
    pub fn shift(&self, shift: &[i64]) -> Self {
        assert_eq!(shift.len(), self.arity, "shift length must equal arity");
        LaurentPoly {
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(shift).map(|(a, b)| a + b).collect(), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut out = Self::zero(self.arity);
        for (e, k) in &self.terms {
            out.add_term(e.clone(), k * c);
        }
        out
    }

    /// Non-negative integer power.
    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one(self.arity);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                out = &out * &base;
            }
            base = &base * &base;
            k >>= 1;
        }
        out
    }

    /// Componentwise minimum exponent over all terms (zero vector for `0`).
    pub fn min_exponents(&self) -> Exponent {
        let mut min = vec![i64::MAX; self.arity];
        for e in self.terms.keys() {
            for (m, &k) in min.iter_mut().zip(e) {
                *m = (*m).min(k);
            }
        }
        if self.is_zero() {
            min.iter_mut().for_each(|m| *m = 0);
        }
        min
    }

    /// Leading term in lexicographic order.
    fn leading(&self) -> Option<(&Exponent, &BigInt)> {
        self.terms.iter().next_back()
    }

    /// Ring homomorphism `x_i ↦ t^{n_i}` into `Z[t^{±1}]`.
    pub fn specialize(&self, n: &[i64]) -> Result<Self, RingError> {
        if n.len() != self.arity {
            return Err(RingError::ArityMismatch {
                left: self.arity,
                right: n.len(),
            });
        }
        let mut out = Self::zero(1);
        for (e, c) in &self.terms {
            let d: i64 = e.iter().zip(n).map(|(a, b)| a * b).sum();
            out.add_term(vec![d], c.clone());
        }
        Ok(out)
    }

    fn require_univariate(&self) -> Result<(), RingError> {
        if self.arity == 1 {
            Ok(())
        } else {
            Err(RingError::NotUnivariate(self.arity))
        }
    }

    /// Value at `t = 1`.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// `(p(1), p'(1))`, the class of `p` modulo `J²`.
    pub fn jet_at_one(&self) -> Result<JetAtOne, RingError> {
        self.require_univariate()?;
        let mut value = BigInt::zero();
        let mut slope = BigInt::zero();
        for (e, c) in &self.terms {
            value += c;
            slope += c * BigInt::from(e[0]);
        }
        Ok(JetAtOne::new(value, slope))
    }

    /// Order of vanishing at `t = 1`, i.e. the largest `k` with `p ∈ J^k`.
    pub fn j_valuation(&self) -> Result<Valuation, RingError> {
        self.require_univariate()?;
        if self.is_zero() {
            return Ok(Valuation::Infinite);
        }
        let (_, mut dense) = self.to_dense();
        let mut k = 0;
        // synthetic division by (t - 1) while the value at 1 vanishes
        loop {
            let value: BigInt = dense.iter().sum();
            if !value.is_zero() {
                return Ok(Valuation::Finite(k));
            }
            let deg = dense.len() - 1;
            let mut quotient = vec![BigInt::zero(); deg];
            let mut carry = BigInt::zero();
            for i in (1..=deg).rev() {
                carry += &dense[i];
                quotient[i - 1] = carry.clone();
            }
            dense = quotient;
            k += 1;
        }
    }

    /// Dense coefficient vector of a univariate polynomial, lowest degree first.
    /// Returns `(low, coeffs)` with `coeffs[k]` the coefficient of `t^{low+k}`.
    pub fn to_dense(&self) -> (i64, Vec<BigInt>) {
        assert_eq!(self.arity, 1, "to_dense needs a univariate polynomial");
        let Some((lo, _)) = self.terms.iter().next() else {
            return (0, vec![BigInt::zero()]);
        };
        let (hi, _) = self.terms.iter().next_back().unwrap();
        let low = lo[0];
        let mut v = vec![BigInt::zero(); (hi[0] - low + 1) as usize];
        for (e, c) in &self.terms {
            v[(e[0] - low) as usize] = c.clone();
        }
        (low, v)
    }

    /// Exact quotient `p / d` in the Laurent ring.
    ///
    /// Both operands are shifted to genuine polynomials not divisible by any
    /// variable, after which lexicographic long division must terminate with
    /// remainder zero. Any leftover is reported as [`RingError::NotDivisible`].
    pub fn divide_exact(&self, d: &Self) -> Result<Self, RingError> {
        self.check_arity(d)?;
        if d.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero(self.arity));
        }
        let d_shift = d.min_exponents();
        let p_shift = self.min_exponents();
        let neg = |v: &[i64]| v.iter().map(|k| -k).collect::<Vec<_>>();
        let divisor = d.shift(&neg(&d_shift));
        let mut rem = self.shift(&neg(&p_shift));
        let (lead_e, lead_c) = {
            let (e, c) = divisor.leading().unwrap();
            (e.clone(), c.clone())
        };

        let mut quotient = Self::zero(self.arity);
        while let Some((e, c)) = rem.leading() {
            let diff: Exponent = e.iter().zip(&lead_e).map(|(a, b)| a - b).collect();
            if diff.iter().any(|&k| k < 0) || !(c % &lead_c).is_zero() {
                return Err(RingError::NotDivisible);
            }
            let q = Self::monomial(diff, c / &lead_c);
            rem = &rem - &(&q * &divisor);
            quotient = &quotient + &q;
        }
        let back: Exponent = p_shift.iter().zip(&d_shift).map(|(a, b)| a - b).collect();
        Ok(quotient.shift(&back))
    }

    /// Substitutes `t ↦ t^{-1}` in a univariate polynomial.
    pub fn bar(&self) -> Self {
        LaurentPoly {
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().map(|k| -k).collect(), c.clone()))
                .collect(),
        }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            /// Panics on arity mismatch; use the `checked_*` form to get a `Result`.
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                self.$checked(rhs).expect("Laurent polynomial arity mismatch")
            }
        }
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            arity: self.arity,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl PartialOrd for LaurentPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for LaurentPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.arity
            .cmp(&other.arity)
            .then_with(|| self.terms.iter().cmp(other.terms.iter()))
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, arity: usize, e: &[i64]) -> fmt::Result {
    let mut first = true;
    for (i, &k) in e.iter().enumerate() {
        if k == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        if arity == 1 {
            write!(f, "t")?;
        } else {
            write!(f, "x{}", i + 1)?;
        }
        if k != 1 {
            write!(f, "^{k}")?;
        }
    }
    Ok(())
}

/// Human form: univariate polynomials in `t` with descending degree
/// (`t^2 - 1`, `t - 2 + t^-1`); multivariate ones in `x1, x2, …`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.terms.iter().rev().enumerate() {
            let constant = e.iter().all(|&k| k == 0);
            let negative = c.is_negative();
            let abs = c.abs();
            match (idx, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if constant {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                write_monomial(f, self.arity, e)?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct LaurentRepr {
    arity: usize,
    terms: Vec<(Exponent, String)>,
}

/// Serialized as `{"arity": k, "terms": [[exponent, "coefficient"], …]}` with
/// terms in lexicographic exponent order and coefficients as decimal strings.
impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        LaurentRepr {
            arity: self.arity,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c.to_string())).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = LaurentRepr::deserialize(d)?;
        let mut terms = Vec::with_capacity(repr.terms.len());
        let mut prev: Option<&Exponent> = None;
        for (e, c) in &repr.terms {
            if prev.is_some_and(|p| p >= e) {
                return Err(D::Error::custom("terms must be strictly increasing"));
            }
            prev = Some(e);
            let c: BigInt = c
                .parse()
                .map_err(|_| D::Error::custom(format!("bad coefficient {c:?}")))?;
            if c.is_zero() {
                return Err(D::Error::custom("zero coefficient in serialized polynomial"));
            }
            terms.push((e.clone(), c));
        }
        LaurentPoly::from_terms(repr.arity, terms).map_err(D::Error::custom)
    }
}
