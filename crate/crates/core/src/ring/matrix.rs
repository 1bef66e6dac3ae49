//! Dense matrices over exact integral domains and fraction-free elimination.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::jet::JetAtOne;
use super::laurent::{Exponent, LaurentPoly};
use super::RingError;

/// The operations fraction-free elimination needs from its coefficient ring.
pub trait ExactDomain: Clone + PartialEq {
    fn is_zero_elt(&self) -> bool;
    fn mul_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    /// Quotient when `d` divides `self` exactly; an error otherwise.
    fn div_exact_ref(&self, d: &Self) -> Result<Self, RingError>;
}

impl ExactDomain for BigInt {
    fn is_zero_elt(&self) -> bool {
        self.is_zero()
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn div_exact_ref(&self, d: &Self) -> Result<Self, RingError> {
        if d.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        let (q, r) = self.div_rem(d);
        if r.is_zero() {
            Ok(q)
        } else {
            Err(RingError::NotDivisible)
        }
    }
}

impl ExactDomain for LaurentPoly {
    fn is_zero_elt(&self) -> bool {
        self.is_zero()
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn div_exact_ref(&self, d: &Self) -> Result<Self, RingError> {
        self.divide_exact(d)
    }
}

/// Dense row-major matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    entries: Vec<T>,
}

pub type IntMatrix = Matrix<BigInt>;

impl<T: Clone> Matrix<T> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix { rows, cols, entries }
    }

    /// Builds a matrix from rows; every row must have `cols` entries.
    pub fn from_rows(cols: usize, rows: Vec<Vec<T>>) -> Result<Self, RingError> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * cols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(RingError::RaggedRow {
                    row: i,
                    expected: cols,
                    found: row.len(),
                });
            }
            entries.extend(row);
        }
        Ok(Matrix { rows: n, cols, entries })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of bounds");
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: T) {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of bounds");
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn map<U: Clone>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn try_map<U: Clone, E>(&self, f: impl FnMut(&T) -> Result<U, E>) -> Result<Matrix<U>, E> {
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect::<Result<_, _>>()?,
        })
    }

    /// Applies a permutation to rows and columns: entry `(i,j)` of the result
    /// is entry `(perm[i], perm[j])` of `self`.
    pub fn permute_symmetric(&self, perm: &[usize]) -> Self {
        assert!(self.is_square() && perm.len() == self.rows);
        Matrix::from_fn(self.rows, self.cols, |i, j| self.get(perm[i], perm[j]).clone())
    }
}

/// Exact determinant by Bareiss fraction-free elimination.
///
/// After step `k` every active entry is a `(k+1)`-minor of the input, so each
/// division by the previous pivot is exact.
pub fn bareiss_det<T: ExactDomain>(m: &Matrix<T>, one: &T) -> Result<T, RingError> {
    if !m.is_square() {
        return Err(RingError::NotSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    let n = m.rows;
    let zero = one.sub_ref(one);
    if n == 0 {
        return Ok(one.clone());
    }
    let mut a = m.entries.clone();
    let mut prev = one.clone();
    let mut negate = false;
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !a[r * n + k].is_zero_elt()) else {
            return Ok(zero);
        };
        if p != k {
            for j in 0..n {
                a.swap(p * n + j, k * n + j);
            }
            negate = !negate;
        }
        let pivot = a[k * n + k].clone();
        for i in k + 1..n {
            let lead = a[i * n + k].clone();
            for j in k + 1..n {
                let num = a[i * n + j].mul_ref(&pivot).sub_ref(&lead.mul_ref(&a[k * n + j]));
                a[i * n + j] = num.div_exact_ref(&prev)?;
            }
            a[i * n + k] = zero.clone();
        }
        prev = pivot;
    }
    let det = a[n * n - 1].clone();
    Ok(if negate { det.neg_ref() } else { det })
}

/// Rank over the field of fractions, by fraction-free row echelon reduction.
pub fn fraction_free_rank<T: ExactDomain>(m: &Matrix<T>, one: &T) -> Result<usize, RingError> {
    let (rows, cols) = (m.rows, m.cols);
    let mut a = m.entries.clone();
    let zero = one.sub_ref(one);
    let mut prev = one.clone();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i * cols + c].is_zero_elt()) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                a.swap(p * cols + j, r * cols + j);
            }
        }
        let pivot = a[r * cols + c].clone();
        for i in r + 1..rows {
            let lead = a[i * cols + c].clone();
            for j in c + 1..cols {
                let num = a[i * cols + j].mul_ref(&pivot).sub_ref(&lead.mul_ref(&a[r * cols + j]));
                a[i * cols + j] = num.div_exact_ref(&prev)?;
            }
            a[i * cols + c] = zero.clone();
        }
        prev = pivot;
        r += 1;
    }
    Ok(r)
}

impl IntMatrix {
    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { BigInt::one() } else { BigInt::zero() })
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Result<Self, RingError> {
        let cols = rows.first().map_or(0, Vec::len);
        Matrix::from_rows(
            cols,
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    pub fn det(&self) -> Result<BigInt, RingError> {
        bareiss_det(self, &BigInt::one())
    }

    pub fn rank(&self) -> usize {
        fraction_free_rank(self, &BigInt::one()).expect("integer elimination is exact")
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j) + other.get(i, j))
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        self.map(|x| x * c)
    }
}

/// A matrix of Laurent polynomials sharing one arity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyMatrix {
    arity: usize,
    inner: Matrix<LaurentPoly>,
}

impl PolyMatrix {
    pub fn new(arity: usize, inner: Matrix<LaurentPoly>) -> Result<Self, RingError> {
        if arity == 0 {
            return Err(RingError::ZeroArity);
        }
        if let Some(bad) = inner.entries.iter().find(|p| p.arity() != arity) {
            return Err(RingError::ArityMismatch {
                left: arity,
                right: bad.arity(),
            });
        }
        Ok(PolyMatrix { arity, inner })
    }

    pub fn from_rows(arity: usize, cols: usize, rows: Vec<Vec<LaurentPoly>>) -> Result<Self, RingError> {
        Self::new(arity, Matrix::from_rows(cols, rows)?)
    }

    pub fn zeros(arity: usize, rows: usize, cols: usize) -> Self {
        PolyMatrix {
            arity,
            inner: Matrix::from_fn(rows, cols, |_, _| LaurentPoly::zero(arity)),
        }
    }

    pub fn identity(arity: usize, n: usize) -> Self {
        PolyMatrix {
            arity,
            inner: Matrix::from_fn(n, n, |i, j| {
                if i == j {
                    LaurentPoly::one(arity)
                } else {
                    LaurentPoly::zero(arity)
                }
            }),
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn rows(&self) -> usize {
        self.inner.rows
    }

    pub fn cols(&self) -> usize {
        self.inner.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &LaurentPoly {
        self.inner.get(i, j)
    }

    pub fn set(&mut self, i: usize, j: usize, p: LaurentPoly) -> Result<(), RingError> {
        if p.arity() != self.arity {
            return Err(RingError::ArityMismatch {
                left: self.arity,
                right: p.arity(),
            });
        }
        self.inner.set(i, j, p);
        Ok(())
    }

    pub fn as_matrix(&self) -> &Matrix<LaurentPoly> {
        &self.inner
    }

    /// Multiplies every row by a monomial unit so that all exponents are
    /// non-negative and each nonzero row is not divisible by any variable.
    /// Returns the cleared matrix and the total exponent of the units used.
    fn clear_denominators(&self) -> (Matrix<LaurentPoly>, Exponent) {
        let mut total = vec![0i64; self.arity];
        let mut out = self.inner.clone();
        for i in 0..self.rows() {
            let mut shift = vec![i64::MAX; self.arity];
            let mut any = false;
            for p in self.inner.row(i).iter().filter(|p| !p.is_zero()) {
                any = true;
                for (s, m) in shift.iter_mut().zip(p.min_exponents()) {
                    *s = (*s).min(m);
                }
            }
            if !any {
                continue;
            }
            let neg: Exponent = shift.iter().map(|k| -k).collect();
            for j in 0..self.cols() {
                let shifted = self.inner.get(i, j).shift(&neg);
                out.set(i, j, shifted);
            }
            for (t, s) in total.iter_mut().zip(&shift) {
                *t += s;
            }
        }
        (out, total)
    }

    /// Exact determinant.
    pub fn det(&self) -> Result<LaurentPoly, RingError> {
        if !self.inner.is_square() {
            return Err(RingError::NotSquare {
                rows: self.rows(),
                cols: self.cols(),
            });
        }
        let (cleared, unit) = self.clear_denominators();
        let d = bareiss_det(&cleared, &LaurentPoly::one(self.arity))?;
        Ok(d.shift(&unit))
    }

    /// Rank over the field of rational functions.
    pub fn rank_over_fraction_field(&self) -> usize {
        let (cleared, _) = self.clear_denominators();
        fraction_free_rank(&cleared, &LaurentPoly::one(self.arity)).expect("fraction-free elimination divides exactly")
    }

    /// Applies `x_i ↦ t^{n_i}` entrywise.
    pub fn specialize(&self, n: &[i64]) -> Result<PolyMatrix, RingError> {
        Ok(PolyMatrix {
            arity: 1,
            inner: self.inner.try_map(|p| p.specialize(n))?,
        })
    }

    /// Entrywise jets at `t = 1` of a univariate matrix.
    pub fn jets(&self) -> Result<Matrix<JetAtOne>, RingError> {
        self.inner.try_map(LaurentPoly::jet_at_one)
    }

    pub fn mul_vector(&self, v: &[LaurentPoly]) -> Result<Vec<LaurentPoly>, RingError> {
        if v.len() != self.cols() {
            return Err(RingError::DimensionMismatch {
                expected: self.cols(),
                found: v.len(),
            });
        }
        (0..self.rows())
            .map(|i| {
                let mut acc = LaurentPoly::zero(self.arity);
                for (a, b) in self.inner.row(i).iter().zip(v) {
                    acc = acc.checked_add(&a.checked_mul(b)?)?;
                }
                Ok(acc)
            })
            .collect()
    }

    pub fn transpose(&self) -> PolyMatrix {
        PolyMatrix {
            arity: self.arity,
            inner: self.inner.transpose(),
        }
    }
}

impl<T: fmt::Display + Clone> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.entries.iter().map(ToString::to_string).collect();
        let width = cells.iter().map(|c| c.chars().count()).max().unwrap_or(0);
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, "  ")?;
                }
                write!(f, "{:>width$}", cells[i * self.cols + j])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.inner.fmt(f)
    }
}
