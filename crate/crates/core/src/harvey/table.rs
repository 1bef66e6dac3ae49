//! The relation matrix `M` modulo `J^2`, read off entry by entry from the
//! five cases of pair positions relative to `N`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::ring::{IntMatrix, JetAtOne, LaurentPoly, Matrix, PolyMatrix};

use super::{HarveyError, HarveyParams, PairIndex};

/// A symbolic entry `sign · (t^{n_var} - 1)` or zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CaseEntry {
    Zero,
    /// `var` is 1-based.
    Binomial {
        sign: i8,
        var: usize,
    },
}

impl CaseEntry {
    fn plus(var: usize) -> Self {
        CaseEntry::Binomial { sign: 1, var }
    }

    fn minus(var: usize) -> Self {
        CaseEntry::Binomial { sign: -1, var }
    }

    pub fn negated(self) -> Self {
        match self {
            CaseEntry::Zero => CaseEntry::Zero,
            CaseEntry::Binomial { sign, var } => CaseEntry::Binomial { sign: -sign, var },
        }
    }

    pub fn to_poly(self, n: &[i64]) -> LaurentPoly {
        match self {
            CaseEntry::Zero => LaurentPoly::zero(1),
            CaseEntry::Binomial { sign, var } => {
                let p = LaurentPoly::t_pow_minus_one(n[var - 1]);
                if sign > 0 {
                    p
                } else {
                    -p
                }
            }
        }
    }

    pub fn jet(self, n: &[i64]) -> JetAtOne {
        match self {
            CaseEntry::Zero => JetAtOne::zero(),
            CaseEntry::Binomial { sign, var } => JetAtOne::from_ints(0, i64::from(sign) * n[var - 1]),
        }
    }
}

impl fmt::Display for CaseEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CaseEntry::Zero => write!(f, "0"),
            CaseEntry::Binomial { sign, var } if *sign > 0 => write!(f, "t^{{n_{var}}}-1"),
            CaseEntry::Binomial { var, .. } => write!(f, "1-t^{{n_{var}}}"),
        }
    }
}

/// The symbolic `C(m,2)`-square case table for the index `N` (1-based).
///
/// Row `ij` lists the coefficients of relation `R_ij` on the `μ_lk`, modulo
/// `J^2`:
/// - `j = N`: `1 - t^{n_l}` at `li` (`l < i`), `t^{n_k} - 1` at `ik` (`k > i`);
/// - `i = N`: `t^{n_l} - 1` at `lj` (`l < j`), `1 - t^{n_k}` at `jk` (`k > j`);
/// - `N < i < j`: `t^{n_j} - 1` at `Ni`, `1 - t^{n_i}` at `Nj`;
/// - `i < N < j`: `1 - t^{n_j}` at `iN`, `1 - t^{n_i}` at `Nj`;
/// - `i < j < N`: `1 - t^{n_j}` at `iN`, `t^{n_i} - 1` at `jN`;
///
/// with `t^{n_N} - 1` on the diagonal in the last three cases. In the first
/// two it arises as the `k = N` or `l = N` term.
pub fn symbolic_relation_matrix(m: usize, big_n: usize) -> Result<Matrix<CaseEntry>, HarveyError> {
    if m == 0 || big_n == 0 || big_n > m {
        return Err(HarveyError::InvalidParams(format!(
            "need 1 <= N <= m, got N = {big_n}, m = {m}"
        )));
    }
    let idx = PairIndex::new(m);
    let size = idx.len();
    let mut out = Matrix::from_fn(size, size, |_, _| CaseEntry::Zero);
    let pos = |a: usize, b: usize| idx.position(a, b).expect("valid pair");
    let nn = big_n;
    for (row, &(i, j)) in idx.pairs().iter().enumerate() {
        if j == nn {
            for l in 1..i {
                out.set(row, pos(l, i), CaseEntry::minus(l));
            }
            for k in i + 1..=m {
                out.set(row, pos(i, k), CaseEntry::plus(k));
            }
        } else if i == nn {
            for l in 1..j {
                out.set(row, pos(l, j), CaseEntry::plus(l));
            }
            for k in j + 1..=m {
                out.set(row, pos(j, k), CaseEntry::minus(k));
            }
        } else {
            if nn < i {
                out.set(row, pos(nn, i), CaseEntry::plus(j));
                out.set(row, pos(nn, j), CaseEntry::minus(i));
            } else if nn < j {
                out.set(row, pos(i, nn), CaseEntry::minus(j));
                out.set(row, pos(nn, j), CaseEntry::minus(i));
            } else {
                out.set(row, pos(i, nn), CaseEntry::minus(j));
                out.set(row, pos(j, nn), CaseEntry::plus(i));
            }
            out.set(row, row, CaseEntry::plus(nn));
        }
    }
    Ok(out)
}

/// The case table with every symbol `t^{n_k} - 1` evaluated, i.e. `M` with
/// the error matrix `E` set to zero.
pub fn case_table_polynomials(params: &HarveyParams) -> Result<PolyMatrix, HarveyError> {
    let table = symbolic_relation_matrix(params.m(), params.big_n())?;
    Ok(PolyMatrix::new(1, table.map(|e| e.to_poly(params.n())))?)
}

/// `M mod J^2` as a matrix of jets.
pub fn relation_matrix_mod_j2(params: &HarveyParams) -> Result<Matrix<JetAtOne>, HarveyError> {
    let table = symbolic_relation_matrix(params.m(), params.big_n())?;
    Ok(table.map(|e| e.jet(params.n())))
}

/// Outcome of the structural checks on `M mod J^2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionChecks {
    /// Every diagonal jet is `(0, n_N)`.
    pub diagonal: bool,
    /// Every off-diagonal entry vanishes at `t = 1`.
    pub off_diagonal_in_j: bool,
    /// Off-diagonal slopes are antisymmetric.
    pub skew_symmetry: bool,
}

impl DecompositionChecks {
    pub fn all_pass(&self) -> bool {
        self.diagonal && self.off_diagonal_in_j && self.skew_symmetry
    }

    /// Name of the first failing check.
    pub fn first_failure(&self) -> Option<&'static str> {
        [
            (self.diagonal, "diagonal"),
            (self.off_diagonal_in_j, "off_diagonal_in_j"),
            (self.skew_symmetry, "skew_symmetry"),
        ]
        .into_iter()
        .find(|(ok, _)| !ok)
        .map(|(_, name)| name)
    }
}

/// Checks `M ≡ (t^{n_N} - 1) I + (t - 1) S (mod J^2)` with `S(1)` skew.
pub fn verify_decomposition(matrix: &Matrix<JetAtOne>, params: &HarveyParams) -> DecompositionChecks {
    let size = matrix.rows();
    if !matrix.is_square() {
        return DecompositionChecks {
            diagonal: false,
            off_diagonal_in_j: false,
            skew_symmetry: false,
        };
    }
    let expected = JetAtOne::from_ints(0, params.n_big_n());
    let diagonal = (0..size).all(|a| matrix.get(a, a) == &expected);
    let mut off_diagonal_in_j = true;
    let mut skew_symmetry = true;
    for a in 0..size {
        for b in 0..size {
            if a == b {
                continue;
            }
            if !matrix.get(a, b).value.is_zero() {
                off_diagonal_in_j = false;
            }
            if matrix.get(a, b).slope != -&matrix.get(b, a).slope {
                skew_symmetry = false;
            }
        }
    }
    DecompositionChecks {
        diagonal,
        off_diagonal_in_j,
        skew_symmetry,
    }
}

/// `A(1) = n_N I + S(1)`: the slopes of `M mod J^2`.
pub fn a_at_one(matrix: &Matrix<JetAtOne>, params: &HarveyParams) -> Result<IntMatrix, HarveyError> {
    let checks = verify_decomposition(matrix, params);
    if let Some(name) = checks.first_failure() {
        return Err(HarveyError::CheckFailed(name.to_string()));
    }
    let n_big = BigInt::from(params.n_big_n());
    Ok(Matrix::from_fn(matrix.rows(), matrix.cols(), |a, b| {
        if a == b {
            n_big.clone()
        } else {
            matrix.get(a, b).slope.clone()
        }
    }))
}

/// `S(1) = A(1) - n_N I`.
pub fn s_at_one(a1: &IntMatrix, params: &HarveyParams) -> IntMatrix {
    a1.add(&IntMatrix::identity(a1.rows()).scale(&BigInt::from(-params.n_big_n())))
}

/// `A(1) + A(1)ᵀ = 2 n_N I`, equivalently `zᵀ A(1) z = n_N Σ z_i^2`.
pub fn quadratic_form_check(a1: &IntMatrix, params: &HarveyParams) -> bool {
    if !a1.is_square() {
        return false;
    }
    let sym = a1.add(&a1.transpose());
    sym == IntMatrix::identity(a1.rows()).scale(&BigInt::from(2 * params.n_big_n()))
}

/// Checks, for one `N`, that the symbolic table has `t^{n_N} - 1` on the
/// diagonal and is skew off the diagonal as formal symbols. Together with
/// `n_N ≠ 0` this makes `A(1)` nonsingular for every `n`.
pub fn symbolic_structure_holds(m: usize, big_n: usize) -> Result<bool, HarveyError> {
    let t = symbolic_relation_matrix(m, big_n)?;
    let size = t.rows();
    for a in 0..size {
        if size > 0 && t.get(a, a) != &CaseEntry::plus(big_n) {
            return Ok(false);
        }
        for b in 0..size {
            if a != b && t.get(a, b) != &t.get(b, a).negated() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
