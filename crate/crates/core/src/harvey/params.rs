use std::fmt;

use num_integer::Integer;
use serde::Serialize;

use super::HarveyError;

/// Parameters of one family member: `β_1 = m`, the character `x_i ↦ t^{n_i}`
/// and a distinguished index `N` with `n_N ≠ 0` (1-based).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HarveyParams {
    m: usize,
    n: Vec<i64>,
    #[serde(rename = "N")]
    big_n: usize,
}

impl HarveyParams {
    /// Validates `n` and picks `N`; when `big_n` is `None` the smallest index
    /// with `n_N ≠ 0` is used.
    pub fn new(m: usize, n: Vec<i64>, big_n: Option<usize>) -> Result<Self, HarveyError> {
        if m == 0 {
            return Err(HarveyError::InvalidParams("m must be at least 1".into()));
        }
        if n.len() != m {
            return Err(HarveyError::InvalidParams(format!(
                "n has {} entries, expected m = {m}",
                n.len()
            )));
        }
        let g = n.iter().fold(0i64, |acc, &k| acc.gcd(&k));
        if g != 1 {
            return Err(HarveyError::NonPrimitive(n));
        }
        let big_n = match big_n {
            Some(k) if k == 0 || k > m => {
                return Err(HarveyError::InvalidParams(format!("N = {k} is outside 1..={m}")));
            }
            Some(k) if n[k - 1] == 0 => {
                return Err(HarveyError::InvalidParams(format!(
                    "n_N must be nonzero, but n_{k} = 0"
                )));
            }
            Some(k) => k,
            None => n.iter().position(|&k| k != 0).expect("primitive vectors are nonzero") + 1,
        };
        Ok(HarveyParams { m, n, big_n })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> &[i64] {
        &self.n
    }

    /// The distinguished index `N` (1-based).
    pub fn big_n(&self) -> usize {
        self.big_n
    }

    /// `n_N`, the scalar on the diagonal of `A(1)`.
    pub fn n_big_n(&self) -> i64 {
        self.n[self.big_n - 1]
    }

    /// `n_k` for a 1-based index.
    pub fn n_at(&self, k: usize) -> i64 {
        self.n[k - 1]
    }
}

impl fmt::Display for HarveyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n: Vec<String> = self.n.iter().map(i64::to_string).collect();
        write!(f, "m = {}, n = ({}), N = {}", self.m, n.join(","), self.big_n)
    }
}

/// The pairs `ij` with `1 ≤ i < j ≤ m` in dictionary order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairIndex {
    m: usize,
    pairs: Vec<(usize, usize)>,
}

impl PairIndex {
    pub fn new(m: usize) -> Self {
        let pairs = (1..=m).flat_map(|i| (i + 1..=m).map(move |j| (i, j))).collect();
        PairIndex { m, pairs }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn pair(&self, pos: usize) -> (usize, usize) {
        self.pairs[pos]
    }

    /// Position of `ij` for `i < j`, or of `ji` when given in reverse order.
    pub fn position(&self, i: usize, j: usize) -> Option<usize> {
        let (a, b) = if i < j { (i, j) } else { (j, i) };
        if a == b || a == 0 || b > self.m {
            return None;
        }
        // pairs starting with 1..a-1 come first
        let before: usize = (1..a).map(|r| self.m - r).sum();
        Some(before + (b - a - 1))
    }
}
