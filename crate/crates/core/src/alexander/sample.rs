use std::collections::BTreeSet;

use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{AlexanderError, PhiMap, Presentation};

/// A lattice basis of `{v ∈ Z^g : A v = 0}` for an integer matrix `A` with
/// `g` columns, found by unimodular row reduction of `[Aᵀ | I]`.
pub fn integer_kernel(a: &[Vec<i64>], g: usize) -> Vec<Vec<i64>> {
    // row k of `left` is column k of A; `right` tracks the unimodular transform
    let mut left: Vec<Vec<i128>> = (0..g).map(|k| a.iter().map(|row| row[k] as i128).collect()).collect();
    let mut right: Vec<Vec<i128>> = (0..g).map(|k| (0..g).map(|j| i128::from(j == k)).collect()).collect();
    let cols = a.len();
    let mut pivot = 0;
    for c in 0..cols {
        loop {
            let nonzero: Vec<usize> = (pivot..g).filter(|&r| left[r][c] != 0).collect();
            let Some(&best) = nonzero.iter().min_by_key(|&&r| left[r][c].abs()) else {
                break;
            };
            if nonzero.len() == 1 {
                left.swap(pivot, best);
                right.swap(pivot, best);
                pivot += 1;
                break;
            }
            for &r in &nonzero {
                if r == best {
                    continue;
                }
                let q = Integer::div_floor(&left[r][c], &left[best][c]);
                let (pl, pr) = (left[best].clone(), right[best].clone());
                for (x, y) in left[r].iter_mut().zip(&pl) {
                    *x -= q * y;
                }
                for (x, y) in right[r].iter_mut().zip(&pr) {
                    *x -= q * y;
                }
            }
        }
        if pivot == g {
            break;
        }
    }
    right[pivot..]
        .iter()
        .map(|row| row.iter().map(|&v| v as i64).collect())
        .collect()
}

/// Draws up to `count` distinct primitive characters consistent with the
/// relators, deterministically from `seed`.
pub fn sample_phis(p: &Presentation, count: usize, seed: u64) -> Result<Vec<PhiMap>, AlexanderError> {
    let sums: Vec<Vec<i64>> = p.relators().iter().map(|r| r.exponent_sums()).collect();
    let basis = integer_kernel(&sums, p.generator_count());
    if basis.is_empty() {
        return Err(AlexanderError::NoCharacters);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let mut attempts = 0;
    while out.len() < count && attempts < 64 * count.max(1) {
        attempts += 1;
        let mut v = vec![0i64; p.generator_count()];
        for b in &basis {
            let c: i64 = rng.gen_range(-3..=3);
            for (x, y) in v.iter_mut().zip(b) {
                *x += c * y;
            }
        }
        let g = v.iter().fold(0i64, |acc, &k| acc.gcd(&k));
        if g == 0 {
            continue;
        }
        v.iter_mut().for_each(|x| *x /= g);
        if seen.insert(v.clone()) {
            out.push(PhiMap::for_presentation(v, p)?);
        }
    }
    Ok(out)
}
