//! Seeded generators shared by the integration suites.
#![allow(dead_code)]

use std::sync::Arc;

use cutnum::group::{Alphabet, Word};
use cutnum::harvey::HarveyParams;
use num_integer::Integer;
use rand::Rng;

pub fn random_word<R: Rng>(rng: &mut R, al: &Arc<Alphabet>, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    let m = al.rank() as i64;
    let signed: Vec<i64> = (0..len)
        .map(|_| {
            let g = rng.gen_range(1..=m);
            if rng.gen_bool(0.5) {
                g
            } else {
                -g
            }
        })
        .collect();
    Word::from_signed(al, &signed).unwrap()
}

/// `[a, b]` with `|a|, |b| <= 3`, so the result has length at most 12.
pub fn random_commutator<R: Rng>(rng: &mut R, al: &Arc<Alphabet>) -> Word {
    let a = random_word(rng, al, 3);
    let b = random_word(rng, al, 3);
    Word::commutator(&a, &b).unwrap()
}

/// A product of conjugated commutators, an element of `F'`.
pub fn random_derived<R: Rng>(rng: &mut R, al: &Arc<Alphabet>) -> Word {
    let mut w = Word::identity(al);
    for _ in 0..rng.gen_range(1..=2) {
        let c = random_commutator(rng, al);
        let g = random_word(rng, al, 2);
        w = w.mul(&Word::conjugate(&c, &g).unwrap()).unwrap();
    }
    w
}

/// A product of commutators of elements of `F'`, an element of `F''`.
pub fn random_second_derived<R: Rng>(rng: &mut R, al: &Arc<Alphabet>) -> Word {
    let mut w = Word::identity(al);
    for _ in 0..rng.gen_range(1..=2) {
        let u = random_derived(rng, al);
        let v = random_derived(rng, al);
        let g = random_word(rng, al, 2);
        w = w
            .mul(&Word::conjugate(&Word::commutator(&u, &v).unwrap(), &g).unwrap())
            .unwrap();
    }
    w
}

pub fn random_primitive<R: Rng>(rng: &mut R, m: usize, bound: i64) -> Vec<i64> {
    loop {
        let n: Vec<i64> = (0..m).map(|_| rng.gen_range(-bound..=bound)).collect();
        if n.iter().fold(0i64, |g, &x| g.gcd(&x)) == 1 {
            return n;
        }
    }
}

/// Random `m <= max_m`, primitive `n` with entries in `[-5, 5]`, and a
/// random valid `N`.
pub fn random_params<R: Rng>(rng: &mut R, max_m: usize) -> HarveyParams {
    let m = rng.gen_range(1..=max_m);
    let n = random_primitive(rng, m, 5);
    let choices: Vec<usize> = (1..=m).filter(|&k| n[k - 1] != 0).collect();
    let big_n = choices[rng.gen_range(0..choices.len())];
    HarveyParams::new(m, n, Some(big_n)).unwrap()
}
