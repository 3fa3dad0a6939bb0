//! Test-only oracles that avoid the Gray-code and elimination paths.

use std::collections::HashSet;

use rand::Rng;

use crate::gf2::{GenMatrix, Gf2Word};

pub use crate::gf2::remark_matrix;

/// Every codeword built directly as the XOR of the rows selected by a mask.
pub fn naive_codewords(m: &GenMatrix) -> Vec<Gf2Word> {
    (0u64..1 << m.k())
        .map(|mask| {
            let mut w = Gf2Word::zero(m.n()).unwrap();
            for i in 0..m.k() {
                if mask >> i & 1 == 1 {
                    w = w.add(&m.rows()[i]).unwrap();
                }
            }
            w
        })
        .collect()
}

/// Rank as log2 of the number of distinct combinations.
pub fn naive_rank(m: &GenMatrix) -> usize {
    let distinct: HashSet<Gf2Word> = naive_codewords(m).into_iter().collect();
    distinct.len().trailing_zeros() as usize
}

pub fn naive_min_distance(m: &GenMatrix) -> usize {
    naive_codewords(m).iter().skip(1).map(Gf2Word::weight).min().unwrap()
}

pub fn naive_distribution(m: &GenMatrix) -> Vec<u64> {
    let mut hist = vec![0; m.n() + 1];
    for w in naive_codewords(m) {
        hist[w.weight()] += 1;
    }
    hist
}

/// Rejection-samples a full-rank `k x n` matrix.
pub fn random_full_rank<R: Rng>(rng: &mut R, k: usize, n: usize) -> GenMatrix {
    loop {
        let rows = (0..k)
            .map(|_| {
                let bits: Vec<bool> = (0..n).map(|_| rng.gen()).collect();
                Gf2Word::from_bits(&bits).unwrap()
            })
            .collect();
        let m = GenMatrix::new(n, rows).unwrap();
        if m.is_injective() {
            return m;
        }
    }
}
