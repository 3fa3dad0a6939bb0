//! Gray-code codeword enumeration.
//!
//! Consecutive codewords differ by one generator, so each step costs one XOR
//! and one popcount. Results never depend on visiting order.

use num_traits::PrimInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf2::matrix::GenMatrix;
use crate::gf2::word::Gf2Word;
use crate::PackedWord;

/// Largest dimension the enumerators accept.
pub const MAX_ENUM_K: usize = 48;

/// Parameters and weight distribution of an enumerated code.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeSummary {
    pub n: usize,
    pub k: usize,
    pub min_distance: Option<usize>,
    pub weight_distribution: Vec<u64>,
}

/// Calls `f` on every codeword (zero included) in Gray-code order; returns the count visited.
pub fn for_each_codeword<F: FnMut(&Gf2Word)>(m: &GenMatrix, mut f: F) -> Result<u64> {
    check_k(m.k())?;
    let mut w = Gf2Word::zero(m.n())?;
    f(&w);
    let total: u64 = 1 << m.k();
    for i in 1..total {
        w.xor_assign(&m.rows()[i.trailing_zeros() as usize]);
        f(&w);
    }
    Ok(total)
}

/// Minimum weight of a nonzero word in the span of `rows`, stopping early once
/// a weight `<= floor` is seen. Returns `u32::MAX` for an empty row list.
pub fn gray_min_weight<W: PrimInt>(rows: &[W], floor: u32) -> u32 {
    let mut best = u32::MAX;
    let mut w = W::zero();
    let total: u64 = 1 << rows.len();
    for i in 1..total {
        w = w ^ rows[i.trailing_zeros() as usize];
        let wt = w.count_ones();
        if wt < best {
            best = wt;
            if best <= floor {
                break;
            }
        }
    }
    best
}

/// Weight histogram of the span of `rows` over words of length `n`.
pub fn gray_histogram<W: PrimInt>(rows: &[W], n: usize) -> Vec<u64> {
    let mut hist = vec![0u64; n + 1];
    let mut w = W::zero();
    hist[0] = 1;
    let total: u64 = 1 << rows.len();
    for i in 1..total {
        w = w ^ rows[i.trailing_zeros() as usize];
        hist[w.count_ones() as usize] += 1;
    }
    hist
}

fn check_k(k: usize) -> Result<()> {
    if k > MAX_ENUM_K {
        return Err(Error::InvalidArgument(format!(
            "dimension {k} too large to enumerate (max {MAX_ENUM_K})"
        )));
    }
    Ok(())
}

fn packed_rows(m: &GenMatrix) -> Option<Vec<PackedWord>> {
    (m.n() <= 64).then(|| m.rows().iter().map(Gf2Word::packed_low).collect())
}

fn validated(m: &GenMatrix) -> Result<()> {
    if m.k() == 0 {
        return Err(Error::EmptyCode);
    }
    m.ensure_injective()?;
    check_k(m.k())
}

fn min_weight_floor(m: &GenMatrix, floor: u32) -> Result<usize> {
    validated(m)?;
    if let Some(rows) = packed_rows(m) {
        return Ok(gray_min_weight(&rows, floor) as usize);
    }
    let mut best = usize::MAX;
    let mut w = Gf2Word::zero(m.n())?;
    let total: u64 = 1 << m.k();
    for i in 1..total {
        w.xor_assign(&m.rows()[i.trailing_zeros() as usize]);
        let wt = w.weight();
        if wt < best {
            best = wt;
            if best as u32 <= floor {
                break;
            }
        }
    }
    Ok(best)
}

/// Minimum weight over the `2^k - 1` nonzero codewords.
pub fn min_distance(m: &GenMatrix) -> Result<usize> {
    min_weight_floor(m, 1)
}

/// Whether every nonzero codeword has weight `>= d`; stops at the first lighter word.
pub fn min_distance_at_least(m: &GenMatrix, d: usize) -> Result<bool> {
    let floor = d.saturating_sub(1) as u32;
    Ok(min_weight_floor(m, floor)? >= d)
}

/// Full weight distribution. Accepts the empty code (`min_distance = None`).
pub fn weight_distribution(m: &GenMatrix) -> Result<CodeSummary> {
    m.ensure_injective()?;
    check_k(m.k())?;
    let hist = match packed_rows(m) {
        Some(rows) => gray_histogram(&rows, m.n()),
        None => {
            let mut hist = vec![0u64; m.n() + 1];
            for_each_codeword(m, |w| hist[w.weight()] += 1)?;
            hist
        }
    };
    let min_distance = hist.iter().skip(1).position(|&c| c > 0).map(|i| i + 1);
    Ok(CodeSummary { n: m.n(), k: m.k(), min_distance, weight_distribution: hist })
}

/// All nonzero codewords of weight `<= max_weight`, sorted by (weight, word).
pub fn light_codewords(m: &GenMatrix, max_weight: usize) -> Result<Vec<Gf2Word>> {
    let mut out = Vec::new();
    for_each_codeword(m, |w| {
        let wt = w.weight();
        if wt > 0 && wt <= max_weight {
            out.push(*w);
        }
    })?;
    out.sort_by(|a, b| a.weight().cmp(&b.weight()).then_with(|| a.cmp(b)));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2::testing::{naive_distribution, naive_min_distance, random_full_rank, remark_matrix};
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn hamming74() -> GenMatrix {
        GenMatrix::from_strs(&["1000110", "0100101", "0010011", "0001111"]).unwrap()
    }

    #[test]
    fn remark_matrix_min_distance_is_four() {
        let m = remark_matrix();
        assert_eq!(naive_min_distance(&m), 4);
        assert_eq!(min_distance(&m).unwrap(), 4);
    }

    #[test]
    fn identity_min_distance_is_one() {
        assert_eq!(min_distance(&GenMatrix::identity(12).unwrap()).unwrap(), 1);
    }

    #[test]
    fn hamming_distribution() {
        let s = weight_distribution(&hamming74()).unwrap();
        assert_eq!(s.weight_distribution, vec![1, 0, 0, 7, 7, 0, 0, 1]);
        assert_eq!(s.min_distance, Some(3));
        assert_eq!(naive_distribution(&hamming74()), s.weight_distribution);
    }

    #[test]
    fn repetition_distribution() {
        let m = GenMatrix::from_strs(&["111"]).unwrap();
        assert_eq!(weight_distribution(&m).unwrap().weight_distribution, vec![1, 0, 0, 1]);
    }

    #[test]
    fn remark_distribution_has_four_weight_four_rows() {
        let s = weight_distribution(&remark_matrix()).unwrap();
        assert!(s.weight_distribution[4] >= 4);
        assert_eq!(s.weight_distribution.iter().sum::<u64>(), 32);
    }

    #[test]
    fn errors_for_empty_and_dependent() {
        assert_eq!(min_distance(&GenMatrix::empty(4).unwrap()), Err(Error::EmptyCode));
        let dep = GenMatrix::from_strs(&["1100", "1100"]).unwrap();
        assert!(matches!(min_distance(&dep), Err(Error::NotInjective { .. })));
    }

    #[test]
    fn empty_code_summary() {
        let s = weight_distribution(&GenMatrix::empty(3).unwrap()).unwrap();
        assert_eq!(s.min_distance, None);
        assert_eq!(s.weight_distribution, vec![1, 0, 0, 0]);
    }

    #[test]
    fn enumeration_visits_every_codeword_once() {
        let m = remark_matrix();
        let mut seen = std::collections::HashSet::new();
        let count = for_each_codeword(&m, |w| {
            assert!(seen.insert(*w));
        })
        .unwrap();
        assert_eq!(count, 32);
        assert_eq!(seen.len(), 32);
    }

    #[test]
    fn wide_words_use_limb_path() {
        // a [130, 2] code: both rows weight 65, sum weight 130
        let a = Gf2Word::from_support(130, &(0..65).collect::<Vec<_>>()).unwrap();
        let b = Gf2Word::from_support(130, &(65..130).collect::<Vec<_>>()).unwrap();
        let m = GenMatrix::new(130, vec![a, b]).unwrap();
        assert_eq!(min_distance(&m).unwrap(), 65);
        assert_eq!(weight_distribution(&m).unwrap().weight_distribution[130], 1);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]
        #[test]
        fn gray_matches_naive(seed in any::<u64>(), k in 1usize..=12, extra in 0usize..=20) {
            let n = (k + extra).min(32);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let m = random_full_rank(&mut rng, k, n);
            prop_assert_eq!(min_distance(&m).unwrap(), naive_min_distance(&m));
            prop_assert_eq!(weight_distribution(&m).unwrap().weight_distribution, naive_distribution(&m));
        }
    }
}
