//! Isotropy representations of `Z_2^r` viewed as binary codes.
//!
//! Row `i` of the matrix is the image of the `i`-th generator, acting on the
//! `n` coordinates by sign changes. The fixed-point codimension of an
//! involution is the Hamming weight of its image, and the columns are the
//! characters of the one-dimensional summands.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf2::{light_codewords, GenMatrix, Gf2Word};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    matrix: GenMatrix,
    effective: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CharacterMultiplicity {
    /// Column of the reduced matrix: the character's values on the reduced generators.
    pub pattern: Gf2Word,
    pub multiplicity: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RepAnalysis {
    pub min_codim: usize,
    /// Lowest-weight nonzero codeword, least in word order among those.
    pub witness: Gf2Word,
    pub distinct_characters: usize,
    pub character_multiplicities: Vec<CharacterMultiplicity>,
    pub minimal_form: bool,
}

impl Representation {
    pub fn new(matrix: GenMatrix) -> Self {
        let effective = matrix.is_injective();
        Self { matrix, effective }
    }

    pub fn matrix(&self) -> &GenMatrix {
        &self.matrix
    }

    pub fn effective(&self) -> bool {
        self.effective
    }

    /// Rank of the acting torus, i.e. the number of generators.
    pub fn r(&self) -> usize {
        self.matrix.k()
    }

    fn ensure_effective(&self) -> Result<()> {
        if self.effective && self.r() > 0 {
            Ok(())
        } else {
            Err(Error::NotEffective { rank: self.matrix.rank(), r: self.r() })
        }
    }

    pub fn analyze(&self) -> Result<RepAnalysis> {
        self.ensure_effective()?;
        let witness = self.find_low_weight_involution(self.matrix.n())?.expect("an effective action has a nonzero image");
        // the reduced echelon basis is unique for the code, so column patterns are basis-invariant
        let reduced = self.matrix.reduced();
        let mut counts: BTreeMap<Gf2Word, usize> = BTreeMap::new();
        for j in 0..reduced.n() {
            let col = reduced.column(j)?;
            if !col.is_zero() {
                *counts.entry(col).or_default() += 1;
            }
        }
        let distinct: Vec<Gf2Word> = counts.keys().copied().collect();
        let minimal_form = distinct.len() == self.r() && GenMatrix::new(self.r(), distinct.clone())?.is_injective();
        Ok(RepAnalysis {
            min_codim: witness.weight(),
            witness,
            distinct_characters: distinct.len(),
            character_multiplicities: counts
                .into_iter()
                .map(|(pattern, multiplicity)| CharacterMultiplicity { pattern, multiplicity })
                .collect(),
            minimal_form,
        })
    }

    /// A nonzero image of weight at most `threshold`: the lowest weight
    /// available, least in word order among those.
    pub fn find_low_weight_involution(&self, threshold: usize) -> Result<Option<Gf2Word>> {
        self.ensure_effective()?;
        Ok(light_codewords(&self.matrix, threshold)?.into_iter().next())
    }

    /// Two distinct weight-4 images with overlapping supports (so their sum
    /// has weight below 8). Pairs of generator images are tried first, in
    /// row order; otherwise the first such pair among all weight-4 images in
    /// word order.
    pub fn find_weight4_pair(&self) -> Result<Option<(Gf2Word, Gf2Word)>> {
        self.ensure_effective()?;
        let first_pair = |words: &[Gf2Word]| {
            words.iter().enumerate().find_map(|(i, a)| {
                words[i + 1..].iter().find(|b| *b != a && a.overlaps(b)).map(|b| (*a, *b))
            })
        };
        let rows: Vec<Gf2Word> = self.matrix.rows().iter().filter(|w| w.weight() == 4).copied().collect();
        if let Some(pair) = first_pair(&rows) {
            return Ok(Some(pair));
        }
        let all: Vec<Gf2Word> = light_codewords(&self.matrix, 4)?.into_iter().filter(|w| w.weight() == 4).collect();
        Ok(first_pair(&all))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2::testing::{naive_codewords, naive_min_distance, naive_rank, random_full_rank};
    use crate::gf2::remark_matrix;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn rep(rows: &[&str]) -> Representation {
        Representation::new(GenMatrix::from_strs(rows).unwrap())
    }

    fn block_rep(blocks: usize, size: usize) -> Representation {
        let n = blocks * size;
        let rows = (0..blocks)
            .map(|b| Gf2Word::from_support(n, &(b * size..(b + 1) * size).collect::<Vec<_>>()).unwrap())
            .collect();
        Representation::new(GenMatrix::new(n, rows).unwrap())
    }

    #[test]
    fn identity_is_minimal() {
        let r = Representation::new(GenMatrix::identity(5).unwrap());
        let a = r.analyze().unwrap();
        assert_eq!((a.min_codim, a.distinct_characters, a.minimal_form), (1, 5, true));
        let w = r.find_low_weight_involution(1).unwrap().unwrap();
        assert_eq!(w.weight(), 1);
    }

    #[test]
    fn block_diagonal_fours() {
        let r = block_rep(3, 4);
        let a = r.analyze().unwrap();
        assert_eq!((a.min_codim, a.distinct_characters, a.minimal_form), (4, 3, true));
        assert!(a.character_multiplicities.iter().all(|c| c.multiplicity == 4));
        assert_eq!(block_rep(2, 4).find_weight4_pair().unwrap(), None);
    }

    #[test]
    fn remark_matrix_analysis() {
        let r = Representation::new(remark_matrix());
        let a = r.analyze().unwrap();
        assert_eq!(a.min_codim, 4);
        assert!(a.distinct_characters >= 5);
        assert_eq!(r.find_low_weight_involution(3).unwrap(), None);
        assert_eq!(r.find_low_weight_involution(4).unwrap().unwrap().weight(), 4);
        let (a, b) = r.find_weight4_pair().unwrap().unwrap();
        assert_eq!(a, remark_matrix().rows()[2]);
        assert_eq!(b, remark_matrix().rows()[3]);
        assert_eq!(a.add(&b).unwrap().weight(), 4);
    }

    #[test]
    fn single_weight_four_word_has_no_pair() {
        assert_eq!(rep(&["111100", "000011"]).find_weight4_pair().unwrap(), None);
    }

    #[test]
    fn weight_four_pair_beyond_generators() {
        // generator images have weights 6, 2, 2; three sums have weight 4
        let r = rep(&["111111", "110000", "101000"]);
        let (a, b) = r.find_weight4_pair().unwrap().unwrap();
        assert_eq!((a.to_bit_string().as_str(), b.to_bit_string().as_str()), ("001111", "010111"));
    }

    #[test]
    fn non_effective_rejected() {
        let r = rep(&["1100", "0011", "1111"]);
        assert!(!r.effective());
        assert_eq!(r.analyze(), Err(Error::NotEffective { rank: 2, r: 3 }));
        assert!(r.find_weight4_pair().is_err());
        assert!(r.find_low_weight_involution(2).is_err());
    }

    #[test]
    fn analysis_serialises_with_field_names() {
        let json = serde_json::to_value(block_rep(2, 4).analyze().unwrap()).unwrap();
        for key in ["min_codim", "witness", "distinct_characters", "character_multiplicities", "minimal_form"] {
            assert!(json.get(key).is_some(), "{key}");
        }
        assert_eq!(json["witness"], "00001111");
    }

    /// Visits every multiset of `n` columns from `Z_2^r` as a matrix.
    fn each_column_multiset(r: usize, n: usize, f: &mut dyn FnMut(&GenMatrix)) {
        fn go(r: usize, n: usize, start: u64, cols: &mut Vec<u64>, f: &mut dyn FnMut(&GenMatrix)) {
            if cols.len() == n {
                let rows = (0..r)
                    .map(|i| Gf2Word::from_bits(&cols.iter().map(|c| c >> i & 1 == 1).collect::<Vec<_>>()).unwrap())
                    .collect();
                f(&GenMatrix::new(n, rows).unwrap());
                return;
            }
            for c in start..1 << r {
                cols.push(c);
                go(r, n, c, cols, f);
                cols.pop();
            }
        }
        go(r, n, 0, &mut Vec::new(), f);
    }

    #[test]
    fn character_count_bound_exhaustive() {
        let mut checked = 0u64;
        for r in 1..=4 {
            for n in r..=8 {
                each_column_multiset(r, n, &mut |m| {
                    if naive_rank(m) != r {
                        return;
                    }
                    let a = Representation::new(m.clone()).analyze().unwrap();
                    assert!(a.distinct_characters >= r);
                    if a.distinct_characters == r {
                        assert!(a.minimal_form);
                    }
                    assert_eq!(a.min_codim, naive_min_distance(m));
                    checked += 1;
                });
            }
        }
        assert!(checked > 100_000);
    }

    fn random_row_operations(m: &GenMatrix, rng: &mut ChaCha8Rng) -> GenMatrix {
        let mut rows = m.rows().to_vec();
        for _ in 0..3 * rows.len() {
            let (i, j) = (rng.gen_range(0..rows.len()), rng.gen_range(0..rows.len()));
            if i != j {
                let src = rows[j];
                rows[i].xor_assign(&src);
            } else {
                let j = rng.gen_range(0..rows.len());
                rows.swap(i, j);
            }
        }
        GenMatrix::new(m.n(), rows).unwrap()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]
        #[test]
        fn basis_change_invariance(seed in any::<u64>(), r in 1usize..=6, extra in 0usize..=10) {
            let n = r + extra;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let m = random_full_rank(&mut rng, r, n);
            let other = random_row_operations(&m, &mut rng);
            let (a, b) = (Representation::new(m.clone()).analyze().unwrap(), Representation::new(other.clone()).analyze().unwrap());
            prop_assert_eq!(&a, &b);
            prop_assert_eq!(a.min_codim, naive_min_distance(&m));
            prop_assert!(naive_codewords(&m).contains(&a.witness));
            let wit = Representation::new(m).find_low_weight_involution(n).unwrap().unwrap();
            prop_assert_eq!(wit, a.witness);
        }
    }
}
