use std::fmt;

use crate::error::{Error, Result};
use crate::gf2::word::{Gf2Word, MAX_LEN};

/// A `k x n` matrix over GF(2) whose rows generate a binary linear code.
///
/// The same type models an isotropy representation `Z_2^r -> Z_2^n`: row `i`
/// is the image of the `i`-th generator. Rows may be dependent; operations
/// that need injectivity check the rank and return [`Error::NotInjective`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GenMatrix {
    n: usize,
    rows: Vec<Gf2Word>,
}

/// Reduced row echelon form of a matrix: nonzero rows and their pivot columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Echelon {
    pub rows: Vec<Gf2Word>,
    pub pivots: Vec<usize>,
}

impl Echelon {
    /// Reduces `word` against the echelon rows; zero iff `word` is in the row space.
    pub fn reduce(&self, word: &Gf2Word) -> Gf2Word {
        let mut w = *word;
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if w.get(p) {
                w.xor_assign(row);
            }
        }
        w
    }
}

impl GenMatrix {
    pub fn new(n: usize, rows: Vec<Gf2Word>) -> Result<Self> {
        if n == 0 || n > MAX_LEN {
            return Err(Error::InvalidLength(n));
        }
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::LengthMismatch { left: n, right: bad.len() });
        }
        Ok(Self { n, rows })
    }

    /// The dimension-zero code of length `n`.
    pub fn empty(n: usize) -> Result<Self> {
        Self::new(n, Vec::new())
    }

    pub fn identity(n: usize) -> Result<Self> {
        let rows = (0..n).map(|i| Gf2Word::from_support(n, &[i])).collect::<Result<_>>()?;
        Self::new(n, rows)
    }

    /// Builds a matrix from `'0'/'1'` row strings.
    pub fn from_strs(rows: &[&str]) -> Result<Self> {
        let words = rows.iter().map(|r| r.parse()).collect::<Result<Vec<Gf2Word>>>()?;
        let n = words.first().map(Gf2Word::len).ok_or(Error::EmptyCode)?;
        Self::new(n, words)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Gf2Word] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Gf2Word> {
        self.rows
    }

    pub fn echelon(&self) -> Echelon {
        let mut rows = self.rows.clone();
        let mut pivots = Vec::new();
        let mut top = 0;
        for col in 0..self.n {
            let Some(found) = (top..rows.len()).find(|&i| rows[i].get(col)) else {
                continue;
            };
            rows.swap(top, found);
            let pivot_row = rows[top];
            for (i, row) in rows.iter_mut().enumerate() {
                if i != top && row.get(col) {
                    row.xor_assign(&pivot_row);
                }
            }
            pivots.push(col);
            top += 1;
            if top == rows.len() {
                break;
            }
        }
        rows.truncate(top);
        Echelon { rows, pivots }
    }

    pub fn rank(&self) -> usize {
        self.echelon().rows.len()
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.k()
    }

    pub fn ensure_injective(&self) -> Result<()> {
        let rank = self.rank();
        if rank == self.k() {
            Ok(())
        } else {
            Err(Error::NotInjective { rank, k: self.k() })
        }
    }

    /// Full-rank basis of the row space in reduced row echelon form.
    pub fn reduced(&self) -> GenMatrix {
        GenMatrix { n: self.n, rows: self.echelon().rows }
    }

    /// Whether `word` is a codeword.
    pub fn contains(&self, word: &Gf2Word) -> bool {
        word.len() == self.n && self.echelon().reduce(word).is_zero()
    }

    /// The codeword `sum_{i in mask} row_i` for `k <= 64`.
    pub fn encode(&self, mask: u64) -> Gf2Word {
        let mut w = Gf2Word::zero(self.n).expect("n validated at construction");
        for (i, row) in self.rows.iter().enumerate() {
            if (mask >> i) & 1 == 1 {
                w.xor_assign(row);
            }
        }
        w
    }

    /// Column `j` as a word of length `k` (coordinate `i` = entry of row `i`).
    pub fn column(&self, j: usize) -> Result<Gf2Word> {
        if j >= self.n {
            return Err(Error::CoordOutOfRange { coord: j, n: self.n });
        }
        let bits: Vec<bool> = self.rows.iter().map(|r| r.get(j)).collect();
        Gf2Word::from_bits(&bits)
    }

    /// Output column `j` is input column `perm[j]`.
    pub fn permute_columns(&self, perm: &[usize]) -> Result<GenMatrix> {
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidArgument("not a permutation".into()));
            }
        }
        let rows = self.rows.iter().map(|r| r.permute(perm)).collect::<Result<_>>()?;
        GenMatrix::new(self.n, rows)
    }

    /// Row-equivalent matrix `[I_k | A]` after the returned column permutation.
    ///
    /// The permutation lists, for each output column, the input column it came
    /// from: pivot columns first in order, then the rest ascending.
    pub fn systematic_form(&self) -> Result<(GenMatrix, Vec<usize>)> {
        self.ensure_injective()?;
        let ech = self.echelon();
        let mut perm = ech.pivots.clone();
        perm.extend((0..self.n).filter(|c| !ech.pivots.contains(c)));
        let reduced = GenMatrix { n: self.n, rows: ech.rows };
        Ok((reduced.permute_columns(&perm)?, perm))
    }

    /// Appends a row (no independence check).
    pub fn with_row(mut self, row: Gf2Word) -> Result<GenMatrix> {
        if row.len() != self.n {
            return Err(Error::LengthMismatch { left: self.n, right: row.len() });
        }
        self.rows.push(row);
        Ok(self)
    }
}

impl fmt::Debug for GenMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "GenMatrix[{}x{}]", self.k(), self.n)?;
        for r in &self.rows {
            writeln!(f, "  {r}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2::testing::{naive_rank, remark_matrix};

    #[test]
    fn rank_of_remark_matrix() {
        let m = remark_matrix();
        assert_eq!(naive_rank(&m), 5);
        assert_eq!(m.rank(), 5);
    }

    #[test]
    fn rank_of_identity_and_duplicated_row() {
        assert_eq!(GenMatrix::identity(9).unwrap().rank(), 9);
        let m = GenMatrix::from_strs(&["1100", "0110", "1100"]).unwrap();
        assert_eq!(m.rank(), 2);
        assert_eq!(m.ensure_injective(), Err(Error::NotInjective { rank: 2, k: 3 }));
    }

    #[test]
    fn systematic_identity_is_trivial() {
        let id = GenMatrix::identity(5).unwrap();
        let (sys, perm) = id.systematic_form().unwrap();
        assert_eq!(sys, id);
        assert_eq!(perm, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn systematic_form_has_leading_identity() {
        let m = remark_matrix();
        let (sys, perm) = m.systematic_form().unwrap();
        for (i, row) in sys.rows().iter().enumerate() {
            for j in 0..sys.k() {
                assert_eq!(row.get(j), i == j);
            }
        }
        // the permuted original generates the same code as the systematic matrix
        let permuted = m.permute_columns(&perm).unwrap();
        for row in sys.rows() {
            assert!(permuted.contains(row));
        }
    }

    #[test]
    fn systematic_form_rejects_dependent_rows() {
        let m = GenMatrix::from_strs(&["101", "101"]).unwrap();
        assert!(matches!(m.systematic_form(), Err(Error::NotInjective { .. })));
    }

    #[test]
    fn contains_recognises_codewords() {
        let m = remark_matrix();
        let sum = m.rows()[2].add(&m.rows()[3]).unwrap();
        assert!(m.contains(&sum));
        assert!(!m.contains(&"10000000000".parse().unwrap()));
    }
}
