//! Shortening, puncturing and parity extension.

use crate::error::{Error, Result};
use crate::gf2::matrix::GenMatrix;

fn check_coord(m: &GenMatrix, coord: usize) -> Result<()> {
    if coord >= m.n() {
        return Err(Error::CoordOutOfRange { coord, n: m.n() });
    }
    if m.n() == 1 {
        return Err(Error::InvalidArgument("cannot delete the only coordinate".into()));
    }
    Ok(())
}

/// Generator matrix of `{ c with coordinate coord deleted : c in C, c[coord] = 0 }`.
///
/// If some row has a one at `coord` the dimension drops by one, otherwise it
/// is kept. Every shortened codeword, with a zero re-inserted at `coord`, is a
/// codeword of the original code of the same weight.
pub fn shorten(m: &GenMatrix, coord: usize) -> Result<GenMatrix> {
    check_coord(m, coord)?;
    let mut rows = m.rows().to_vec();
    if let Some(p) = rows.iter().position(|r| r.get(coord)) {
        let pivot = rows.remove(p);
        for r in rows.iter_mut().filter(|r| r.get(coord)) {
            r.xor_assign(&pivot);
        }
    }
    let rows = rows.iter().map(|r| r.delete(coord)).collect::<Result<_>>()?;
    GenMatrix::new(m.n() - 1, rows)
}

/// Deletes `coord` from every codeword and re-reduces to a full-rank basis.
pub fn puncture(m: &GenMatrix, coord: usize) -> Result<GenMatrix> {
    check_coord(m, coord)?;
    let rows = m.rows().iter().map(|r| r.delete(coord)).collect::<Result<_>>()?;
    Ok(GenMatrix::new(m.n() - 1, rows)?.reduced())
}

/// Appends an overall parity coordinate.
pub fn extend_parity(m: &GenMatrix) -> Result<GenMatrix> {
    let rows = m
        .rows()
        .iter()
        .map(|r| r.push(r.weight() % 2 == 1))
        .collect::<Result<_>>()?;
    GenMatrix::new(m.n() + 1, rows)
}
