//! Greedy lexicographic codes.
//!
//! Words of length `n` are identified with integers whose most significant
//! bit is coordinate 0, so integer order is the lexicographic order of bit
//! strings. The greedy code is linear: it is spanned by the successive
//! smallest words at distance at least `d` from everything admitted so far.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use super::bitset::SpaceSet;
use crate::error::{Error, Result};
use crate::gf2::{GenMatrix, Gf2Word};

/// Largest length handled; the covered set is a `2^n`-bit table.
pub const LEXICODE_MAX_N: usize = 26;

fn word_of(n: usize, x: u64) -> Result<Gf2Word> {
    let support: Vec<usize> = (0..n).filter(|&i| x >> (n - 1 - i) & 1 == 1).collect();
    Gf2Word::from_support(n, &support)
}

fn compute(n: usize, d: usize) -> Result<GenMatrix> {
    let mut covered = SpaceSet::new(n as u32);
    for x in 0..covered.universe() {
        if (x.count_ones() as usize) < d {
            covered.insert(x);
        }
    }
    // covered = code + ball(d - 1); the next basis word is the least word outside it
    let mut basis = Vec::new();
    let mut from = 0;
    while let Some(x) = covered.next_missing(from) {
        basis.push(word_of(n, x)?);
        let snapshot = covered.clone();
        covered.union_translate(&snapshot, x);
        from = x + 1;
    }
    GenMatrix::new(n, basis)
}

/// Basis of the lexicode of length `n` and minimum distance at least `d`.
///
/// Results are memoised per `(n, d)`.
pub fn lexicode(n: usize, d: usize) -> Result<GenMatrix> {
    if d == 0 || d > n {
        return Err(Error::InvalidArgument(format!("lexicode needs 1 <= d <= n, got n = {n}, d = {d}")));
    }
    if n > LEXICODE_MAX_N {
        return Err(Error::InvalidArgument(format!("lexicode length {n} exceeds {LEXICODE_MAX_N}")));
    }
    static CACHE: OnceLock<Mutex<HashMap<(usize, usize), GenMatrix>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(m) = cache.lock().expect("lexicode cache poisoned").get(&(n, d)) {
        return Ok(m.clone());
    }
    let m = compute(n, d)?;
    cache.lock().expect("lexicode cache poisoned").insert((n, d), m.clone());
    Ok(m)
}
