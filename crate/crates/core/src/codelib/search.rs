//! Seeded searches for codes meeting a target minimum distance.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::bitset::SpaceSet;
use crate::bounds::combined_upper_bound;
use crate::error::{Error, Result};
use crate::gf2::{min_distance_at_least, GenMatrix, Gf2Word};

/// Seed used when the caller does not supply one.
pub const DEFAULT_SEED: u64 = 0x7a32_6362_0001;

/// Largest redundancy `n - k` the parity-check search accepts.
pub const COLUMN_SEARCH_MAX_R: usize = 20;

/// Samples up to `budget` random `k x n` matrices and returns the first of
/// full rank with minimum distance at least `target_d`.
///
/// Returns `None` without sampling when `target_d` exceeds the combined upper
/// bound, since no such code exists.
pub fn random_search(n: usize, k: usize, target_d: usize, budget: u64, seed: u64) -> Result<Option<GenMatrix>> {
    let report = combined_upper_bound(n, k)?;
    if target_d > report.combined {
        return Ok(None);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..budget {
        let rows = (0..k)
            .map(|_| {
                let bits: Vec<bool> = (0..n).map(|_| rng.gen()).collect();
                Gf2Word::from_bits(&bits)
            })
            .collect::<Result<_>>()?;
        let m = GenMatrix::new(n, rows)?;
        if m.is_injective() && min_distance_at_least(&m, target_d)? {
            return Ok(Some(m));
        }
    }
    Ok(None)
}

/// Tuning for [`parity_check_search`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ColumnSearchConfig {
    /// Total work budget, counted in 64-bit word operations on the layer tables.
    pub work_budget: u64,
    /// Candidate columns tried per search node.
    pub branch: usize,
    /// Nodes visited before restarting from the unit columns.
    pub restart_nodes: u64,
}

impl Default for ColumnSearchConfig {
    fn default() -> Self {
        Self { work_budget: 400_000_000, branch: 3, restart_nodes: 5_000 }
    }
}

struct ColumnState<'a> {
    d: usize,
    need: usize,
    cfg: &'a ColumnSearchConfig,
    rng: ChaCha8Rng,
    work: u64,
    nodes: u64,
}

/// `layers[j]` holds every sum of at most `j` distinct chosen columns.
fn add_column(layers: &[SpaceSet], v: u64) -> Vec<SpaceSet> {
    let mut next = layers.to_vec();
    for j in (1..layers.len()).rev() {
        next[j].union_translate(&layers[j - 1], v);
    }
    next
}

impl ColumnState<'_> {
    fn exhausted(&self) -> bool {
        self.work >= self.cfg.work_budget || self.nodes >= self.cfg.restart_nodes
    }

    fn dfs(&mut self, layers: &[SpaceSet], chosen: &mut Vec<u64>) -> bool {
        if chosen.len() == self.need {
            return true;
        }
        if self.exhausted() {
            return false;
        }
        self.nodes += 1;
        let top = &layers[self.d - 2];
        self.work += (layers.len() as u64 + 1) * (top.universe() / 64).max(1);
        let free = top.count_missing();
        if self.d > 2 && free < (self.need - chosen.len()) as u64 {
            return false;
        }
        let mut picks: Vec<u64> = Vec::with_capacity(self.cfg.branch);
        let mut attempts = 0;
        while picks.len() < self.cfg.branch && attempts < 4 * self.cfg.branch {
            attempts += 1;
            let idx = self.rng.gen_range(0..free);
            let v = top.nth_missing(idx).expect("index below the free count");
            if !picks.contains(&v) {
                picks.push(v);
            }
        }
        picks.shuffle(&mut self.rng);
        for v in picks {
            let next = add_column(layers, v);
            chosen.push(v);
            if self.dfs(&next, chosen) {
                return true;
            }
            chosen.pop();
            if self.exhausted() {
                return false;
            }
        }
        false
    }
}

/// Searches for an `[n, k, >= d]` code through its parity-check matrix
/// `H = [I_r | C]`, `r = n - k`, adding columns of `C` so that every `d - 1`
/// columns of `H` stay independent.
///
/// The generator matrix returned is `[C^T | I_k]`. `None` means the budget ran out.
pub fn parity_check_search(n: usize, k: usize, d: usize, seed: u64, cfg: &ColumnSearchConfig) -> Result<Option<GenMatrix>> {
    if k == 0 || k >= n {
        return Err(Error::InvalidArgument(format!("parity-check search needs 1 <= k < n, got n = {n}, k = {k}")));
    }
    let r = n - k;
    if r > COLUMN_SEARCH_MAX_R {
        return Err(Error::InvalidArgument(format!("redundancy {r} exceeds {COLUMN_SEARCH_MAX_R}")));
    }
    if d < 2 {
        return Err(Error::InvalidArgument("parity-check search needs d >= 2".into()));
    }
    let mut base = vec![SpaceSet::new(r as u32); d - 1];
    for layer in &mut base {
        layer.insert(0);
    }
    for j in 0..r {
        base = add_column(&base, 1 << j);
    }
    let mut state = ColumnState { d, need: k, cfg, rng: ChaCha8Rng::seed_from_u64(seed), work: 0, nodes: 0 };
    while state.work < cfg.work_budget {
        state.nodes = 0;
        let mut chosen = Vec::with_capacity(k);
        if state.dfs(&base, &mut chosen) {
            let rows = chosen
                .iter()
                .enumerate()
                .map(|(i, &c)| {
                    let mut support: Vec<usize> = (0..r).filter(|&j| c >> j & 1 == 1).collect();
                    support.push(r + i);
                    Gf2Word::from_support(n, &support)
                })
                .collect::<Result<_>>()?;
            return Ok(Some(GenMatrix::new(n, rows)?));
        }
        if state.nodes == 0 {
            break;
        }
    }
    Ok(None)
}
