//! Lower bounds on the largest minimum distance of `[n, k]` codes, each
//! backed by a replayable recipe whose distance is re-established by
//! enumeration.
//!
//! Candidates are tried in a fixed order (trivial codes, derivation plans
//! from named codes and lexicodes, parity-check search, random search); a
//! later candidate replaces the incumbent only when strictly better, so ties
//! go to the earliest one.

use super::lexicode::lexicode;
use super::named::NamedCode;
use super::recipe::{certified_min_distance, Base, ConstructionRecipe, Derivation};
use super::search::{parity_check_search, random_search, ColumnSearchConfig, DEFAULT_SEED};
use crate::bounds::combined_upper_bound;
use crate::error::{Error, Result};
use crate::gf2::{extend_parity, GenMatrix, Gf2Word};

/// Largest length accepted by [`best_known_lower_bound`].
pub const BEST_KNOWN_MAX_N: usize = 70;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BestKnownOptions {
    /// Maximum number of derivation steps applied to a base code.
    pub max_depth: usize,
    /// Longest lexicode used as a base.
    pub max_lexicode_n: usize,
    /// Derivation plans evaluated at most.
    pub max_plans: usize,
    pub column_search: ColumnSearchConfig,
    /// Largest redundancy handed to the parity-check search.
    pub column_search_max_r: usize,
    pub random_budget: u64,
    pub seed: u64,
}

impl Default for BestKnownOptions {
    fn default() -> Self {
        Self {
            max_depth: 8,
            max_lexicode_n: 24,
            max_plans: 32,
            column_search: ColumnSearchConfig::default(),
            column_search_max_r: 16,
            random_budget: 200,
            seed: DEFAULT_SEED,
        }
    }
}

struct Plan {
    base: Base,
    name: String,
    extend: bool,
    shorten: usize,
    puncture: usize,
    /// Distance guaranteed by the base parameters alone.
    guaranteed: usize,
    /// Distance before puncturing, an upper estimate for the plan.
    ceiling: usize,
}

/// Largest `d` found for an `[n, k]` code together with its recipe.
pub fn best_known_lower_bound(n: usize, k: usize) -> Result<(usize, ConstructionRecipe)> {
    best_known_with(n, k, &BestKnownOptions::default())
}

pub fn best_known_with(n: usize, k: usize, opts: &BestKnownOptions) -> Result<(usize, ConstructionRecipe)> {
    if k == 0 || k > n || n > BEST_KNOWN_MAX_N {
        return Err(Error::InvalidArgument(format!("need 1 <= k <= n <= {BEST_KNOWN_MAX_N}, got n = {n}, k = {k}")));
    }
    let upper = combined_upper_bound(n, k)?.combined;
    let mut best = Incumbent { n, k, found: None };

    best.offer(trivial_recipe(n, k)?)?;
    if best.d() >= upper {
        return best.finish();
    }

    for plan in plans(n, k, opts)? {
        if best.d() >= upper {
            break;
        }
        if plan.ceiling <= best.d() {
            continue;
        }
        if let Some(recipe) = execute(&plan, n, k)? {
            best.offer(recipe)?;
        }
    }

    let r = n - k;
    if r >= 1 && k <= 32 {
        let mut target = best.d() + 1;
        while target <= upper {
            let Some(recipe) = column_recipe(n, k, target, opts)? else { break };
            if !best.offer(recipe)? {
                break;
            }
            target = best.d() + 1;
        }
    }

    if best.d() < upper && n <= 24 && opts.random_budget > 0 {
        let target = best.d() + 1;
        if let Some(m) = random_search(n, k, target, opts.random_budget, opts.seed)? {
            let origin = format!("random search seed {}", opts.seed);
            best.offer(ConstructionRecipe::new(
                "random",
                Base::Explicit { origin, matrix: m },
                vec![],
                (n, k, target),
            ))?;
        }
    }
    best.finish()
}

struct Incumbent {
    n: usize,
    k: usize,
    found: Option<(usize, ConstructionRecipe)>,
}

impl Incumbent {
    fn d(&self) -> usize {
        self.found.as_ref().map_or(0, |(d, _)| *d)
    }

    /// Replays `recipe`, certifies its distance, and keeps it if strictly better.
    fn offer(&mut self, mut recipe: ConstructionRecipe) -> Result<bool> {
        let m = recipe.replay()?;
        if (m.n(), m.k()) != (self.n, self.k) || !m.is_injective() {
            return Ok(false);
        }
        let Some(d) = certified_min_distance(&m)? else {
            return Ok(false);
        };
        if d <= self.d() {
            return Ok(false);
        }
        recipe.claimed = (self.n, self.k, d);
        self.found = Some((d, recipe));
        Ok(true)
    }

    fn finish(self) -> Result<(usize, ConstructionRecipe)> {
        self.found.ok_or_else(|| Error::InvalidArgument("no construction certified".into()))
    }
}

/// Full space, repetition or parity code where they apply, otherwise `k`
/// disjoint blocks covering the coordinates (minimum distance `floor(n/k)`).
fn trivial_recipe(n: usize, k: usize) -> Result<ConstructionRecipe> {
    let named = if k == n {
        Some(NamedCode::Full(n))
    } else if k == 1 {
        Some(NamedCode::Repetition(n))
    } else if k == n - 1 {
        Some(NamedCode::Parity(n))
    } else {
        None
    };
    if let Some(code) = named {
        return Ok(ConstructionRecipe::new(code.to_string(), Base::Named(code), vec![], code.parameters()));
    }
    let rows = (0..k)
        .map(|i| Gf2Word::from_support(n, &(i..n).step_by(k).collect::<Vec<_>>()))
        .collect::<Result<_>>()?;
    let matrix = GenMatrix::new(n, rows)?;
    Ok(ConstructionRecipe::new("blocks", Base::Explicit { origin: "disjoint blocks".into(), matrix }, vec![], (n, k, n / k)))
}

fn plans(n: usize, k: usize, opts: &BestKnownOptions) -> Result<Vec<Plan>> {
    let mut out = Vec::new();
    let max_n = n + opts.max_depth;
    let mut push = |base: Base, name: String, (bn, bk, bd): (usize, usize, usize), truncatable: bool| {
        for extend in [false, true] {
            if extend && bd % 2 == 0 {
                continue;
            }
            let (en, ed) = if extend { (bn + 1, bd + 1) } else { (bn, bd) };
            if en < n || bk < k {
                continue;
            }
            let room = en - n;
            let shorten = if truncatable { (bk - k).min(room) } else { bk - k };
            if shorten > room {
                continue;
            }
            let puncture = room - shorten;
            if usize::from(extend) + shorten + puncture > opts.max_depth || puncture >= ed {
                continue;
            }
            let base = match (&base, truncatable) {
                (Base::Lexicode { n: ln, d: ld, .. }, true) if k + shorten < bk => {
                    Base::Lexicode { n: *ln, d: *ld, dim: Some(k + shorten) }
                }
                _ => base.clone(),
            };
            out.push(Plan { base, name: name.clone(), extend, shorten, puncture, guaranteed: ed - puncture, ceiling: ed });
        }
    };
    for code in NamedCode::catalogue(max_n) {
        push(Base::Named(code), code.to_string(), code.parameters(), false);
    }
    for ln in n..=max_n.min(opts.max_lexicode_n) {
        for ld in 2..=ln {
            let lex = lexicode(ln, ld)?;
            if lex.k() < k {
                break;
            }
            push(Base::Lexicode { n: ln, d: ld, dim: None }, format!("lexicode({ln},{ld})"), (ln, lex.k(), ld), true);
        }
    }
    // best guarantee first, then fewest steps; the sort is stable so catalogue order breaks ties
    out.sort_by_key(|p| (std::cmp::Reverse(p.guaranteed), usize::from(p.extend) + p.shorten + p.puncture));
    out.truncate(opts.max_plans);
    Ok(out)
}

/// Enumeration cost of trying every coordinate for the next step.
fn greedy_affordable(m: &GenMatrix) -> bool {
    m.k() <= 20 && (1u64 << m.k()) * (m.n() as u64) <= 1 << 24
}

fn best_step(m: &GenMatrix, steps: impl Iterator<Item = Derivation>, target_k: usize) -> Result<Option<(Derivation, GenMatrix)>> {
    let greedy = greedy_affordable(m);
    let mut best: Option<(usize, Derivation, GenMatrix)> = None;
    for step in steps {
        let next = step.apply(m)?;
        if next.k() != target_k {
            continue;
        }
        if !greedy {
            return Ok(Some((step, next)));
        }
        let d = certified_min_distance(&next)?.unwrap_or(0);
        if best.as_ref().is_none_or(|(bd, _, _)| d > *bd) {
            best = Some((d, step, next));
        }
    }
    Ok(best.map(|(_, s, m)| (s, m)))
}

fn execute(plan: &Plan, n: usize, k: usize) -> Result<Option<ConstructionRecipe>> {
    let mut m = plan.base.build()?;
    let mut steps = Vec::new();
    if plan.extend {
        m = extend_parity(&m)?;
        steps.push(Derivation::ExtendParity);
    }
    for _ in 0..plan.shorten {
        let target = m.k() - 1;
        let candidates = (0..m.n()).map(Derivation::Shorten);
        let Some((step, next)) = best_step(&m, candidates, target)? else {
            return Ok(None);
        };
        steps.push(step);
        m = next;
    }
    for _ in 0..plan.puncture {
        let target = m.k();
        let candidates = (0..m.n()).rev().map(Derivation::Puncture);
        let Some((step, next)) = best_step(&m, candidates, target)? else {
            return Ok(None);
        };
        steps.push(step);
        m = next;
    }
    Ok(Some(ConstructionRecipe::new(plan.name.clone(), plan.base.clone(), steps, (n, k, plan.guaranteed))))
}

/// Parity-check search for `[n, k, d]`; even `d` is searched as `[n-1, k, d-1]`
/// and extended by a parity coordinate.
fn column_recipe(n: usize, k: usize, d: usize, opts: &BestKnownOptions) -> Result<Option<ConstructionRecipe>> {
    let (sn, sd, extend) = if d % 2 == 0 && d >= 4 { (n - 1, d - 1, true) } else { (n, d, false) };
    if sd < 2 || k >= sn || sn - k > opts.column_search_max_r {
        return Ok(None);
    }
    let seed = opts.seed ^ ((sn as u64) << 32 | (k as u64) << 16 | sd as u64);
    let Some(matrix) = parity_check_search(sn, k, sd, seed, &opts.column_search)? else {
        return Ok(None);
    };
    let origin = format!("parity-check search seed {seed}");
    let steps = if extend { vec![Derivation::ExtendParity] } else { vec![] };
    Ok(Some(ConstructionRecipe::new("column search", Base::Explicit { origin, matrix }, steps, (n, k, d))))
}
