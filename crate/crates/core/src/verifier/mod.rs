//! Verification of the numeric claims behind the codimension lemmas.
//!
//! Every check returns a [`VerificationReport`] whose evidence payload holds
//! enough to re-run it ([`VerificationReport::replay`]). Exact regimes use big
//! integers; analytic regimes compare floats with [`crate::bounds::analytic::SLACK`]
//! and report `INDETERMINATE` rather than passing inside the slack.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};
use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::codelib::{best_known_lower_bound, ConstructionRecipe};
use crate::error::{Error, Result};
use crate::gf2::{GenMatrix, Gf2Word};

pub mod lemma12;
pub mod lemma14;
pub mod remark;
pub mod shortening;
pub mod table_check;
pub mod tables;

pub use lemma12::{
    lemma12_part1_regime, lemma12_part2_regime, scan_lemma12_part2_exceptions, verify_lemma12_part1,
    verify_lemma12_part2, verify_lemma12_part3, Regime, PART2_EXCEPTIONS,
};
pub use lemma14::{classify_systematic, scan_lemma14_part2, verify_lemma14_part1, verify_lemma14_part2, ScanCounts, ScanMode};
pub use remark::verify_remark_matrix;
pub use shortening::{verify_shortening, verify_shortening_tables};
pub use table_check::verify_tables;
pub use tables::{load_tables, parse_tables, format_tables, Interval, TableEntry, TableId, TABLE_PATH_ENV};

/// Dimensions where the part-one rank hypothesis carries an extra `+1`.
pub const J: [usize; 6] = [3, 4, 7, 11, 12, 23];

/// `1` when `n` lies in [`J`], else `0`.
pub fn delta_j(n: usize) -> usize {
    usize::from(J.contains(&n))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Pass,
    Fail,
    Indeterminate,
}

impl Verdict {
    /// Combines sub-verdicts: any FAIL wins, then any INDETERMINATE.
    pub fn all(verdicts: impl IntoIterator<Item = Verdict>) -> Verdict {
        verdicts.into_iter().fold(Verdict::Pass, |acc, v| match (acc, v) {
            (Verdict::Fail, _) | (_, Verdict::Fail) => Verdict::Fail,
            (Verdict::Indeterminate, _) | (_, Verdict::Indeterminate) => Verdict::Indeterminate,
            _ => Verdict::Pass,
        })
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Indeterminate => "INDETERMINATE",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub claim_id: String,
    pub regime: String,
    pub verdict: Verdict,
    pub evidence: Value,
    pub runtime_ms: u64,
}

impl VerificationReport {
    pub(crate) fn new(claim_id: impl Into<String>, regime: impl Into<String>, verdict: Verdict, evidence: Value) -> Self {
        Self { claim_id: claim_id.into(), regime: regime.into(), verdict, evidence, runtime_ms: 0 }
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("reports serialise")
    }

    /// Re-runs the check described by `claim_id` and the parameters stored in
    /// the evidence payload.
    pub fn replay(&self) -> Result<VerificationReport> {
        let ev = &self.evidence;
        let id = self.claim_id.as_str();
        let num = |key: &str| {
            ev.get(key)
                .and_then(Value::as_u64)
                .map(|v| v as usize)
                .ok_or_else(|| Error::InvalidArgument(format!("evidence of {id} lacks {key}")))
        };
        let matrix = || -> Result<GenMatrix> {
            let rows: Vec<&str> = ev
                .get("matrix")
                .and_then(Value::as_array)
                .ok_or_else(|| Error::InvalidArgument(format!("evidence of {id} lacks matrix")))?
                .iter()
                .filter_map(Value::as_str)
                .collect();
            GenMatrix::from_strs(&rows)
        };
        if let Some(rest) = id.strip_prefix("remark.") {
            return verify_remark_matrix()
                .into_iter()
                .find(|r| r.claim_id == id)
                .ok_or_else(|| Error::InvalidArgument(format!("unknown remark assertion {rest}")));
        }
        if let Some(rest) = id.strip_prefix("tables.") {
            let table: TableId = rest.split('.').next().unwrap_or("").parse()?;
            return verify_tables(Some(table))?
                .into_iter()
                .find(|r| r.claim_id == id)
                .ok_or_else(|| Error::InvalidArgument(format!("no table row {id}")));
        }
        match id {
            "lemma12.part1" => verify_lemma12_part1(num("n")?),
            "lemma12.part2" => verify_lemma12_part2(num("n")?),
            "lemma12.part2.exceptions" => scan_lemma12_part2_exceptions(num("lo")?, num("hi")?),
            "lemma12.part3" => verify_lemma12_part3(),
            "lemma14.part1" => {
                let iota1: Gf2Word = ev
                    .get("iota1")
                    .and_then(Value::as_str)
                    .ok_or_else(|| Error::InvalidArgument("evidence lacks iota1".into()))?
                    .parse()?;
                verify_lemma14_part1(&matrix()?, &iota1)
            }
            "lemma14.part2" => verify_lemma14_part2(&matrix()?),
            "lemma14.part2.scan" => {
                let mode = match ev.get("mode").and_then(Value::as_str) {
                    Some("exhaustive") => ScanMode::Exhaustive,
                    _ => ScanMode::Sample { count: num("count")? as u64, seed: num("seed")? as u64 },
                };
                Ok(scan_lemma14_part2(mode, num("workers")?))
            }
            "shortening" => verify_shortening(&matrix()?),
            "shortening.table_sweep" => verify_shortening_tables(),
            _ => Err(Error::InvalidArgument(format!("cannot replay {id}"))),
        }
    }
}

/// Runs `f` and records its wall-clock time in the report.
pub(crate) fn timed(f: impl FnOnce() -> Result<VerificationReport>) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut report = f()?;
    report.runtime_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

/// Memoised [`best_known_lower_bound`]; table checks ask for the same pairs repeatedly.
pub fn best_known_cached(n: usize, k: usize) -> Result<(usize, ConstructionRecipe)> {
    static CACHE: OnceLock<Mutex<HashMap<(usize, usize), (usize, ConstructionRecipe)>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(hit) = cache.lock().expect("cache poisoned").get(&(n, k)) {
        return Ok(hit.clone());
    }
    let found = best_known_lower_bound(n, k)?;
    cache.lock().expect("cache poisoned").insert((n, k), found.clone());
    Ok(found)
}

pub(crate) fn matrix_rows(m: &GenMatrix) -> Vec<String> {
    m.rows().iter().map(Gf2Word::to_bit_string).collect()
}
