//! Shortening at a support coordinate: an `[n, k]` code yields an
//! `[n - 1, k - 1]` code whose words lift back with the same weight, so
//! `d(n, k) <= d(n - 1, k - 1)`.

use serde_json::json;

use super::tables::{load_tables, TableEntry};
use super::{matrix_rows, timed, VerificationReport, Verdict};
use crate::bounds::combined_upper_bound;
use crate::error::{Error, Result};
use crate::gf2::{for_each_codeword, min_distance, shorten, GenMatrix};

/// Shortened codes up to this dimension have every word lifted; above it only
/// the basis is lifted, which suffices because lifting is linear.
const FULL_LIFT_MAX_K: usize = 16;

fn claims<'a>(entries: &'a [TableEntry], length: usize, dim: usize) -> impl Iterator<Item = &'a TableEntry> {
    entries.iter().filter(move |e| e.code_length() == length && e.r == dim)
}

/// Shortens at each support coordinate of the first nonzero row.
pub fn verify_shortening(code: &GenMatrix) -> Result<VerificationReport> {
    let (n, k) = (code.n(), code.k());
    if k < 2 || n < 2 {
        return Err(Error::InvalidArgument(format!("shortening needs k >= 2, got [{n},{k}]")));
    }
    code.ensure_injective()?;
    let designated = *code
        .rows()
        .iter()
        .find(|r| !r.is_zero())
        .ok_or_else(|| Error::InvalidArgument("all rows are zero".into()))?;
    let entries = load_tables()?;
    timed(|| {
        let d = min_distance(code)?;
        let bound = combined_upper_bound(n - 1, k - 1)?.combined;
        let claimed: Vec<_> = claims(&entries, n - 1, k - 1).collect();
        // tables may disagree with each other; the loosest claim is the one compared against
        let table_hi = claimed.iter().map(|e| e.claimed.hi).max();
        let limit = table_hi.map_or(bound, |t| t.min(bound));
        let mut coords = Vec::new();
        let mut verdicts = Vec::new();
        for c in designated.support() {
            let s = shorten(code, c)?;
            let sd = min_distance(&s)?;
            let lifts = if s.k() <= FULL_LIFT_MAX_K {
                let mut ok = true;
                for_each_codeword(&s, |w| {
                    let up = w.insert(c, false).expect("length below 256");
                    ok &= up.weight() == w.weight() && code.contains(&up);
                })?;
                ok
            } else {
                s.rows().iter().all(|w| w.insert(c, false).is_ok_and(|up| code.contains(&up)))
            };
            let ok = s.k() == k - 1 && lifts && sd <= limit && sd >= d;
            verdicts.push(if ok { Verdict::Pass } else { Verdict::Fail });
            coords.push(json!({
                "coordinate": c,
                "shortened": [s.n(), s.k()],
                "min_weight": sd,
                "lifts": lifts,
                "above_a_table_claim": claimed.iter().any(|e| sd > e.claimed.hi),
            }));
        }
        Ok(VerificationReport::new(
            "shortening",
            "enumeration",
            Verdict::all(verdicts),
            json!({
                "matrix": matrix_rows(code),
                "designated": designated.to_bit_string(),
                "min_distance": d,
                "combined_upper_bound": bound,
                "table_claims": claimed,
                "limit": limit,
                "coordinates": coords,
            }),
        ))
    })
}

/// For every table row `(n, r)` with `r >= 2`: its lower end is at most the
/// upper end known for `(n - 1, r - 1)`, which is the smallest table claim
/// there or the combined bound.
pub fn verify_shortening_tables() -> Result<VerificationReport> {
    let entries = load_tables()?;
    timed(|| {
        let mut checked = 0usize;
        let mut violations = Vec::new();
        for e in &entries {
            let (len, r) = (e.code_length(), e.r);
            if r < 2 || len < 2 {
                continue;
            }
            let bound = combined_upper_bound(len - 1, r - 1)?.combined;
            let upper = claims(&entries, len - 1, r - 1).map(|o| o.claimed.hi).fold(bound, usize::min);
            checked += 1;
            if e.claimed.lo > upper {
                violations.push(json!({ "row": e, "shortened": [len - 1, r - 1], "upper": upper }));
            }
        }
        let verdict = if violations.is_empty() { Verdict::Pass } else { Verdict::Fail };
        Ok(VerificationReport::new(
            "shortening.table_sweep",
            "table",
            verdict,
            json!({ "rows_checked": checked, "violations": violations }),
        ))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2::remark_matrix;
    use crate::gf2::testing::{naive_codewords, naive_min_distance, random_full_rank};
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn remark_matrix_shortens_to_weight_four() {
        let r = verify_shortening(&remark_matrix()).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        let first = &r.evidence["coordinates"][0];
        assert_eq!((first["coordinate"].as_u64(), &first["shortened"]), (Some(0), &json!([10, 4])));
        assert!(first["min_weight"].as_u64().unwrap() <= 4);
        assert_eq!(r.replay().unwrap(), r);
    }

    #[test]
    fn identity_shortens_to_weight_one() {
        let r = verify_shortening(&GenMatrix::identity(4).unwrap()).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        assert_eq!(r.evidence["coordinates"][0]["min_weight"], 1);
    }

    #[test]
    fn preconditions() {
        assert!(verify_shortening(&GenMatrix::from_strs(&["111"]).unwrap()).is_err());
        assert!(verify_shortening(&GenMatrix::from_strs(&["110", "110"]).unwrap()).is_err());
    }

    #[test]
    fn table_sweep() {
        let r = verify_shortening_tables().unwrap();
        assert_eq!(r.verdict, Verdict::Pass, "{}", r.evidence);
        assert!(r.evidence["rows_checked"].as_u64().unwrap() > 70);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(150))]
        #[test]
        fn shortened_words_lift(seed in any::<u64>(), k in 2usize..=6, extra in 0usize..=8, pick in any::<prop::sample::Index>()) {
            let n = k + extra;
            let m = random_full_rank(&mut ChaCha8Rng::seed_from_u64(seed), k, n);
            let support: Vec<usize> = m.rows()[0].support().collect();
            let c = support[pick.index(support.len())];
            let s = shorten(&m, c).unwrap();
            prop_assert_eq!(s.k(), k - 1);
            let words = naive_codewords(&m);
            for w in naive_codewords(&s) {
                let up = w.insert(c, false).unwrap();
                prop_assert!(words.contains(&up));
                prop_assert_eq!(up.weight(), w.weight());
            }
            prop_assert!(naive_min_distance(&s) >= naive_min_distance(&m));
        }
    }
}
