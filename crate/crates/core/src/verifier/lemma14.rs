//! Low-weight involutions for small codes: the shortening witness, the
//! `[11, 5]` dichotomy, and the scan over systematic `[11, 5]` generators.

use std::ops::AddAssign;

use rand::RngCore;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::json;

use super::{matrix_rows, timed, VerificationReport, Verdict};
use crate::error::{Error, Result};
use crate::gf2::{light_codewords, shorten, weight_distribution, GenMatrix, Gf2Word};
use crate::isotropy::Representation;

const SCAN_BITS: u32 = 30;
const SCAN_SPACE: u64 = 1 << SCAN_BITS;
/// Failing matrices kept in a scan report.
const MAX_FAIL_EXAMPLES: usize = 16;

const COVERAGE: &str = "every [11,5] code is equivalent under a column permutation to one with a \
systematic generator [I5 | A]; weights, the existence of weight-4 words and the overlap of \
their supports are invariant under column permutations, so the 2^30 matrices A cover all cases";

/// A witness `iota2` outside `<iota1>` with `|iota2| <= (n - 1) / 2`, found by
/// shortening at the first support coordinate of `iota1`.
pub fn verify_lemma14_part1(code: &GenMatrix, iota1: &Gf2Word) -> Result<VerificationReport> {
    let (n, k) = (code.n(), code.k());
    if !((k >= 5 && n <= 12) || (k == 4 && n <= 7)) {
        return Err(Error::OutOfRegime(format!("[{n},{k}] needs k >= 5 and n <= 12, or k = 4 and n <= 7")));
    }
    code.ensure_injective()?;
    if iota1.len() != n || iota1.is_zero() || !code.contains(iota1) {
        return Err(Error::OutOfRegime("iota1 must be a nonzero codeword".into()));
    }
    timed(|| {
        let coord = iota1.first_one().expect("nonzero");
        let shortened = shorten(code, coord)?;
        let light = light_codewords(&shortened, shortened.n())?;
        let lifted = light[0].insert(coord, false)?;
        let bound = (n - 1) / 2;
        let verdict = if 2 * lifted.weight() <= n - 1 { Verdict::Pass } else { Verdict::Fail };
        Ok(VerificationReport::new(
            "lemma14.part1",
            "enumeration",
            verdict,
            json!({
                "matrix": matrix_rows(code),
                "iota1": iota1.to_bit_string(),
                "shorten_coordinate": coord,
                "shortened": [shortened.n(), shortened.k()],
                "iota2": lifted.to_bit_string(),
                "iota2_weight": lifted.weight(),
                "weight_limit": bound,
            }),
        ))
    })
}

/// Either a nonzero word of weight at most 3, or two weight-4 words with
/// overlapping supports.
pub fn verify_lemma14_part2(code: &GenMatrix) -> Result<VerificationReport> {
    if (code.n(), code.k()) != (11, 5) {
        return Err(Error::OutOfRegime(format!("need an [11,5] code, got [{},{}]", code.n(), code.k())));
    }
    code.ensure_injective()?;
    let light = light_codewords(code, 4)?;
    if !light.iter().any(|w| w.weight() == 4) {
        return Err(Error::OutOfRegime("code has no weight-4 word".into()));
    }
    timed(|| {
        let rows = matrix_rows(code);
        if let Some(w) = light.iter().find(|w| w.weight() <= 3) {
            return Ok(VerificationReport::new(
                "lemma14.part2",
                "enumeration",
                Verdict::Pass,
                json!({ "matrix": rows, "conclusion": "a", "witness": w.to_bit_string(), "weight": w.weight() }),
            ));
        }
        let report = match Representation::new(code.clone()).find_weight4_pair()? {
            Some((a, b)) => VerificationReport::new(
                "lemma14.part2",
                "enumeration",
                Verdict::Pass,
                json!({
                    "matrix": rows,
                    "conclusion": "b",
                    "pair": [a.to_bit_string(), b.to_bit_string()],
                    "product_weight": a.add(&b)?.weight(),
                }),
            ),
            None => VerificationReport::new(
                "lemma14.part2",
                "enumeration",
                Verdict::Fail,
                json!({ "matrix": rows, "weight_distribution": weight_distribution(code)?.weight_distribution }),
            ),
        };
        Ok(report)
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Classification {
    NoWeight4,
    ConclusionA,
    ConclusionB,
    Fail,
}

/// Classifies the code generated by `[I5 | A]`, where bits `6i..6i+6` of `a`
/// are row `i` of `A`.
pub fn classify_systematic(a: u32) -> Classification {
    let mut rows = [0u16; 5];
    for (i, row) in rows.iter_mut().enumerate() {
        *row = (1 << i) | ((((a >> (6 * i)) & 63) as u16) << 5);
    }
    let mut words = [0u16; 32];
    for mask in 1..32usize {
        let low = mask.trailing_zeros() as usize;
        words[mask] = words[mask & (mask - 1)] ^ rows[low];
    }
    let mut fours = [0u16; 31];
    let mut count = 0;
    let mut light = false;
    for &w in &words[1..] {
        match w.count_ones() {
            0..=3 => light = true,
            4 => {
                fours[count] = w;
                count += 1;
            }
            _ => {}
        }
    }
    if count == 0 {
        return Classification::NoWeight4;
    }
    if light {
        return Classification::ConclusionA;
    }
    let fours = &fours[..count];
    let overlapping = fours.iter().enumerate().any(|(i, &x)| fours[i + 1..].iter().any(|&y| x & y != 0));
    if overlapping {
        Classification::ConclusionB
    } else {
        Classification::Fail
    }
}

/// The generator `[I5 | A]` that [`classify_systematic`] reads from `a`.
pub fn systematic_matrix(a: u32) -> GenMatrix {
    let rows = (0..5)
        .map(|i| {
            let packed = (1u64 << i) | (u64::from((a >> (6 * i)) & 63) << 5);
            Gf2Word::from_packed(11, packed).expect("11 bits")
        })
        .collect();
    GenMatrix::new(11, rows).expect("rows have length 11")
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct ScanCounts {
    pub total: u64,
    pub no_weight4: u64,
    pub conclusion_a: u64,
    pub conclusion_b: u64,
    pub fail: u64,
}

impl ScanCounts {
    fn record(&mut self, c: Classification) {
        self.total += 1;
        match c {
            Classification::NoWeight4 => self.no_weight4 += 1,
            Classification::ConclusionA => self.conclusion_a += 1,
            Classification::ConclusionB => self.conclusion_b += 1,
            Classification::Fail => self.fail += 1,
        }
    }
}

impl AddAssign for ScanCounts {
    fn add_assign(&mut self, o: Self) {
        self.total += o.total;
        self.no_weight4 += o.no_weight4;
        self.conclusion_a += o.conclusion_a;
        self.conclusion_b += o.conclusion_b;
        self.fail += o.fail;
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScanMode {
    /// `count` matrices drawn from a seeded stream; draw `i` depends only on `(seed, i)`.
    Sample { count: u64, seed: u64 },
    Exhaustive,
}

/// Matrix index of draw `i` in sample mode.
fn sample_index(rng: &mut ChaCha8Rng) -> u32 {
    (rng.next_u64() & (SCAN_SPACE - 1)) as u32
}

fn scan_range(mode: ScanMode, start: u64, end: u64) -> (ScanCounts, Vec<u32>) {
    let mut counts = ScanCounts::default();
    let mut fails = Vec::new();
    let mut visit = |a: u32| {
        let c = classify_systematic(a);
        if c == Classification::Fail && fails.len() < MAX_FAIL_EXAMPLES {
            fails.push(a);
        }
        counts.record(c);
    };
    match mode {
        ScanMode::Exhaustive => (start..end).for_each(|a| visit(a as u32)),
        ScanMode::Sample { seed, .. } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            // each draw consumes two 32-bit words of the stream
            rng.set_word_pos(u128::from(start) * 2);
            (start..end).for_each(|_| visit(sample_index(&mut rng)));
        }
    }
    (counts, fails)
}

/// Classifies systematic `[11, 5]` generators, split into contiguous blocks
/// across `workers` threads. Counts do not depend on `workers`.
pub fn scan_lemma14_part2(mode: ScanMode, workers: usize) -> VerificationReport {
    let start = std::time::Instant::now();
    let workers = workers.max(1);
    let total = match mode {
        ScanMode::Sample { count, .. } => count,
        ScanMode::Exhaustive => SCAN_SPACE,
    };
    let chunk = total.div_ceil(workers as u64).max(1);
    let parts: Vec<(ScanCounts, Vec<u32>)> = std::thread::scope(|s| {
        let handles: Vec<_> = (0..workers as u64)
            .map(|w| {
                let (lo, hi) = ((w * chunk).min(total), ((w + 1) * chunk).min(total));
                s.spawn(move || scan_range(mode, lo, hi))
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("scan worker panicked")).collect()
    });
    let mut counts = ScanCounts::default();
    let mut fails = Vec::new();
    for (c, f) in parts {
        counts += c;
        fails.extend(f);
    }
    fails.sort_unstable();
    fails.dedup();
    fails.truncate(MAX_FAIL_EXAMPLES);
    let verdict = if counts.fail == 0 { Verdict::Pass } else { Verdict::Fail };
    let mut evidence = match mode {
        ScanMode::Sample { count, seed } => json!({ "mode": "sample", "count": count, "seed": seed }),
        ScanMode::Exhaustive => json!({ "mode": "exhaustive" }),
    };
    evidence["workers"] = json!(workers);
    evidence["counts"] = json!(counts);
    evidence["fail_examples"] = json!(fails
        .iter()
        .map(|&a| json!({ "index": a, "matrix": matrix_rows(&systematic_matrix(a)) }))
        .collect::<Vec<_>>());
    evidence["coverage"] = json!(COVERAGE);
    let mut report = VerificationReport::new("lemma14.part2.scan", "scan", verdict, evidence);
    report.runtime_ms = start.elapsed().as_millis() as u64;
    report
}

/// [`classify_systematic`] through the general enumerator.
#[cfg(test)]
fn slow_classify(a: u32) -> Classification {
    let m = systematic_matrix(a);
    match verify_lemma14_part2(&m) {
        Err(_) => Classification::NoWeight4,
        Ok(r) if r.verdict == Verdict::Fail => Classification::Fail,
        Ok(r) if r.evidence["conclusion"] == "a" => Classification::ConclusionA,
        Ok(_) => Classification::ConclusionB,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codelib::named_code;
    use crate::gf2::remark_matrix;
    use proptest::prelude::*;

    fn word(s: &str) -> Gf2Word {
        s.parse().unwrap()
    }

    #[test]
    fn part1_remark_matrix() {
        let m = remark_matrix();
        let r = verify_lemma14_part1(&m, &m.rows()[0]).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        assert!(r.evidence["iota2_weight"].as_u64().unwrap() <= 5);
        assert_eq!(r.evidence["shortened"], json!([10, 4]));
        let iota2 = word(r.evidence["iota2"].as_str().unwrap());
        assert!(m.contains(&iota2) && iota2 != m.rows()[0]);
    }

    #[test]
    fn part1_hamming() {
        let m = named_code("hamming(3)").unwrap();
        let w = light_codewords(&m, 3).unwrap()[0];
        let r = verify_lemma14_part1(&m, &w).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        assert!(r.evidence["iota2_weight"].as_u64().unwrap() <= 3);
    }

    #[test]
    fn part1_preconditions() {
        let m = GenMatrix::from_strs(&["10000001", "01000001", "00100001", "00010001"]).unwrap();
        assert!(matches!(verify_lemma14_part1(&m, &m.rows()[0]), Err(Error::OutOfRegime(_))));
        let ham = named_code("hamming(3)").unwrap();
        assert!(matches!(verify_lemma14_part1(&ham, &word("1000000")), Err(Error::OutOfRegime(_))));
        assert!(verify_lemma14_part1(&ham, &Gf2Word::zero(7).unwrap()).is_err());
    }

    #[test]
    fn part2_remark_matrix_needs_b() {
        let m = remark_matrix();
        let r = verify_lemma14_part2(&m).unwrap();
        assert_eq!((r.verdict, r.evidence["conclusion"].as_str()), (Verdict::Pass, Some("b")));
        assert_eq!(r.evidence["pair"], json!([m.rows()[2].to_bit_string(), m.rows()[3].to_bit_string()]));
        assert_eq!(r.evidence["product_weight"], 4);
    }

    #[test]
    fn part2_conclusion_a_and_preconditions() {
        let m = GenMatrix::from_strs(&["11100000000", "00011110000", "00000001100", "00000000011", "10010000001"]).unwrap();
        let r = verify_lemma14_part2(&m).unwrap();
        assert_eq!(r.evidence["conclusion"], "a");
        let no_four = (0..1 << 30).find(|&a| classify_systematic(a) == Classification::NoWeight4).unwrap();
        assert!(matches!(verify_lemma14_part2(&systematic_matrix(no_four)), Err(Error::OutOfRegime(_))));
        assert!(verify_lemma14_part2(&named_code("hamming(3)").unwrap()).is_err());
    }

    #[test]
    fn remark_matrix_is_systematic_equivalent_and_classified_b() {
        let (sys, _) = remark_matrix().systematic_form().unwrap();
        let mut a = 0u32;
        for (i, row) in sys.rows().iter().enumerate() {
            a |= ((row.packed_low() >> 5) as u32 & 63) << (6 * i);
        }
        assert_eq!(systematic_matrix(a), sys);
        assert_eq!(classify_systematic(a), Classification::ConclusionB);
    }

    #[test]
    fn sample_scan_worker_invariance() {
        let one = scan_lemma14_part2(ScanMode::Sample { count: 20_000, seed: 7 }, 1);
        for w in [2, 3, 8] {
            let many = scan_lemma14_part2(ScanMode::Sample { count: 20_000, seed: 7 }, w);
            assert_eq!(one.evidence["counts"], many.evidence["counts"]);
        }
        assert_eq!(one.verdict, Verdict::Pass);
        assert_eq!(one.evidence["counts"]["total"], 20_000);
    }

    #[test]
    fn replay_of_scan() {
        let r = scan_lemma14_part2(ScanMode::Sample { count: 1000, seed: 3 }, 2);
        let again = r.replay().unwrap();
        assert_eq!((again.verdict, &again.evidence), (r.verdict, &r.evidence));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(400))]
        #[test]
        fn fast_and_general_routes_agree(a in 0u32..(1 << 30)) {
            prop_assert_eq!(classify_systematic(a), slow_classify(a));
        }
    }
}
