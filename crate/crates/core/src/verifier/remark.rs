//! The four assertions about the `5 x 11` remark matrix, each checked by
//! enumerating its 31 nonzero codewords.

use serde_json::json;

use super::{matrix_rows, VerificationReport, Verdict};
use crate::gf2::{light_codewords, remark_matrix, weight_distribution};
use crate::isotropy::Representation;

fn pass_if(ok: bool) -> Verdict {
    if ok {
        Verdict::Pass
    } else {
        Verdict::Fail
    }
}

pub fn verify_remark_matrix() -> Vec<VerificationReport> {
    let m = remark_matrix();
    let rows = matrix_rows(&m);
    let iota1 = m.rows()[0];
    let summary = weight_distribution(&m).expect("k = 5");
    let fours: Vec<_> = light_codewords(&m, 4).expect("k = 5").into_iter().filter(|w| w.weight() == 4).collect();
    let partners: Vec<_> = fours
        .iter()
        .filter(|w| **w != iota1)
        .map(|w| json!({ "word": w.to_bit_string(), "product_weight": w.add(&iota1).expect("same length").weight() }))
        .collect();
    let close_partner = fours.iter().any(|w| *w != iota1 && w.overlaps(&iota1));
    let pair = Representation::new(m.clone()).find_weight4_pair().expect("effective");

    let mut out = vec![
        VerificationReport::new(
            "remark.iota1_weight",
            "enumeration",
            pass_if(iota1.weight() == 4),
            json!({ "matrix": rows, "iota1": iota1.to_bit_string(), "weight": iota1.weight() }),
        ),
        VerificationReport::new(
            "remark.min_distance",
            "enumeration",
            pass_if(summary.min_distance == Some(4)),
            json!({ "matrix": rows, "min_distance": summary.min_distance, "weight_distribution": summary.weight_distribution }),
        ),
        VerificationReport::new(
            "remark.no_weight4_partner",
            "enumeration",
            pass_if(!close_partner),
            json!({ "matrix": rows, "iota1": iota1.to_bit_string(), "other_weight4_words": partners }),
        ),
    ];
    out.push(match pair {
        Some((a, b)) => {
            let product = a.add(&b).expect("same length").weight();
            VerificationReport::new(
                "remark.conclusion_b",
                "enumeration",
                pass_if(product < 8),
                json!({ "matrix": rows, "pair": [a.to_bit_string(), b.to_bit_string()], "product_weight": product }),
            )
        }
        None => VerificationReport::new("remark.conclusion_b", "enumeration", Verdict::Fail, json!({ "matrix": rows, "pair": null })),
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_four_pass() {
        let reports = verify_remark_matrix();
        assert_eq!(reports.len(), 4);
        for r in &reports {
            assert_eq!(r.verdict, Verdict::Pass, "{}", r.claim_id);
            assert_eq!(r.replay().unwrap(), *r);
        }
        assert_eq!(reports[1].evidence["min_distance"], 4);
        assert_eq!(reports[3].evidence["pair"], json!(["00001111000", "00001100110"]));
        assert_eq!(reports[3].evidence["product_weight"], 4);
        // every other weight-4 word is disjoint from iota1, so products weigh 8
        for p in reports[2].evidence["other_weight4_words"].as_array().unwrap() {
            assert_eq!(p["product_weight"], 8);
        }
    }
}
