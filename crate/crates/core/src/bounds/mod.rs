//! Upper bounds on the minimum distance of binary linear codes.

pub mod analytic;
pub mod exact;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use analytic::{entropy, entropy_bound_rhs, EntropyParams, SlackOutcome, SLACK};
pub use exact::{ball_volume, binomial, griesmer_max_d, sphere_packing_max_d, sphere_packing_max_k};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundName {
    SpherePacking,
    Singleton,
    Plotkin,
    Griesmer,
}

impl fmt::Display for BoundName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundName::SpherePacking => "sphere_packing",
            BoundName::Singleton => "singleton",
            BoundName::Plotkin => "plotkin",
            BoundName::Griesmer => "griesmer",
        })
    }
}

/// Per-bound upper limits on `d` for an `[n, k]` code.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub n: usize,
    pub k: usize,
    pub per_bound: BTreeMap<BoundName, usize>,
    pub combined: usize,
    /// Bounds attaining `combined`, in [`BoundName`] order.
    pub binding: Vec<BoundName>,
}

pub fn combined_upper_bound(n: usize, k: usize) -> Result<BoundReport> {
    if k < 1 || k > n {
        return Err(Error::InvalidArgument(format!("need 1 <= k <= n, got n = {n}, k = {k}")));
    }
    let per_bound = BTreeMap::from([
        (BoundName::SpherePacking, exact::sphere_packing_max_d(n, k)),
        (BoundName::Singleton, exact::singleton_max_d(n, k)),
        (BoundName::Plotkin, exact::plotkin_max_d(n, k)),
        (BoundName::Griesmer, exact::griesmer_max_d(n, k)),
    ]);
    let combined = *per_bound.values().min().expect("four bounds");
    let binding = per_bound.iter().filter(|(_, &v)| v == combined).map(|(&b, _)| b).collect();
    Ok(BoundReport { n, k, per_bound, combined, binding })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert!(combined_upper_bound(11, 5).unwrap().combined <= 4);
        for n in 1..40 {
            assert_eq!(combined_upper_bound(n, n).unwrap().combined, 1);
        }
        let golay = combined_upper_bound(23, 12).unwrap();
        assert_eq!(golay.combined, 7);
        assert!(golay.binding.contains(&BoundName::SpherePacking));
        assert_eq!(combined_upper_bound(12, 7).unwrap().combined, 4);
        assert_eq!(combined_upper_bound(7, 4).unwrap().combined, 3);
    }

    #[test]
    fn report_invariants() {
        for n in 1..=70 {
            for k in 1..=n {
                let r = combined_upper_bound(n, k).unwrap();
                assert!(r.combined >= 1);
                assert!(r.per_bound.values().all(|&v| v >= r.combined));
                assert!(!r.binding.is_empty());
            }
        }
    }

    #[test]
    fn rejects_bad_dimensions() {
        assert!(combined_upper_bound(5, 0).is_err());
        assert!(combined_upper_bound(5, 6).is_err());
    }

    #[test]
    fn serializes_bound_names_in_snake_case() {
        let json = serde_json::to_string(&combined_upper_bound(10, 4).unwrap()).unwrap();
        assert!(json.contains("\"sphere_packing\""));
        assert!(json.contains("\"griesmer\":4"));
    }
}
