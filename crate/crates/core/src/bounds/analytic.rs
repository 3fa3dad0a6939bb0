//! Entropy-form bounds, generic over the floating type.

use num_traits::{Float, FloatConst};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Margin below which a floating comparison is not trusted.
pub const SLACK: f64 = 1e-9;

/// Binary entropy `-e log2 e - (1-e) log2 (1-e)`, with `H(0) = H(1) = 0`.
pub fn entropy<F: Float>(eps: F) -> Result<F> {
    if eps.is_nan() || eps < F::zero() || eps > F::one() {
        return Err(Error::InvalidArgument("entropy argument outside [0, 1]".into()));
    }
    let term = |x: F| if x == F::zero() { F::zero() } else { -x * x.log2() };
    Ok(term(eps) + term(F::one() - eps))
}

/// Parameters of the entropy bound for length `m` and minimum distance `d`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EntropyParams<F> {
    pub m: usize,
    pub d: usize,
    pub t: usize,
    pub epsilon: F,
    pub h_eps: F,
}

impl<F: Float> EntropyParams<F> {
    pub fn new(m: usize, d: usize) -> Result<Self> {
        if d < 3 {
            return Err(Error::EpsilonZero(d));
        }
        if d > m {
            return Err(Error::InvalidArgument(format!("d = {d} exceeds m = {m}")));
        }
        let t = (d - 1) / 2;
        let epsilon = F::from(t).unwrap() / F::from(m).unwrap();
        Ok(Self { m, d, t, epsilon, h_eps: entropy(epsilon)? })
    }
}

/// `(1 - H(eps)) m + log2(2m) / 2` with `eps = floor((d-1)/2) / m`.
///
/// Every injective `Z_2^k -> Z_2^m` with minimum weight `d >= 3` has `k` strictly below this.
pub fn entropy_bound_rhs<F: Float>(m: usize, d: usize) -> Result<F> {
    let p = EntropyParams::<F>::new(m, d)?;
    let mf = F::from(m).unwrap();
    let half = F::from(0.5).unwrap();
    Ok((F::one() - p.h_eps) * mf + half * (F::from(2.0).unwrap() * mf).log2())
}

/// Linear majorant used for the large-`n` regime of the half-rank estimate:
/// `slope * y - 1/2 - delta + log2(2y) / 2`.
pub fn half_rank_majorant<F: Float>(y: F, slope: F, delta: F) -> F {
    let half = F::from(0.5).unwrap();
    slope * y - half - delta + half * (F::from(2.0).unwrap() * y).log2()
}

/// Same majorant for the quarter-rank estimate: `slope * y - 7/4 + log2(2y) / 2`.
pub fn quarter_rank_majorant<F: Float>(y: F, slope: F) -> F {
    let half = F::from(0.5).unwrap();
    slope * y - F::from(1.75).unwrap() + half * (F::from(2.0).unwrap() * y).log2()
}

/// Derivative of either majorant in `y`: `slope + 1 / (2 ln2 y)`.
pub fn majorant_slope<F: Float + FloatConst>(y: F, slope: F) -> F {
    slope + F::one() / (F::from(2.0).unwrap() * F::LN_2() * y)
}

/// Three-way outcome of a floating inequality checked with [`SLACK`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum SlackOutcome {
    Holds,
    Fails,
    WithinSlack,
}

/// Checks `lhs <= rhs`; a margin under [`SLACK`] is not decided. Returns `rhs - lhs` too.
pub fn compare_le<F: Float>(lhs: F, rhs: F) -> (SlackOutcome, F) {
    let margin = rhs - lhs;
    let slack = F::from(SLACK).unwrap();
    let outcome = if margin.is_nan() {
        SlackOutcome::WithinSlack
    } else if margin > slack {
        SlackOutcome::Holds
    } else if margin < -slack {
        SlackOutcome::Fails
    } else {
        SlackOutcome::WithinSlack
    };
    (outcome, margin)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::exact::sphere_packing_max_k;
    use proptest::prelude::*;

    #[test]
    fn entropy_landmarks() {
        assert_eq!(entropy(0.5f64).unwrap(), 1.0);
        assert_eq!(entropy(0.0f64).unwrap(), 0.0);
        assert_eq!(entropy(1.0f64).unwrap(), 0.0);
        assert!(entropy(0.1205f64).unwrap() >= 0.5307);
        assert!(entropy(0.2318f64).unwrap() >= 0.78);
        assert!(entropy(-0.1f64).is_err());
        assert!(entropy(1.5f64).is_err());
        assert!(entropy(f64::NAN).is_err());
    }

    #[test]
    fn entropy_in_f32_agrees() {
        let a = entropy(0.3f32).unwrap() as f64;
        let b = entropy(0.3f64).unwrap();
        assert!((a - b).abs() < 1e-6);
    }

    #[test]
    fn rhs_rejects_small_d() {
        assert_eq!(entropy_bound_rhs::<f64>(10, 2), Err(Error::EpsilonZero(2)));
        assert!(entropy_bound_rhs::<f64>(10, 11).is_err());
        let v = entropy_bound_rhs::<f64>(40, 3).unwrap();
        assert!(v.is_finite() && v > 0.0);
    }

    #[test]
    fn rhs_at_112_29_below_57() {
        assert!(entropy_bound_rhs::<f64>(112, 29).unwrap() < 57.0);
    }

    #[test]
    fn rhs_dominates_sphere_packing() {
        for m in 3..=128 {
            for d in 3..=m {
                let rhs = entropy_bound_rhs::<f64>(m, d).unwrap();
                assert!(rhs >= sphere_packing_max_k(m, d).unwrap() as f64, "m={m} d={d}");
            }
        }
    }

    #[test]
    fn slack_comparison() {
        assert_eq!(compare_le(1.0, 2.0).0, SlackOutcome::Holds);
        assert_eq!(compare_le(2.0, 1.0).0, SlackOutcome::Fails);
        assert_eq!(compare_le(1.0, 1.0 + 1e-12).0, SlackOutcome::WithinSlack);
    }

    proptest! {
        #[test]
        fn entropy_symmetric(x in 0.0f64..=1.0) {
            let a = entropy(x).unwrap();
            let b = entropy(1.0 - x).unwrap();
            prop_assert!((a - b).abs() < 1e-12);
            prop_assert!((0.0..=1.0).contains(&a));
        }
    }
}
