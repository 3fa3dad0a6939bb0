//! Integer-only bounds. Nothing here touches floating point.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// `C(n, k)` as an arbitrary-precision integer; zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        // acc * (n - i) is divisible by (i + 1) after the multiplication
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `sum_{i=0}^{t} C(m, i)`, the number of words within distance `t` of a point.
pub fn ball_volume(m: usize, t: usize) -> Result<BigUint> {
    if t > m {
        return Err(Error::InvalidArgument(format!("radius {t} exceeds length {m}")));
    }
    Ok((0..=t).map(|i| binomial(m, i)).sum())
}

/// Largest `k` with `2^k * V(n, floor((d-1)/2)) <= 2^n`.
pub fn sphere_packing_max_k(n: usize, d: usize) -> Result<usize> {
    if d < 1 || d > n {
        return Err(Error::InvalidArgument(format!("need 1 <= d <= n, got d = {d}, n = {n}")));
    }
    let vol = ball_volume(n, (d - 1) / 2)?;
    // smallest b with vol <= 2^b
    let b = (vol - 1u32).bits() as usize;
    Ok(n - b)
}

/// Whether sphere packing admits an `[n, k, d]` code.
///
/// For even `d` the test is applied to the punctured `[n-1, k, d-1]` code,
/// which has the same packing radius but a smaller space.
pub fn sphere_packing_admits(n: usize, k: usize, d: usize) -> bool {
    if d == 0 || d > n {
        return false;
    }
    let direct = sphere_packing_max_k(n, d).is_ok_and(|kk| kk >= k);
    if d % 2 == 0 && d >= 2 && n >= 2 {
        direct && sphere_packing_max_k(n - 1, d - 1).is_ok_and(|kk| kk >= k)
    } else {
        direct
    }
}

/// Largest `d` allowed by [`sphere_packing_admits`] for an `[n, k]` code.
pub fn sphere_packing_max_d(n: usize, k: usize) -> usize {
    (1..=n).rev().find(|&d| sphere_packing_admits(n, k, d)).unwrap_or(1)
}

/// `sum_{i<k} ceil(d / 2^i)`, the Griesmer length for dimension `k` and distance `d`.
pub fn griesmer_length(k: usize, d: usize) -> usize {
    (0..k)
        .map(|i| if i >= usize::BITS as usize { usize::from(d > 0) } else { d.div_ceil(1 << i) })
        .sum()
}

/// Largest `d` with `griesmer_length(k, d) <= n`.
pub fn griesmer_max_d(n: usize, k: usize) -> usize {
    (1..=n).rev().find(|&d| griesmer_length(k, d) <= n).unwrap_or(1)
}

pub fn singleton_max_d(n: usize, k: usize) -> usize {
    n + 1 - k
}

/// Plotkin's upper bound on the size of any binary code of length `n` and
/// distance `d`, only in the regime `2d > n`; `None` outside it.
pub fn plotkin_max_size(n: usize, d: usize) -> Option<u128> {
    if 2 * d <= n {
        return None;
    }
    let size = if d % 2 == 0 {
        2 * (d / (2 * d - n))
    } else {
        2 * ((d + 1) / (2 * d + 1 - n))
    };
    Some(size as u128)
}

/// Largest `d` not excluded by Plotkin for `2^k` codewords (`n` when the regime never applies).
pub fn plotkin_max_d(n: usize, k: usize) -> usize {
    let codewords: u128 = if k >= 127 { u128::MAX } else { 1u128 << k };
    (1..=n)
        .rev()
        .find(|&d| plotkin_max_size(n, d).is_none_or(|bound| codewords <= bound))
        .unwrap_or(1)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Pascal's triangle in u128, independent of the multiplicative formula.
    fn pascal(n: usize) -> Vec<Vec<u128>> {
        let mut rows: Vec<Vec<u128>> = vec![vec![1]];
        for i in 1..=n {
            let prev = &rows[i - 1];
            let mut row = vec![1u128; i + 1];
            for j in 1..i {
                row[j] = prev[j - 1] + prev[j];
            }
            rows.push(row);
        }
        rows
    }

    #[test]
    fn binomials_match_pascal() {
        let tri = pascal(120);
        for n in 0..=120 {
            for k in 0..=n {
                assert_eq!(binomial(n, k), BigUint::from(tri[n][k]), "C({n},{k})");
            }
            assert_eq!(binomial(n, n + 1), BigUint::zero());
        }
    }

    #[test]
    fn ball_volumes() {
        assert_eq!(ball_volume(23, 3).unwrap(), BigUint::from(2048u32));
        assert_eq!(ball_volume(7, 1).unwrap(), BigUint::from(8u32));
        assert_eq!(ball_volume(40, 0).unwrap(), BigUint::one());
        assert!(ball_volume(3, 4).is_err());
    }

    #[test]
    fn sphere_packing_perfect_codes() {
        assert_eq!(sphere_packing_max_k(7, 3).unwrap(), 4);
        assert_eq!(sphere_packing_max_k(23, 7).unwrap(), 12);
        for n in 1..40 {
            assert_eq!(sphere_packing_max_k(n, 1).unwrap(), n);
        }
        assert!(sphere_packing_max_k(5, 0).is_err());
        assert!(sphere_packing_max_k(5, 6).is_err());
    }

    #[test]
    fn sphere_packing_matches_u128_brute_force() {
        let tri = pascal(100);
        for n in 1..=100usize {
            for d in 1..=n {
                let t = (d - 1) / 2;
                let vol: u128 = tri[n][..=t].iter().sum();
                let brute = (0..=n).rev().find(|&k| vol <= (1u128 << (n - k))).unwrap();
                assert_eq!(sphere_packing_max_k(n, d).unwrap(), brute, "n={n} d={d}");
            }
        }
    }

    #[test]
    fn sphere_packing_monotone() {
        for n in 2..=90 {
            for d in 2..=n {
                assert!(sphere_packing_max_k(n, d).unwrap() <= sphere_packing_max_k(n, d - 1).unwrap());
                if d <= n - 1 {
                    assert!(sphere_packing_max_k(n, d).unwrap() >= sphere_packing_max_k(n - 1, d).unwrap());
                }
            }
        }
    }

    #[test]
    fn even_distance_refinement() {
        // d = 7 and d = 8 share a packing radius; puncturing rules out [23, 12, 8]
        assert_eq!(sphere_packing_max_k(23, 8).unwrap(), 12);
        assert!(!sphere_packing_admits(23, 12, 8));
        assert!(sphere_packing_admits(23, 12, 7));
        assert!(sphere_packing_admits(24, 12, 8));
        assert_eq!(sphere_packing_max_d(23, 12), 7);
    }

    #[test]
    fn griesmer_values() {
        assert_eq!(griesmer_max_d(10, 4), 4);
        assert_eq!(griesmer_max_d(9, 3), 4);
        assert_eq!(griesmer_max_d(12, 7), 4);
        for n in 1..30 {
            assert_eq!(griesmer_max_d(n, 1), n);
        }
        assert_eq!(griesmer_length(4, 4), 8);
        assert_eq!(griesmer_length(4, 5), 11);
        assert_eq!(griesmer_length(200, 3), 3 + 2 + 198);
    }

    #[test]
    fn plotkin_regime() {
        assert_eq!(plotkin_max_size(10, 4), None);
        // d = 6, n = 10: 2 * floor(6 / 2) = 6 codewords at most
        assert_eq!(plotkin_max_size(10, 6), Some(6));
        assert_eq!(plotkin_max_d(10, 3), 5);
        assert_eq!(plotkin_max_d(7, 1), 7);
        assert_eq!(singleton_max_d(11, 5), 7);
    }
}
