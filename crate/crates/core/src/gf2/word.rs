use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Number of 64-bit limbs backing a word.
pub const LIMBS: usize = 4;

/// Largest supported word length.
pub const MAX_LEN: usize = LIMBS * 64;

/// A vector in `Z_2^n`, `1 <= n <= 256`.
///
/// Coordinate `i` lives in bit `i % 64` of limb `i / 64`. Bits at positions
/// `>= len` are always zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Gf2Word {
    len: u16,
    limbs: [u64; LIMBS],
}

impl Gf2Word {
    pub fn zero(len: usize) -> Result<Self> {
        if len == 0 || len > MAX_LEN {
            return Err(Error::InvalidLength(len));
        }
        Ok(Self { len: len as u16, limbs: [0; LIMBS] })
    }

    /// Word with ones exactly at `support`.
    pub fn from_support(len: usize, support: &[usize]) -> Result<Self> {
        let mut w = Self::zero(len)?;
        for &c in support {
            if c >= len {
                return Err(Error::CoordOutOfRange { coord: c, n: len });
            }
            w.set(c, true);
        }
        Ok(w)
    }

    pub fn from_bits(bits: &[bool]) -> Result<Self> {
        let mut w = Self::zero(bits.len())?;
        for (i, &b) in bits.iter().enumerate() {
            w.set(i, b);
        }
        Ok(w)
    }

    /// Builds a word of length `len <= 64` from a packed integer (bit `i` = coordinate `i`).
    pub fn from_packed(len: usize, packed: u64) -> Result<Self> {
        let mut w = Self::zero(len)?;
        if len < 64 && packed >> len != 0 {
            return Err(Error::InvalidArgument(format!(
                "packed value has bits beyond length {len}"
            )));
        }
        if len > 64 {
            return Err(Error::InvalidArgument("packed form needs len <= 64".into()));
        }
        w.limbs[0] = packed;
        Ok(w)
    }

    /// Low 64 coordinates packed into an integer.
    pub fn packed_low(&self) -> u64 {
        self.limbs[0]
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn limbs(&self) -> &[u64; LIMBS] {
        &self.limbs
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len());
        (self.limbs[i / 64] >> (i % 64)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len(), "coordinate {i} out of range for length {}", self.len);
        let mask = 1u64 << (i % 64);
        if value {
            self.limbs[i / 64] |= mask;
        } else {
            self.limbs[i / 64] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len());
        self.limbs[i / 64] ^= 1u64 << (i % 64);
    }

    /// Hamming weight.
    #[inline]
    pub fn weight(&self) -> usize {
        self.limbs.iter().map(|l| l.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.limbs.iter().all(|&l| l == 0)
    }

    /// Coordinatewise XOR; the weight of the sum is the Hamming distance.
    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.len != other.len {
            return Err(Error::LengthMismatch { left: self.len(), right: other.len() });
        }
        let mut out = *self;
        out.xor_assign(other);
        Ok(out)
    }

    /// XOR in place. Lengths must agree (checked in debug builds only).
    #[inline]
    pub fn xor_assign(&mut self, other: &Self) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.limbs.iter_mut().zip(other.limbs.iter()) {
            *a ^= *b;
        }
    }

    pub fn distance(&self, other: &Self) -> Result<usize> {
        Ok(self.add(other)?.weight())
    }

    /// True when the supports of the two words intersect.
    pub fn overlaps(&self, other: &Self) -> bool {
        self.limbs.iter().zip(other.limbs.iter()).any(|(a, b)| a & b != 0)
    }

    /// Coordinates holding a one, ascending.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(move |&i| self.get(i))
    }

    pub fn first_one(&self) -> Option<usize> {
        self.limbs
            .iter()
            .enumerate()
            .find(|(_, &l)| l != 0)
            .map(|(i, l)| i * 64 + l.trailing_zeros() as usize)
    }

    /// The word with coordinate `coord` removed (length drops by one).
    pub fn delete(&self, coord: usize) -> Result<Self> {
        let n = self.len();
        if coord >= n {
            return Err(Error::CoordOutOfRange { coord, n });
        }
        let mut out = Self::zero(n - 1)?;
        let mut j = 0;
        for i in 0..n {
            if i != coord {
                out.set(j, self.get(i));
                j += 1;
            }
        }
        Ok(out)
    }

    /// The word with `value` inserted at position `coord` (length grows by one).
    pub fn insert(&self, coord: usize, value: bool) -> Result<Self> {
        let n = self.len();
        if coord > n {
            return Err(Error::CoordOutOfRange { coord, n: n + 1 });
        }
        let mut out = Self::zero(n + 1)?;
        for i in 0..coord {
            out.set(i, self.get(i));
        }
        out.set(coord, value);
        for i in coord..n {
            out.set(i + 1, self.get(i));
        }
        Ok(out)
    }

    /// The word with one extra coordinate appended.
    pub fn push(&self, value: bool) -> Result<Self> {
        self.insert(self.len(), value)
    }

    /// Coordinates rearranged so that output position `j` holds input coordinate `perm[j]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.len() {
            return Err(Error::LengthMismatch { left: self.len(), right: perm.len() });
        }
        let mut out = Self::zero(self.len())?;
        for (j, &src) in perm.iter().enumerate() {
            out.set(j, self.get(src));
        }
        Ok(out)
    }

    pub fn to_bit_string(&self) -> String {
        (0..self.len()).map(|i| if self.get(i) { '1' } else { '0' }).collect()
    }
}

impl Ord for Gf2Word {
    /// Length first, then the bit strings compared lexicographically with coordinate 0 leading.
    fn cmp(&self, other: &Self) -> Ordering {
        match self.len.cmp(&other.len) {
            Ordering::Equal => {}
            ord => return ord,
        }
        for (a, b) in self.limbs.iter().zip(other.limbs.iter()) {
            let diff = a ^ b;
            if diff != 0 {
                let low = diff & diff.wrapping_neg();
                return if a & low == 0 { Ordering::Less } else { Ordering::Greater };
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Gf2Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Gf2Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_bit_string())
    }
}

impl fmt::Debug for Gf2Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gf2Word({})", self.to_bit_string())
    }
}

impl FromStr for Gf2Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bits = s
            .trim()
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::Parse { line: 1, msg: format!("unexpected character {other:?}") }),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_bits(&bits)
    }
}

impl Serialize for Gf2Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_bit_string())
    }
}

impl<'de> Deserialize<'de> for Gf2Word {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(s: &str) -> Gf2Word {
        s.parse().unwrap()
    }

    #[test]
    fn weight_of_remark_rows() {
        assert_eq!(w("11110000000").weight(), 4);
        assert_eq!(w("00001010101").weight(), 4);
        assert_eq!(Gf2Word::zero(11).unwrap().weight(), 0);
    }

    #[test]
    fn add_of_rows_three_and_four() {
        let sum = w("00001111000").add(&w("00001100110")).unwrap();
        assert_eq!(sum, w("00000011110"));
        assert_eq!(sum.weight(), 4);
    }

    #[test]
    fn add_rejects_length_mismatch() {
        assert_eq!(
            w("101").add(&w("1010")),
            Err(Error::LengthMismatch { left: 3, right: 4 })
        );
    }

    #[test]
    fn lengths_outside_range_rejected() {
        assert!(Gf2Word::zero(0).is_err());
        assert!(Gf2Word::zero(257).is_err());
        let top = Gf2Word::from_support(256, &[255]).unwrap();
        assert_eq!(top.weight(), 1);
        assert_eq!(top.first_one(), Some(255));
    }

    #[test]
    fn delete_and_insert_are_inverse() {
        let x = w("1011001");
        assert_eq!(x.delete(2).unwrap(), w("101001"));
        assert_eq!(x.delete(2).unwrap().insert(2, true).unwrap(), x);
        assert!(x.delete(7).is_err());
    }

    #[test]
    fn ordering_is_lexicographic_on_bit_strings() {
        assert!(w("0111") < w("1000"));
        assert!(w("0001") < w("0010"));
        let mut v = vec![w("110"), w("011"), w("101")];
        v.sort();
        let s: Vec<String> = v.iter().map(|x| x.to_string()).collect();
        assert_eq!(s, ["011", "101", "110"]);
    }

    fn arb_pair() -> impl Strategy<Value = (Gf2Word, Gf2Word)> {
        (1usize..=256).prop_flat_map(|n| {
            (prop::collection::vec(any::<bool>(), n), prop::collection::vec(any::<bool>(), n)).prop_map(
                |(a, b)| (Gf2Word::from_bits(&a).unwrap(), Gf2Word::from_bits(&b).unwrap()),
            )
        })
    }

    proptest! {
        #[test]
        fn triangle_and_parity((a, b) in arb_pair()) {
            let s = a.add(&b).unwrap();
            prop_assert!(s.weight() <= a.weight() + b.weight());
            prop_assert_eq!(s.weight() % 2, (a.weight() + b.weight()) % 2);
            prop_assert!(a.add(&a).unwrap().is_zero());
            prop_assert_eq!(a.add(&Gf2Word::zero(a.len()).unwrap()).unwrap(), a);
            prop_assert_eq!(a.weight() + b.weight() > s.weight(), a.overlaps(&b));
        }

        #[test]
        fn string_round_trip((a, _b) in arb_pair()) {
            let back: Gf2Word = a.to_bit_string().parse().unwrap();
            prop_assert_eq!(back, a);
        }
    }
}
