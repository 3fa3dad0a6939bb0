//! Dense bitsets over `Z_2^r`, indexed by packed vectors.

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct SpaceSet {
    bits: u32,
    words: Vec<u64>,
}

const MASKS: [u64; 6] = [
    0x5555_5555_5555_5555,
    0x3333_3333_3333_3333,
    0x0F0F_0F0F_0F0F_0F0F,
    0x00FF_00FF_00FF_00FF,
    0x0000_FFFF_0000_FFFF,
    0x0000_0000_FFFF_FFFF,
];

/// Moves bit `b` to bit `b ^ x` for `x < 64`.
#[inline]
fn permute_word(mut v: u64, x: u64) -> u64 {
    for (j, &mask) in MASKS.iter().enumerate() {
        if x >> j & 1 == 1 {
            let s = 1u32 << j;
            v = ((v & mask) << s) | ((v >> s) & mask);
        }
    }
    v
}

impl SpaceSet {
    pub fn new(bits: u32) -> Self {
        let len = (1usize << bits).div_ceil(64);
        Self { bits, words: vec![0; len] }
    }

    pub fn universe(&self) -> u64 {
        1u64 << self.bits
    }

    #[inline]
    pub fn contains(&self, v: u64) -> bool {
        self.words[(v >> 6) as usize] >> (v & 63) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: u64) {
        self.words[(v >> 6) as usize] |= 1 << (v & 63);
    }

    /// `self |= other ^ x`, i.e. inserts `w ^ x` for every `w` in `other`.
    pub fn union_translate(&mut self, other: &SpaceSet, x: u64) {
        debug_assert_eq!(self.bits, other.bits);
        if self.bits < 6 {
            for w in 0..other.universe() {
                if other.contains(w) {
                    self.insert(w ^ x);
                }
            }
            return;
        }
        let hi = (x >> 6) as usize;
        let lo = x & 63;
        for (i, word) in self.words.iter_mut().enumerate() {
            *word |= permute_word(other.words[i ^ hi], lo);
        }
    }

    pub fn count(&self) -> u64 {
        self.words.iter().map(|w| w.count_ones() as u64).sum()
    }

    /// Number of vectors of the universe not in the set.
    pub fn count_missing(&self) -> u64 {
        self.universe() - self.count()
    }

    /// Smallest vector `>= from` not in the set.
    pub fn next_missing(&self, from: u64) -> Option<u64> {
        let universe = self.universe();
        let mut v = from;
        while v < universe {
            let wi = (v >> 6) as usize;
            let free = !self.words[wi] & (!0u64 << (v & 63));
            if free != 0 {
                let hit = ((wi as u64) << 6) | free.trailing_zeros() as u64;
                return (hit < universe).then_some(hit);
            }
            v = ((wi as u64) + 1) << 6;
        }
        None
    }

    /// The `index`-th (0-based) vector not in the set.
    pub fn nth_missing(&self, mut index: u64) -> Option<u64> {
        let universe = self.universe();
        for (wi, &word) in self.words.iter().enumerate() {
            let mut free = !word;
            let base = (wi as u64) << 6;
            if base + 64 > universe {
                free &= (1u64 << (universe - base)) - 1;
            }
            let c = free.count_ones() as u64;
            if index < c {
                for _ in 0..index {
                    free &= free - 1;
                }
                return Some(base | free.trailing_zeros() as u64);
            }
            index -= c;
        }
        None
    }
}
