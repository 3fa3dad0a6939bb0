//! Classical constructions with known parameters.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::gf2::{extend_parity, GenMatrix, Gf2Word};

/// Generator polynomial of the binary Golay code, `1 + x^2 + x^4 + x^5 + x^6 + x^10 + x^11`.
const GOLAY_POLY: [usize; 7] = [0, 2, 4, 5, 6, 10, 11];

/// Systematic extended Golay generator `[I_12 | B]`, coordinate 0 leftmost.
const GOLAY24_ROWS: [&str; 12] = [
    "100000000000100111110001",
    "010000000000010011111010",
    "001000000000001001111101",
    "000100000000100100111110",
    "000010000000110010011101",
    "000001000000111001001110",
    "000000100000111100100101",
    "000000010000111110010010",
    "000000001000011111001001",
    "000000000100001111100110",
    "000000000010010101010111",
    "000000000001101010101011",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NamedCode {
    /// `[n, 1, n]`
    Repetition(usize),
    /// `[n, n-1, 2]`
    Parity(usize),
    /// `[2^m - 1, 2^m - 1 - m, 3]`
    Hamming(usize),
    /// `[2^m, 2^m - 1 - m, 4]`
    ExtHamming(usize),
    /// First-order Reed-Muller `[2^m, m + 1, 2^(m-1)]`
    Rm1(usize),
    /// `[23, 12, 7]`
    Golay23,
    /// `[24, 12, 8]`
    Golay24,
    /// `[n, n, 1]`
    Full(usize),
}

impl NamedCode {
    /// Textbook `(n, k, d)`.
    pub fn parameters(&self) -> (usize, usize, usize) {
        match *self {
            NamedCode::Repetition(n) => (n, 1, n),
            NamedCode::Parity(n) => (n, n - 1, 2),
            NamedCode::Hamming(m) => ((1 << m) - 1, (1 << m) - 1 - m, 3),
            NamedCode::ExtHamming(m) => (1 << m, (1 << m) - 1 - m, 4),
            NamedCode::Rm1(m) => (1 << m, m + 1, 1 << (m - 1)),
            NamedCode::Golay23 => (23, 12, 7),
            NamedCode::Golay24 => (24, 12, 8),
            NamedCode::Full(n) => (n, n, 1),
        }
    }

    fn validate(&self) -> Result<()> {
        let ok = match *self {
            NamedCode::Repetition(n) | NamedCode::Full(n) => (1..=256).contains(&n),
            NamedCode::Parity(n) => (2..=256).contains(&n),
            NamedCode::Hamming(m) | NamedCode::ExtHamming(m) => (2..=8).contains(&m),
            NamedCode::Rm1(m) => (1..=8).contains(&m),
            NamedCode::Golay23 | NamedCode::Golay24 => true,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::UnknownCode(format!("{self} (parameter out of range)")))
        }
    }

    pub fn build(&self) -> Result<GenMatrix> {
        self.validate()?;
        match *self {
            NamedCode::Repetition(n) => GenMatrix::new(n, vec![Gf2Word::from_support(n, &(0..n).collect::<Vec<_>>())?]),
            NamedCode::Parity(n) => {
                let rows = (0..n - 1).map(|i| Gf2Word::from_support(n, &[i, n - 1])).collect::<Result<_>>()?;
                GenMatrix::new(n, rows)
            }
            NamedCode::Hamming(m) => hamming(m),
            NamedCode::ExtHamming(m) => extend_parity(&hamming(m)?),
            NamedCode::Rm1(m) => rm1(m),
            NamedCode::Golay23 => {
                let rows = (0..12)
                    .map(|shift| Gf2Word::from_support(23, &GOLAY_POLY.map(|e| e + shift)))
                    .collect::<Result<_>>()?;
                GenMatrix::new(23, rows)
            }
            NamedCode::Golay24 => GenMatrix::from_strs(&GOLAY24_ROWS),
            NamedCode::Full(n) => GenMatrix::identity(n),
        }
    }

    /// Every shipped family member with length at most `max_n`.
    pub fn catalogue(max_n: usize) -> Vec<NamedCode> {
        let mut out = Vec::new();
        for m in 2..=8usize {
            if (1 << m) - 1 <= max_n {
                out.push(NamedCode::Hamming(m));
            }
            if 1 << m <= max_n {
                out.push(NamedCode::ExtHamming(m));
            }
        }
        for m in 1..=8usize {
            if 1 << m <= max_n {
                out.push(NamedCode::Rm1(m));
            }
        }
        if max_n >= 23 {
            out.push(NamedCode::Golay23);
        }
        if max_n >= 24 {
            out.push(NamedCode::Golay24);
        }
        out
    }
}

/// Systematic `[I_k | A^T]` from the parity-check matrix whose columns are all
/// nonzero `m`-bit vectors, non-unit columns first.
fn hamming(m: usize) -> Result<GenMatrix> {
    let n = (1usize << m) - 1;
    let k = n - m;
    let columns: Vec<usize> = (1..=n).filter(|v| !v.is_power_of_two()).collect();
    let rows = columns
        .iter()
        .enumerate()
        .map(|(i, &v)| {
            let mut support = vec![i];
            support.extend((0..m).filter(|b| v >> b & 1 == 1).map(|b| k + b));
            Gf2Word::from_support(n, &support)
        })
        .collect::<Result<_>>()?;
    GenMatrix::new(n, rows)
}

/// All-ones row plus the `m` coordinate functions on `Z_2^m`.
fn rm1(m: usize) -> Result<GenMatrix> {
    let n = 1usize << m;
    let mut rows = vec![Gf2Word::from_support(n, &(0..n).collect::<Vec<_>>())?];
    for j in 0..m {
        rows.push(Gf2Word::from_support(n, &(0..n).filter(|x| x >> j & 1 == 1).collect::<Vec<_>>())?);
    }
    GenMatrix::new(n, rows)
}

impl fmt::Display for NamedCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamedCode::Repetition(n) => write!(f, "repetition({n})"),
            NamedCode::Parity(n) => write!(f, "parity({n})"),
            NamedCode::Hamming(m) => write!(f, "hamming({m})"),
            NamedCode::ExtHamming(m) => write!(f, "ext_hamming({m})"),
            NamedCode::Rm1(m) => write!(f, "rm1({m})"),
            NamedCode::Golay23 => f.write_str("golay23"),
            NamedCode::Golay24 => f.write_str("golay24"),
            NamedCode::Full(n) => write!(f, "full({n})"),
        }
    }
}

impl FromStr for NamedCode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "golay23" => return Ok(NamedCode::Golay23),
            "golay24" => return Ok(NamedCode::Golay24),
            _ => {}
        }
        let unknown = || Error::UnknownCode(s.to_string());
        let (family, rest) = s.split_once('(').ok_or_else(unknown)?;
        let arg: usize = rest.strip_suffix(')').ok_or_else(unknown)?.trim().parse().map_err(|_| unknown())?;
        let code = match family.trim() {
            "repetition" => NamedCode::Repetition(arg),
            "parity" => NamedCode::Parity(arg),
            "hamming" => NamedCode::Hamming(arg),
            "ext_hamming" => NamedCode::ExtHamming(arg),
            "rm1" => NamedCode::Rm1(arg),
            "full" => NamedCode::Full(arg),
            _ => return Err(unknown()),
        };
        code.validate()?;
        Ok(code)
    }
}

/// Builds the code called `name` (see [`NamedCode`] for the accepted spellings).
pub fn named_code(name: &str) -> Result<GenMatrix> {
    name.parse::<NamedCode>()?.build()
}
