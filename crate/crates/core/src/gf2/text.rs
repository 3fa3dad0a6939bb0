//! Line-oriented generator matrix format.
//!
//! One row per line using `0`/`1` only. Lines starting with `#` and blank
//! lines are ignored. All rows must share one length.

use crate::error::{Error, Result};
use crate::gf2::matrix::GenMatrix;
use crate::gf2::word::Gf2Word;

pub fn parse_matrix(text: &str) -> Result<GenMatrix> {
    let mut rows: Vec<Gf2Word> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let bits = line
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::Parse { line: idx + 1, msg: format!("unexpected character {other:?}") }),
            })
            .collect::<Result<Vec<_>>>()?;
        let word = Gf2Word::from_bits(&bits).map_err(|e| Error::Parse { line: idx + 1, msg: e.to_string() })?;
        if let Some(first) = rows.first() {
            if first.len() != word.len() {
                return Err(Error::Parse {
                    line: idx + 1,
                    msg: format!("row length {} differs from {}", word.len(), first.len()),
                });
            }
        }
        rows.push(word);
    }
    let n = rows
        .first()
        .map(Gf2Word::len)
        .ok_or_else(|| Error::Parse { line: 0, msg: "no matrix rows".into() })?;
    GenMatrix::new(n, rows)
}

/// Rows as text, one per line, trailing newline included.
pub fn format_matrix(m: &GenMatrix) -> String {
    let mut out = String::new();
    for r in m.rows() {
        out.push_str(&r.to_bit_string());
        out.push('\n');
    }
    out
}
