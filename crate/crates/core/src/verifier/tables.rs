//! The bundled minimum-distance tables.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

/// Environment variable naming a replacement table file.
pub const TABLE_PATH_ENV: &str = "Z2CB_TABLE_PATH";

const BUNDLED: &str = include_str!("../../data/tables.txt");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum TableId {
    T1,
    T2,
    T3,
    T4,
}

impl TableId {
    pub const ALL: [TableId; 4] = [TableId::T1, TableId::T2, TableId::T3, TableId::T4];
}

impl fmt::Display for TableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            TableId::T1 => "T1",
            TableId::T2 => "T2",
            TableId::T3 => "T3",
            TableId::T4 => "T4",
        };
        f.write_str(s)
    }
}

impl FromStr for TableId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "T1" => Ok(TableId::T1),
            "T2" => Ok(TableId::T2),
            "T3" => Ok(TableId::T3),
            "T4" => Ok(TableId::T4),
            other => Err(Error::InvalidArgument(format!("unknown table {other:?}"))),
        }
    }
}

/// Closed interval of minimum distances; exact values have `lo == hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Interval {
    pub lo: usize,
    pub hi: usize,
}

impl Interval {
    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TableEntry {
    pub table: TableId,
    /// Ambient dimension as printed; for T3 the code length is `n - 1`.
    pub n: usize,
    pub r: usize,
    pub d_threshold: usize,
    pub claimed: Interval,
}

impl TableEntry {
    /// Length of the code whose minimum distance the row records.
    pub fn code_length(&self) -> usize {
        match self.table {
            TableId::T3 => self.n - 1,
            _ => self.n,
        }
    }
}

/// Parses the whitespace-separated row format; `#` starts a comment.
pub fn parse_tables(text: &str) -> Result<Vec<TableEntry>> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |msg: String| Error::Parse { line: idx + 1, msg };
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [table, n, r, thr, lo, hi] = fields[..] else {
            return Err(err(format!("expected 6 fields, found {}", fields.len())));
        };
        let num = |s: &str| s.parse::<usize>().map_err(|_| err(format!("not a number: {s:?}")));
        let entry = TableEntry {
            table: table.parse().map_err(|_| err(format!("unknown table {table:?}")))?,
            n: num(n)?,
            r: num(r)?,
            d_threshold: num(thr)?,
            claimed: Interval { lo: num(lo)?, hi: num(hi)? },
        };
        if entry.claimed.lo > entry.claimed.hi {
            return Err(err("interval with lo > hi".into()));
        }
        if entry.code_length() == 0 || entry.r == 0 || entry.r > entry.code_length() {
            return Err(err("dimension out of range".into()));
        }
        out.push(entry);
    }
    Ok(out)
}

pub fn format_tables(entries: &[TableEntry]) -> String {
    entries
        .iter()
        .map(|e| format!("{} {} {} {} {} {}\n", e.table, e.n, e.r, e.d_threshold, e.claimed.lo, e.claimed.hi))
        .collect()
}

/// The bundled tables, or the file named by [`TABLE_PATH_ENV`] when set.
pub fn load_tables() -> Result<Vec<TableEntry>> {
    match std::env::var_os(TABLE_PATH_ENV) {
        Some(path) => {
            let text = std::fs::read_to_string(&path)
                .map_err(|e| Error::TableUnavailable(format!("{}: {e}", path.to_string_lossy())))?;
            parse_tables(&text)
        }
        None => parse_tables(BUNDLED),
    }
}

pub fn bundled_tables() -> Vec<TableEntry> {
    parse_tables(BUNDLED).expect("bundled table file is well formed")
}

/// Claimed `d(length, dim)` from any table, as a code-length lookup.
pub fn lookup(entries: &[TableEntry], length: usize, dim: usize) -> Option<Interval> {
    entries.iter().find(|e| e.code_length() == length && e.r == dim).map(|e| e.claimed)
}
