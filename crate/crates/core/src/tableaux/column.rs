use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Largest supported rank `n`.
pub const MAX_RANK: usize = 16;

/// How a column sits relative to the simple root `alpha_c`: its `sl2`-weight
/// is `+1` (I), `0` (II) or `-1` (III).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ColumnType {
    /// `c` present, `c + 1` absent.
    I,
    /// Both or neither present.
    II,
    /// `c + 1` present, `c` absent.
    III,
}

impl ColumnType {
    pub fn sl2_weight(self) -> i64 {
        match self {
            ColumnType::I => 1,
            ColumnType::II => 0,
            ColumnType::III => -1,
        }
    }
}

/// A strictly increasing column of entries from `1..=n`, stored as a bit set
/// (bit `e - 1` set iff `e` is an entry).
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Column(u16);

impl Column {
    pub fn from_entries(entries: &[u8], n: usize) -> Result<Self> {
        let mut bits = 0u16;
        let mut prev = 0u8;
        for &e in entries {
            if e == 0 || e as usize > n {
                return Err(Error::InvalidTableau(format!(
                    "entry {e} outside 1..={n}"
                )));
            }
            if e <= prev {
                return Err(Error::InvalidTableau(format!(
                    "column {entries:?} is not strictly increasing"
                )));
            }
            prev = e;
            bits |= 1 << (e - 1);
        }
        if entries.is_empty() {
            return Err(Error::InvalidTableau("empty column".into()));
        }
        Ok(Column(bits))
    }

    /// The column `1, 2, ..., h`.
    pub fn smallest(h: usize) -> Self {
        Column(((1u32 << h) - 1) as u16)
    }

    pub(crate) fn from_bits(bits: u16) -> Self {
        Column(bits)
    }

    pub(crate) fn bits(self) -> u16 {
        self.0
    }

    pub fn height(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, e: usize) -> bool {
        (1..=MAX_RANK).contains(&e) && self.0 & (1 << (e - 1)) != 0
    }

    /// Entries top to bottom.
    pub fn entries(self) -> impl Iterator<Item = u8> {
        let bits = self.0;
        (0..MAX_RANK as u8).filter(move |i| bits & (1 << i) != 0).map(|i| i + 1)
    }

    pub fn to_vec(self) -> Vec<u8> {
        self.entries().collect()
    }

    /// Entry on row `r` (1-based).
    pub fn entry(self, r: usize) -> Option<u8> {
        self.entries().nth(r.checked_sub(1)?)
    }

    /// Row (1-based) holding entry `e`.
    pub fn row_of(self, e: usize) -> Option<usize> {
        self.contains(e)
            .then(|| (self.0 & ((1u16 << (e - 1)) - 1)).count_ones() as usize + 1)
    }

    pub fn is_smallest(self) -> bool {
        self == Column::smallest(self.height())
    }

    pub fn kind(self, c: usize) -> ColumnType {
        match (self.contains(c), self.contains(c + 1)) {
            (true, false) => ColumnType::I,
            (false, true) => ColumnType::III,
            _ => ColumnType::II,
        }
    }

    /// Replaces `c` by `c + 1`; the column must be of type I.
    pub fn raise(self, c: usize) -> Self {
        debug_assert_eq!(self.kind(c), ColumnType::I);
        Column(self.0 ^ (0b11 << (c - 1)))
    }

    /// Replaces `c + 1` by `c`; the column must be of type III.
    pub fn lower(self, c: usize) -> Self {
        debug_assert_eq!(self.kind(c), ColumnType::III);
        Column(self.0 ^ (0b11 << (c - 1)))
    }

    /// Componentwise comparison of two columns of equal height.
    pub fn leq(self, other: Column) -> bool {
        self.height() == other.height() && self.entries().zip(other.entries()).all(|(a, b)| a <= b)
    }

    /// Contribution to the tableau weight: entry `e` on row `i` adds
    /// `alpha_i + ... + alpha_(e-1)`.
    pub(crate) fn add_weight(self, acc: &mut [i64], sign: i64) {
        for (i, e) in self.entries().enumerate() {
            for slot in acc.iter_mut().take(e as usize - 1).skip(i) {
                *slot += sign;
            }
        }
    }

    /// All columns of height `h` with entries in `1..=n`, in lexicographic order.
    pub fn all_of_height(h: usize, n: usize) -> Vec<Column> {
        let mut out: Vec<Column> = (0u32..1 << n)
            .filter(|b| b.count_ones() as usize == h)
            .map(|b| Column(b as u16))
            .collect();
        out.sort();
        out
    }

    pub(crate) fn colex_cmp(self, other: Column) -> Ordering {
        let a: Vec<u8> = self.entries().collect();
        let b: Vec<u8> = other.entries().collect();
        a.iter().rev().cmp(b.iter().rev())
    }
}

/// Lexicographic on the entry lists; a linear extension of [`Column::leq`].
impl Ord for Column {
    fn cmp(&self, other: &Self) -> Ordering {
        // The lowest differing bit is the first differing entry; whichever
        // column owns it has the smaller entry there.
        let diff = self.0 ^ other.0;
        if diff == 0 {
            return Ordering::Equal;
        }
        let low = diff & diff.wrapping_neg();
        if self.0 & low != 0 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }
}

impl PartialOrd for Column {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Column {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Column {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, e) in self.entries().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "]")
    }
}
