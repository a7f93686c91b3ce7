//! Partitions as elements of Young's lattice, and the single-box column
//! moves the up- and down-operators are built from.
//!
//! Columns are 1-based. A partition is stored by its row lengths with
//! trailing zeros trimmed; column heights are derived through
//! [`Partition::conjugate`].

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// The empty partition.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Builds a partition from row lengths. Trailing zeros are dropped.
    ///
    /// Panics if the rows are not weakly decreasing.
    pub fn new(parts: Vec<usize>) -> Self {
        Self::try_new(parts).expect("partition rows must be weakly decreasing")
    }

    pub fn try_new(mut parts: Vec<usize>) -> Result<Self> {
        if let Some(w) = parts.windows(2).find(|w| w[0] < w[1]) {
            return Err(Error::PartitionParse {
                text: join(&parts),
                reason: format!("rows increase from {} to {}", w[0], w[1]),
            });
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// Builds the partition whose column heights are `columns`
    /// (which must be weakly decreasing).
    pub fn from_columns(columns: &[usize]) -> Self {
        Partition::new(columns.to_vec()).conjugate()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Length of row `k` (1-based); 0 beyond the last row.
    pub fn row(&self, k: usize) -> usize {
        if k == 0 {
            return 0;
        }
        self.parts.get(k - 1).copied().unwrap_or(0)
    }

    /// Height of column `i` (1-based), i.e. λ′_i.
    pub fn column(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.iter().take_while(|&&r| r >= i).count()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Reflects the Young diagram across the main diagonal.
    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=width).map(|i| self.column(i)).collect();
        Partition { parts }
    }

    /// Column differences δ_i = λ′_i − λ′_{i+1}, for i = 1..=width.
    pub fn profile(&self) -> ColumnProfile {
        let cols = self.conjugate().parts;
        let diffs = (0..cols.len())
            .map(|k| cols[k] - cols.get(k + 1).copied().unwrap_or(0))
            .collect();
        ColumnProfile { diffs }
    }

    /// Adds a box in column `i`, returning `None` (the zero vector) when the
    /// result would not be a partition.
    pub fn add_box_column(&self, i: usize) -> Result<Option<Partition>> {
        if i == 0 {
            return Err(Error::InvalidIndex(i));
        }
        let h = self.column(i);
        // the new box sits in row h + 1, which must currently end at column i - 1
        if self.row(h + 1) != i - 1 {
            return Ok(None);
        }
        let mut parts = self.parts.clone();
        if h == parts.len() {
            parts.push(i);
        } else {
            parts[h] = i;
        }
        Ok(Some(Partition { parts }))
    }

    /// Removes a box from column `i`, returning `None` when that box is not
    /// a removable corner.
    pub fn remove_box_column(&self, i: usize) -> Result<Option<Partition>> {
        if i == 0 {
            return Err(Error::InvalidIndex(i));
        }
        let h = self.column(i);
        if h == 0 || self.row(h) != i {
            return Ok(None);
        }
        let mut parts = self.parts.clone();
        parts[h - 1] = i - 1;
        if i == 1 {
            parts.pop();
        }
        Ok(Some(Partition { parts }))
    }
}

fn join(parts: &[usize]) -> String {
    parts
        .iter()
        .map(|p| p.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Consecutive column differences (δ_1, …, δ_K) of a partition.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ColumnProfile {
    diffs: Vec<usize>,
}

impl ColumnProfile {
    pub fn new(mut diffs: Vec<usize>) -> Self {
        while diffs.last() == Some(&0) {
            diffs.pop();
        }
        ColumnProfile { diffs }
    }

    pub fn diffs(&self) -> &[usize] {
        &self.diffs
    }

    /// δ_i for 1-based `i`; 0 past the end.
    pub fn diff(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.diffs.get(i - 1).copied().unwrap_or(0)
    }

    /// The partition with λ′_i = δ_i + δ_{i+1} + … + δ_K.
    pub fn to_partition(&self) -> Partition {
        let mut columns = vec![0; self.diffs.len()];
        let mut acc = 0;
        for k in (0..self.diffs.len()).rev() {
            acc += self.diffs[k];
            columns[k] = acc;
        }
        Partition::from_columns(&columns)
    }
}

/// One partition for every difference profile (δ_1, …, δ_{n+1}) in
/// {0..=c}^{n+1}, with all columns past n + 1 empty. The action of any word
/// whose letters are at most `n` depends only on these differences, which
/// makes this a complete test set for such words.
pub fn enumerate_profiles(n: usize, c: usize) -> Vec<Partition> {
    let len = n + 1;
    let total = (c + 1).pow(len as u32);
    let mut out = Vec::with_capacity(total);
    let mut diffs = vec![0usize; len];
    loop {
        out.push(ColumnProfile::new(diffs.clone()).to_partition());
        // odometer increment
        let mut k = 0;
        loop {
            if k == len {
                return out;
            }
            if diffs[k] < c {
                diffs[k] += 1;
                break;
            }
            diffs[k] = 0;
            k += 1;
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join(&self.parts))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", join(&self.parts))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Comma-separated row lengths; `""` and `"0"` both denote the empty
    /// partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::PartitionParse {
                        text: s.to_string(),
                        reason: format!("{tok:?}: {e}"),
                    })
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::try_new(parts).map_err(|_| Error::PartitionParse {
            text: s.to_string(),
            reason: "rows must be weakly decreasing".to_string(),
        })
    }
}
