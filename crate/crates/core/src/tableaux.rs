//! Young tableaux stored as ragged rows.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::partitions::Partition;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TableauError {
    #[error("row {row} is empty")]
    EmptyRow { row: usize },
    #[error("row {row} is longer than the row above it")]
    RaggedShape { row: usize },
    #[error("entry at ({row},{col}) is zero; entries must be positive")]
    ZeroEntry { row: usize, col: usize },
}

/// Which ordering condition a filling breaks. Coordinates are 0-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SsytViolation {
    /// `t[row][col] < t[row][col - 1]`.
    RowDecrease { row: usize, col: usize },
    /// `t[row][col] <= t[row - 1][col]`.
    ColumnNotStrict { row: usize, col: usize },
}

/// Rows of positive integers with weakly decreasing row lengths.
///
/// Nothing about the ordering of entries is enforced here; see [`Tableau::validate_ssyt`].
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Tableau {
    rows: Vec<Vec<u32>>,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self, TableauError> {
        for (r, row) in rows.iter().enumerate() {
            if row.is_empty() {
                return Err(TableauError::EmptyRow { row: r });
            }
            if r > 0 && row.len() > rows[r - 1].len() {
                return Err(TableauError::RaggedShape { row: r });
            }
            if let Some(c) = row.iter().position(|&x| x == 0) {
                return Err(TableauError::ZeroEntry { row: r, col: c });
            }
        }
        Ok(Tableau { rows })
    }

    pub fn empty() -> Self {
        Tableau { rows: Vec::new() }
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub(crate) fn rows_mut(&mut self) -> &mut Vec<Vec<u32>> {
        &mut self.rows
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn get(&self, row: usize, col: usize) -> Option<u32> {
        self.rows.get(row).and_then(|r| r.get(col)).copied()
    }

    pub fn weight(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(|r| r.len() as u32).collect())
            .expect("row lengths of a tableau form a partition")
    }

    pub fn check_ssyt(&self) -> Result<(), SsytViolation> {
        for (r, row) in self.rows.iter().enumerate() {
            for c in 0..row.len() {
                if c > 0 && row[c] < row[c - 1] {
                    return Err(SsytViolation::RowDecrease { row: r, col: c });
                }
                if r > 0 && row[c] <= self.rows[r - 1][c] {
                    return Err(SsytViolation::ColumnNotStrict { row: r, col: c });
                }
            }
        }
        Ok(())
    }

    /// Rows weakly increasing, columns strictly increasing.
    pub fn validate_ssyt(&self) -> bool {
        self.check_ssyt().is_ok()
    }

    /// SSYT whose entries are exactly `1..=weight`, each once.
    pub fn is_standard(&self) -> bool {
        if !self.validate_ssyt() {
            return false;
        }
        let mut seen = vec![false; self.weight() + 1];
        for &x in self.rows.iter().flatten() {
            let x = x as usize;
            if x >= seen.len() || seen[x] {
                return false;
            }
            seen[x] = true;
        }
        true
    }

    /// Rows concatenated from the bottom row up to the top row.
    pub fn reading_word(&self) -> Vec<u32> {
        self.rows.iter().rev().flatten().copied().collect()
    }

    /// Reflects the filling in the main diagonal. Only guaranteed to be an
    /// SSYT when the input is standard.
    pub fn transpose(&self) -> Tableau {
        let width = self.rows.first().map_or(0, Vec::len);
        let rows = (0..width)
            .map(|c| {
                self.rows
                    .iter()
                    .take_while(|row| row.len() > c)
                    .map(|row| row[c])
                    .collect()
            })
            .collect();
        Tableau { rows }
    }

    /// Multiset of entries as counts indexed by value; index 0 is unused.
    pub fn content(&self, max_entry: usize) -> Vec<u32> {
        let mut counts = vec![0; max_entry + 1];
        for &x in self.rows.iter().flatten() {
            if let Some(slot) = counts.get_mut(x as usize) {
                *slot += 1;
            }
        }
        counts
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tableau{:?}", self.rows)
    }
}

/// One row per line, entries separated by single spaces. The empty tableau renders as `empty`.
impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return writeln!(f, "empty");
        }
        for row in &self.rows {
            let text: Vec<String> = row.iter().map(u32::to_string).collect();
            writeln!(f, "{}", text.join(" "))?;
        }
        Ok(())
    }
}

/// Every SSYT of `shape` with entries in `1..=max_entry`.
///
/// Cells are filled in row-major order, trying entries in ascending order, so
/// the output is sorted lexicographically by the row-major filling.
pub fn enumerate_ssyt(shape: &Partition, max_entry: u32) -> impl Iterator<Item = Tableau> {
    let mut out = Vec::new();
    if shape.len() as u32 <= max_entry || shape.is_empty() {
        let mut rows: Vec<Vec<u32>> = shape
            .parts()
            .iter()
            .map(|&l| Vec::with_capacity(l as usize))
            .collect();
        fill_ssyt(shape, max_entry, 0, &mut rows, &mut out);
    }
    out.into_iter()
}

fn fill_ssyt(
    shape: &Partition,
    max_entry: u32,
    row: usize,
    rows: &mut Vec<Vec<u32>>,
    out: &mut Vec<Tableau>,
) {
    if row == shape.len() {
        out.push(Tableau { rows: rows.clone() });
        return;
    }
    let col = rows[row].len();
    if col == shape.part(row) as usize {
        fill_ssyt(shape, max_entry, row + 1, rows, out);
        return;
    }
    let left = if col > 0 { rows[row][col - 1] } else { 1 };
    let above = if row > 0 { rows[row - 1][col] + 1 } else { 1 };
    // entries below this cell still need room to increase strictly
    let below = shape.parts()[row + 1..]
        .iter()
        .take_while(|&&l| l as usize > col)
        .count() as u32;
    let hi = max_entry.saturating_sub(below);
    for x in left.max(above)..=hi {
        rows[row].push(x);
        fill_ssyt(shape, max_entry, row, rows, out);
        rows[row].pop();
    }
}
