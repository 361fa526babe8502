//! Row insertion and the RSK correspondence between square matrices and pairs
//! of semistandard tableaux of equal shape.

use std::cmp::Reverse;

use serde::Serialize;
use thiserror::Error;

use crate::matrices::{Biword, Matrix, MatrixError};
use crate::partitions::Partition;
use crate::tableaux::Tableau;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RskError {
    #[error("tableaux have different shapes: P is {p}, Q is {q}")]
    ShapeMismatch { p: Partition, q: Partition },
    #[error("{which} is not semistandard")]
    NotSemistandard { which: &'static str },
    #[error("{which} holds entry {entry}, outside [1,{n}]")]
    EntryOutOfRange {
        which: &'static str,
        entry: u32,
        n: usize,
    },
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

/// A cell of a tableau, 0-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

/// The insertion tableau `P` and the recording tableau `Q`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableauPair {
    pub p: Tableau,
    pub q: Tableau,
}

impl TableauPair {
    pub fn shape(&self) -> Partition {
        self.p.shape()
    }
}

/// Schensted row insertion of `x` into `t`, in place.
///
/// `x` replaces the leftmost entry strictly greater than it and the displaced
/// entry moves on to the next row; when nothing is greater, `x` is appended.
/// Returns the newly created cell.
pub fn row_insert(t: &mut Tableau, x: u32) -> Cell {
    let rows = t.rows_mut();
    let mut x = x;
    for (r, row) in rows.iter_mut().enumerate() {
        let pos = row.partition_point(|&y| y <= x);
        if pos == row.len() {
            row.push(x);
            return Cell { row: r, col: pos };
        }
        std::mem::swap(&mut row[pos], &mut x);
    }
    rows.push(vec![x]);
    Cell {
        row: rows.len() - 1,
        col: 0,
    }
}

/// Removes the corner cell at the end of `row` and reverse-bumps upwards.
/// Returns the value that leaves the first row.
fn reverse_bump(rows: &mut Vec<Vec<u32>>, row: usize) -> u32 {
    let mut x = rows[row].pop().expect("corner row is nonempty");
    if rows[row].is_empty() {
        rows.pop();
    }
    for r in (0..row).rev() {
        // rightmost entry strictly smaller than x
        let pos = rows[r].partition_point(|&y| y < x) - 1;
        std::mem::swap(&mut rows[r][pos], &mut x);
    }
    x
}

pub fn rsk_forward_biword(b: &Biword) -> TableauPair {
    let mut p = Tableau::empty();
    let mut q = Tableau::empty();
    for &(top, bottom) in b.pairs() {
        let cell = row_insert(&mut p, bottom);
        let rows = q.rows_mut();
        if cell.row == rows.len() {
            rows.push(Vec::new());
        }
        rows[cell.row].push(top);
    }
    TableauPair { p, q }
}

/// Inserts the bottom row of the sorted biword of `m` and records the top row.
pub fn rsk_forward(m: &Matrix) -> TableauPair {
    rsk_forward_biword(&m.to_biword())
}

/// Inverse of [`rsk_forward`] for `n × n` matrices.
///
/// Repeatedly removes the cell holding the largest entry of `Q` (the rightmost
/// one among equal entries, which was recorded last) and reverse-bumps the
/// matching cell of `P` out of the first row.
pub fn rsk_inverse(p: &Tableau, q: &Tableau, n: usize) -> Result<Matrix, RskError> {
    if p.shape() != q.shape() {
        return Err(RskError::ShapeMismatch {
            p: p.shape(),
            q: q.shape(),
        });
    }
    for (which, t) in [("P", p), ("Q", q)] {
        if !t.validate_ssyt() {
            return Err(RskError::NotSemistandard { which });
        }
        if let Some(&entry) = t.rows().iter().flatten().find(|&&x| x as usize > n) {
            return Err(RskError::EntryOutOfRange { which, entry, n });
        }
    }
    let mut p_rows = p.rows().to_vec();
    let mut q_rows = q.rows().to_vec();
    let mut pairs = Vec::with_capacity(p.weight());
    while !q_rows.is_empty() {
        // equal entries of an SSYT form a horizontal strip: every occurrence of
        // the maximum ends its row, and the rightmost one is in the highest such row
        let (row, top) = q_rows
            .iter()
            .enumerate()
            .map(|(r, row)| (r, *row.last().expect("rows are nonempty")))
            .max_by_key(|&(r, x)| (x, Reverse(r)))
            .expect("Q is nonempty");
        q_rows[row].pop();
        if q_rows[row].is_empty() {
            q_rows.pop();
        }
        let bottom = reverse_bump(&mut p_rows, row);
        pairs.push((top, bottom));
    }
    pairs.reverse();
    let b = Biword::new(pairs)?;
    Ok(Matrix::from_biword(&b, n)?)
}

/// Common shape of the RSK pair; the empty partition for the zero matrix.
pub fn shape_of_matrix(m: &Matrix) -> Partition {
    rsk_forward(m).shape()
}

/// Shape of the RSK insertion tableau of the bottom word of `b`. Cheaper than
/// building the full pair since nothing is recorded.
pub fn shape_of_biword(b: &Biword) -> Partition {
    let mut p = Tableau::empty();
    for &(_, bottom) in b.pairs() {
        row_insert(&mut p, bottom);
    }
    p.shape()
}
