//! Square nonnegative integer matrices, their biword encoding, inversions and
//! Hankel structure.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MatrixError {
    #[error("matrix must have at least one row")]
    Empty,
    #[error("row {row} has {len} entries, expected {n}")]
    NotSquare { row: usize, len: usize, n: usize },
    #[error("biword pair ({top},{bottom}) lies outside [1,{n}]x[1,{n}]")]
    PairOutOfRange { top: u32, bottom: u32, n: usize },
    #[error("biword pairs are not in lexicographic order at position {index}")]
    Unsorted { index: usize },
    #[error("anti-diagonal parameter list has length {len}; it must be odd (2n-1)")]
    EvenParamLength { len: usize },
    #[error("matrix is not Hankel: entry ({row},{col}) differs from its anti-diagonal")]
    NotHankel { row: usize, col: usize },
    #[error("cannot parse matrix {0:?}")]
    Parse(String),
}

/// An `n × n` matrix of nonnegative integers, stored densely in row-major order.
///
/// Indices on the public API are 0-based; position `(i, j)` here is the
/// 1-based position `(i + 1, j + 1)` in the usual notation.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Matrix {
    n: usize,
    entries: Vec<u32>,
}

impl Matrix {
    pub fn zeros(n: usize) -> Self {
        Matrix {
            n,
            entries: vec![0; n * n],
        }
    }

    pub fn from_rows(rows: Vec<Vec<u32>>) -> Result<Self, MatrixError> {
        let n = rows.len();
        if n == 0 {
            return Err(MatrixError::Empty);
        }
        let mut entries = Vec::with_capacity(n * n);
        for (row, r) in rows.into_iter().enumerate() {
            if r.len() != n {
                return Err(MatrixError::NotSquare {
                    row,
                    len: r.len(),
                    n,
                });
            }
            entries.extend(r);
        }
        Ok(Matrix { n, entries })
    }

    /// Row-major entries; panics unless `entries.len() == n * n`.
    pub fn from_entries(n: usize, entries: Vec<u32>) -> Self {
        assert_eq!(entries.len(), n * n, "expected {n}x{n} entries");
        Matrix { n, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: u32) {
        self.entries[i * self.n + j] = value;
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        self.entries
            .chunks(self.n.max(1))
            .map(<[u32]>::to_vec)
            .collect()
    }

    pub fn weight(&self) -> u32 {
        self.entries.iter().sum()
    }

    pub fn row_sums(&self) -> Vec<u32> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j)).sum())
            .collect()
    }

    pub fn column_sums(&self) -> Vec<u32> {
        (0..self.n)
            .map(|j| (0..self.n).map(|i| self.get(i, j)).sum())
            .collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Constant along every anti-diagonal `i + j = const`.
    pub fn is_hankel(&self) -> bool {
        self.first_non_hankel().is_none()
    }

    fn first_non_hankel(&self) -> Option<(usize, usize)> {
        // compare each entry with its up-right neighbour on the same anti-diagonal
        for i in 1..self.n {
            for j in 0..self.n - 1 {
                if self.get(i, j) != self.get(i - 1, j + 1) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// `Σ m[i][j] · m[k][l]` over position pairs with `i < k` and `j > l`.
    pub fn inversion_count(&self) -> u64 {
        let n = self.n;
        // below_left[k][l] = sum of m[k'][l'] with k' >= k, l' < l
        let mut below_left = vec![0u64; (n + 1) * (n + 1)];
        let idx = |k: usize, l: usize| k * (n + 1) + l;
        for k in (0..n).rev() {
            for l in 1..=n {
                below_left[idx(k, l)] = below_left[idx(k + 1, l)] + below_left[idx(k, l - 1)]
                    - below_left[idx(k + 1, l - 1)]
                    + u64::from(self.get(k, l - 1));
            }
        }
        let mut total = 0;
        for i in 0..n.saturating_sub(1) {
            for j in 1..n {
                let m = u64::from(self.get(i, j));
                if m > 0 {
                    total += m * below_left[idx(i + 1, j)];
                }
            }
        }
        total
    }

    /// Lists pair `(i, j)` (1-based) exactly `m[i][j]` times, in lexicographic order.
    pub fn to_biword(&self) -> Biword {
        let mut pairs = Vec::with_capacity(self.weight() as usize);
        for i in 0..self.n {
            for j in 0..self.n {
                let pair = (i as u32 + 1, j as u32 + 1);
                pairs.extend(std::iter::repeat_n(pair, self.get(i, j) as usize));
            }
        }
        Biword { pairs }
    }

    pub fn from_biword(b: &Biword, n: usize) -> Result<Matrix, MatrixError> {
        let mut m = Matrix::zeros(n);
        for &(top, bottom) in b.pairs() {
            let in_range = |x: u32| x >= 1 && x as usize <= n;
            if !in_range(top) || !in_range(bottom) {
                return Err(MatrixError::PairOutOfRange { top, bottom, n });
            }
            let (i, j) = (top as usize - 1, bottom as usize - 1);
            m.set(i, j, m.get(i, j) + 1);
        }
        Ok(m)
    }

    pub fn antidiagonal_params(&self) -> Result<HankelParams, MatrixError> {
        if let Some((row, col)) = self.first_non_hankel() {
            return Err(MatrixError::NotHankel { row, col });
        }
        let n = self.n;
        let s = (0..2 * n - 1)
            .map(|t| {
                let i = t.min(n - 1);
                self.get(i, t - i)
            })
            .collect();
        Ok(HankelParams { s })
    }

    /// Parses `"1,0,2;0,2,0;1,1,0"` or the JSON array-of-arrays form.
    pub fn parse(text: &str) -> Result<Matrix, MatrixError> {
        text.parse()
    }
}

impl FromStr for Matrix {
    type Err = MatrixError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let trimmed = s.trim();
        let err = || MatrixError::Parse(trimmed.to_string());
        let rows: Vec<Vec<u32>> = if trimmed.starts_with('[') {
            serde_json::from_str(trimmed).map_err(|_| err())?
        } else {
            trimmed
                .split(';')
                .map(|row| {
                    row.split(',')
                        .map(|x| x.trim().parse::<u32>())
                        .collect::<Result<Vec<_>, _>>()
                })
                .collect::<Result<_, _>>()
                .map_err(|_| err())?
        };
        Matrix::from_rows(rows)
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix{:?}", self.rows())
    }
}

/// The text form accepted by [`Matrix::parse`]: `1,0,2;0,2,0;1,1,0`.
impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows()
            .iter()
            .map(|r| r.iter().map(u32::to_string).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "{}", rows.join(";"))
    }
}

impl Serialize for Matrix {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.rows().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Matrix {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let rows = Vec::<Vec<u32>>::deserialize(deserializer)?;
        Matrix::from_rows(rows).map_err(serde::de::Error::custom)
    }
}

/// Two-line array of `(top, bottom)` pairs sorted lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Biword {
    pairs: Vec<(u32, u32)>,
}

impl Biword {
    pub fn new(pairs: Vec<(u32, u32)>) -> Result<Self, MatrixError> {
        if let Some(index) = pairs.windows(2).position(|w| w[0] > w[1]) {
            return Err(MatrixError::Unsorted { index: index + 1 });
        }
        Ok(Biword { pairs })
    }

    /// The biword of the permutation `w` (one-line notation, values `1..=len`).
    pub fn from_permutation(w: &[u32]) -> Self {
        Biword {
            pairs: w
                .iter()
                .enumerate()
                .map(|(i, &x)| (i as u32 + 1, x))
                .collect(),
        }
    }

    pub fn pairs(&self) -> &[(u32, u32)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn top(&self) -> Vec<u32> {
        self.pairs.iter().map(|p| p.0).collect()
    }

    pub fn bottom(&self) -> Vec<u32> {
        self.pairs.iter().map(|p| p.1).collect()
    }
}

/// Anti-diagonal parameters `s_2, s_3, …, s_{2n}` of a Hankel matrix.
///
/// Stored flat: `s()[t]` is the value on the anti-diagonal `i + j = t + 2`
/// in 1-based indices (equivalently `i + j = t` in 0-based indices).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HankelParams {
    s: Vec<u32>,
}

impl HankelParams {
    pub fn new(s: Vec<u32>) -> Result<Self, MatrixError> {
        if s.len().is_multiple_of(2) {
            return Err(MatrixError::EvenParamLength { len: s.len() });
        }
        Ok(HankelParams { s })
    }

    pub fn s(&self) -> &[u32] {
        &self.s
    }

    /// `s_d` for the 1-based anti-diagonal index `d = i + j`, `2 ≤ d ≤ 2n`.
    pub fn at_antidiagonal(&self, d: usize) -> u32 {
        self.s[d - 2]
    }

    pub fn n(&self) -> usize {
        self.s.len().div_ceil(2)
    }

    pub fn to_matrix(&self) -> Matrix {
        let n = self.n();
        let mut m = Matrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                m.set(i, j, self.s[i + j]);
            }
        }
        m
    }

    /// Sums `s_{k+1} + … + s_{2n−k+1}`: the `k`-th part of the shape a Hankel
    /// matrix with these parameters has (`k` is 1-based).
    pub fn window_sum(&self, k: usize) -> u32 {
        let n = self.n();
        if k == 0 || k > n {
            return 0;
        }
        self.s[k - 1..2 * n - k].iter().sum()
    }
}

/// `m[i][j] = s_{i+j}`; rejects parameter lists of even length.
pub fn hankel_from_params(s: &[u32]) -> Result<Matrix, MatrixError> {
    Ok(HankelParams::new(s.to_vec())?.to_matrix())
}
