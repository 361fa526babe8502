//! Integer partitions, conjugation and column multiplicities.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PartitionError {
    #[error("part {index} is zero; parts must be positive")]
    ZeroPart { index: usize },
    #[error("parts are not weakly decreasing at position {index}")]
    NotDecreasing { index: usize },
    #[error("cannot parse partition {0:?}")]
    Parse(String),
}

/// A weakly decreasing sequence of positive integers, stored without trailing zeros.
///
/// The empty partition (weight 0) is allowed; it is the shape of the zero matrix.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self, PartitionError> {
        if let Some(index) = parts.iter().position(|&p| p == 0) {
            return Err(PartitionError::ZeroPart { index });
        }
        if let Some(index) = parts.windows(2).position(|w| w[0] < w[1]) {
            return Err(PartitionError::NotDecreasing { index: index + 1 });
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from a sequence that may carry trailing zeros.
    pub fn from_trimmed(mut parts: Vec<u32>) -> Result<Self, PartitionError> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Self::new(parts)
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of (positive) parts, written n or ℓ(λ).
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// The `i`-th part (0-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Partition of the transposed Young diagram: `λ'_j = #{i : λ_i ≥ j}`.
    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        let parts = (1..=width)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count() as u32)
            .collect();
        Partition { parts }
    }

    pub fn column_multiplicities(&self) -> ColumnMultiplicities {
        let n = self.len();
        let r = (0..n).map(|i| self.part(i) - self.part(i + 1)).collect();
        ColumnMultiplicities { r }
    }

    /// Inverse of [`Partition::column_multiplicities`]: `λ_k = Σ_{i≥k} r_i`.
    pub fn from_column_multiplicities(r: &ColumnMultiplicities) -> Result<Self, PartitionError> {
        let mut parts = Vec::with_capacity(r.r.len());
        let mut acc = 0;
        for &ri in r.r.iter().rev() {
            acc += ri;
            parts.push(acc);
        }
        parts.reverse();
        Self::from_trimmed(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "empty");
        }
        let text: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "({})", text.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{:?}", self.parts)
    }
}

/// Parses the comma-separated text form, e.g. `"4,2,2,1"`.
impl FromStr for Partition {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let s = s
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .unwrap_or(s);
        if s.is_empty() {
            return Err(PartitionError::Parse(s.to_string()));
        }
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<u32>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| PartitionError::Parse(s.to_string()))?;
        Partition::new(parts)
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = PartitionError;

    fn try_from(parts: Vec<u32>) -> Result<Self, Self::Error> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

/// `r_i = λ_i − λ_{i+1}` for `i < n`, `r_n = λ_n`: the number of columns of height `i`.
///
/// Stored 0-based, so `r()[0]` is `r_1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColumnMultiplicities {
    r: Vec<u32>,
}

impl ColumnMultiplicities {
    pub fn new(r: Vec<u32>) -> Self {
        ColumnMultiplicities { r }
    }

    pub fn r(&self) -> &[u32] {
        &self.r
    }

    /// Number of columns of height `height` (1-based), zero when out of range.
    pub fn of_height(&self, height: usize) -> u32 {
        height
            .checked_sub(1)
            .and_then(|i| self.r.get(i))
            .copied()
            .unwrap_or(0)
    }

    /// `Σ i·r_i`, which equals the weight of the partition.
    pub fn weighted_sum(&self) -> u32 {
        self.r
            .iter()
            .enumerate()
            .map(|(i, &ri)| (i as u32 + 1) * ri)
            .sum()
    }
}

/// Every partition of `weight` with exactly `exact_parts` positive parts, in
/// lexicographically decreasing order.
pub fn enumerate_partitions(weight: u32, exact_parts: usize) -> impl Iterator<Item = Partition> {
    let mut out = Vec::new();
    if exact_parts > 0 && exact_parts as u32 <= weight {
        let mut prefix = Vec::with_capacity(exact_parts);
        fill_parts(weight, exact_parts, weight, &mut prefix, &mut out);
    } else if exact_parts == 0 && weight == 0 {
        out.push(Partition::empty());
    }
    out.into_iter()
}

fn fill_parts(
    remaining: u32,
    slots: usize,
    cap: u32,
    prefix: &mut Vec<u32>,
    out: &mut Vec<Partition>,
) {
    if slots == 0 {
        if remaining == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
        }
        return;
    }
    // each of the remaining slots needs at least 1
    let hi = cap.min(remaining - (slots as u32 - 1));
    let lo = remaining.div_ceil(slots as u32);
    for part in (lo..=hi).rev() {
        prefix.push(part);
        fill_parts(remaining - part, slots - 1, part, prefix, out);
        prefix.pop();
    }
}
