//! Greene invariants computed by exhaustive search, independent of RSK.
//!
//! `i_k` is the largest number of biword letters that can be covered by `k`
//! pairwise-disjoint weakly increasing subsequences. Since the biword is sorted,
//! tops are automatically weakly increasing along any subsequence, so only the
//! bottom word matters.

use std::collections::HashMap;

use thiserror::Error;

use crate::matrices::{Biword, Matrix};
use crate::partitions::Partition;

pub const DEFAULT_MAX_WEIGHT: usize = 12;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GreeneError {
    #[error("biword of length {len} exceeds the exhaustive-search cap of {cap}")]
    TooLarge { len: usize, cap: usize },
}

/// Cumulative Greene invariants `(i_1, i_2, …)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreeneProfile {
    pub cumulative: Vec<u32>,
}

impl GreeneProfile {
    /// Consecutive differences with trailing zeros dropped.
    pub fn to_partition(&self) -> Option<Partition> {
        let mut prev = 0;
        let diffs = self
            .cumulative
            .iter()
            .map(|&c| {
                let d = c - prev;
                prev = c;
                d
            })
            .collect();
        Partition::from_trimmed(diffs).ok()
    }
}

/// Exhaustive Greene-invariant search with a hard cap on input length.
#[derive(Debug, Clone, Copy)]
pub struct GreeneOracle {
    pub max_weight: usize,
}

impl Default for GreeneOracle {
    fn default() -> Self {
        GreeneOracle {
            max_weight: DEFAULT_MAX_WEIGHT,
        }
    }
}

impl GreeneOracle {
    pub fn new(max_weight: usize) -> Self {
        GreeneOracle { max_weight }
    }

    fn check(&self, b: &Biword) -> Result<(), GreeneError> {
        if b.len() > self.max_weight {
            return Err(GreeneError::TooLarge {
                len: b.len(),
                cap: self.max_weight,
            });
        }
        Ok(())
    }

    pub fn max_k_increasing(&self, b: &Biword, k: usize) -> Result<u32, GreeneError> {
        self.check(b)?;
        Ok(ChainSearch::new(&b.bottom(), k).best())
    }

    /// `(i_1, …, i_k)` up to the first `k` with `i_k` equal to the length of `b`.
    pub fn profile(&self, b: &Biword) -> Result<GreeneProfile, GreeneError> {
        self.check(b)?;
        let word = b.bottom();
        let mut cumulative = Vec::new();
        for k in 1..=word.len() {
            let ik = ChainSearch::new(&word, k).best();
            cumulative.push(ik);
            if ik as usize == word.len() {
                break;
            }
        }
        Ok(GreeneProfile { cumulative })
    }

    /// Shape with `λ_k = i_k − i_{k−1}`; empty for the zero matrix.
    pub fn shape(&self, m: &Matrix) -> Result<Partition, GreeneError> {
        let profile = self.profile(&m.to_biword())?;
        Ok(profile
            .to_partition()
            .expect("greene increments are weakly decreasing"))
    }
}

pub fn max_k_increasing(b: &Biword, k: usize) -> Result<u32, GreeneError> {
    GreeneOracle::default().max_k_increasing(b, k)
}

pub fn greene_shape(m: &Matrix) -> Result<Partition, GreeneError> {
    GreeneOracle::default().shape(m)
}

/// Assigns each letter of `word` to one of `k` chains or discards it. Chains
/// are tracked by their tails (0 for an empty chain); the state is memoized on
/// the position and the sorted multiset of tails.
struct ChainSearch<'a> {
    word: &'a [u32],
    k: usize,
    memo: HashMap<(usize, Vec<u32>), u32>,
}

impl<'a> ChainSearch<'a> {
    fn new(word: &'a [u32], k: usize) -> Self {
        ChainSearch {
            word,
            k,
            memo: HashMap::new(),
        }
    }

    fn best(&mut self) -> u32 {
        if self.k == 0 {
            return 0;
        }
        if self.k >= self.word.len() {
            return self.word.len() as u32;
        }
        let tails = vec![0; self.k];
        self.search(0, tails)
    }

    fn search(&mut self, pos: usize, tails: Vec<u32>) -> u32 {
        if pos == self.word.len() {
            return 0;
        }
        let key = (pos, tails);
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let (pos, tails) = key;
        let x = self.word[pos];
        let remaining = (self.word.len() - pos) as u32;
        let mut best = self.search(pos + 1, tails.clone());
        let mut tried = None;
        for (idx, &tail) in tails.iter().enumerate() {
            if best == remaining {
                break;
            }
            if tail > x || tried == Some(tail) {
                continue;
            }
            tried = Some(tail);
            let mut next = tails.clone();
            next[idx] = x;
            next.sort_unstable();
            best = best.max(1 + self.search(pos + 1, next));
        }
        self.memo.insert((pos, tails), best);
        best
    }
}

/// Repeatedly removes one longest weakly increasing subsequence (leftmost
/// choice) from the bottom word and sums the lengths removed over `k` rounds.
///
/// This is not Greene's invariant in general; it is kept as the naive
/// comparison point.
pub fn greedy_k_increasing(b: &Biword, k: usize) -> u32 {
    let mut word = b.bottom();
    let mut total = 0;
    for _ in 0..k {
        if word.is_empty() {
            break;
        }
        let chain = longest_weak_chain(&word);
        total += chain.len() as u32;
        let mut keep = vec![true; word.len()];
        for &i in &chain {
            keep[i] = false;
        }
        word = word
            .iter()
            .zip(&keep)
            .filter(|(_, &k)| k)
            .map(|(&x, _)| x)
            .collect();
    }
    total
}

/// Positions of a longest weakly increasing subsequence of `word`.
pub fn longest_weak_chain(word: &[u32]) -> Vec<usize> {
    let n = word.len();
    let mut len = vec![1usize; n];
    let mut prev = vec![usize::MAX; n];
    for i in 0..n {
        for j in 0..i {
            if word[j] <= word[i] && len[j] + 1 > len[i] {
                len[i] = len[j] + 1;
                prev[i] = j;
            }
        }
    }
    let Some(mut end) = (0..n).max_by_key(|&i| (len[i], std::cmp::Reverse(i))) else {
        return Vec::new();
    };
    let mut chain = vec![end];
    while prev[end] != usize::MAX {
        end = prev[end];
        chain.push(end);
    }
    chain.reverse();
    chain
}
