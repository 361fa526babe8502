//! Conjectured minimal-inversion matrices of a fixed shape and the closed-form
//! minimum.
//!
//! For a shape `λ` with `n` parts and column multiplicities `r`, a Hankel
//! matrix with parameters `s_2, …, s_{2n}` has shape `λ` exactly when
//! `s_{k+1} + s_{2n−k+1} = r_k` for `1 ≤ k < n` and `s_{n+1} = r_n`. The
//! candidates split each `r_k` (`k ≥ 2`) as evenly as possible, in either
//! order, and split `r_1` between the two corner anti-diagonals in every way.

use std::collections::BTreeSet;

use crate::matrices::{HankelParams, Matrix};
use crate::partitions::Partition;

/// One way of distributing the column multiplicities over anti-diagonals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitChoice {
    /// `s_2`, in `0..=r_1`; `s_{2n}` receives the rest.
    pub end_split: u32,
    /// For `k = 2..n−1` (index `k − 2`): whether `s_{k+1}` takes `⌈r_k/2⌉`.
    /// Irrelevant when `r_k` is even.
    pub ceil_first: Vec<bool>,
}

impl SplitChoice {
    pub fn params(&self, p: &Partition) -> HankelParams {
        let n = p.len();
        let r = p.column_multiplicities();
        let mut s = vec![0u32; 2 * n - 1];
        // s_d lives at index d - 2
        s[n - 1] = r.of_height(n);
        if n >= 2 {
            s[0] = self.end_split;
            s[2 * n - 2] = r.of_height(1) - self.end_split;
        }
        for k in 2..n {
            let rk = r.of_height(k);
            let (lo, hi) = (rk / 2, rk.div_ceil(2));
            let (first, second) = if self.ceil_first[k - 2] {
                (hi, lo)
            } else {
                (lo, hi)
            };
            s[k - 1] = first;
            s[2 * n - k - 1] = second;
        }
        HankelParams::new(s).expect("2n-1 is odd")
    }
}

/// All split choices for `p`, without duplicates for even `r_k`.
pub fn split_choices(p: &Partition) -> Vec<SplitChoice> {
    let n = p.len();
    if n == 0 {
        return Vec::new();
    }
    let r = p.column_multiplicities();
    let end_range = if n == 1 { 0..=0 } else { 0..=r.of_height(1) };
    let mut orders: Vec<Vec<bool>> = vec![Vec::new()];
    for k in 2..n {
        let options: &[bool] = if r.of_height(k).is_multiple_of(2) {
            &[false]
        } else {
            &[false, true]
        };
        orders = orders
            .into_iter()
            .flat_map(|prefix| {
                options.iter().map(move |&o| {
                    let mut v = prefix.clone();
                    v.push(o);
                    v
                })
            })
            .collect();
    }
    end_range
        .flat_map(|end_split| {
            orders.iter().map(move |o| SplitChoice {
                end_split,
                ceil_first: o.clone(),
            })
        })
        .collect()
}

/// `(r_1 + 1) · Π_{k=2}^{n−1} (1 if r_k even else 2)`, or 1 when `n = 1`.
pub fn expected_candidate_count(p: &Partition) -> usize {
    let n = p.len();
    if n <= 1 {
        return n;
    }
    let r = p.column_multiplicities();
    let odd = (2..n).filter(|&k| r.of_height(k) % 2 == 1).count();
    (r.of_height(1) as usize + 1) << odd
}

/// The Hankel matrices of every split choice, sorted and deduplicated.
pub fn minimal_hankel_candidates(p: &Partition) -> Vec<Matrix> {
    let set: BTreeSet<Matrix> = split_choices(p)
        .iter()
        .map(|c| c.params(p).to_matrix())
        .collect();
    set.into_iter().collect()
}

/// The proven two-row answer: minimum `λ2²`, attained by `[[k, λ2], [λ2, λ1−λ2−k]]`.
pub fn two_row_minimal(lambda1: u32, lambda2: u32) -> (u64, Vec<Matrix>) {
    assert!(lambda1 >= lambda2 && lambda2 >= 1, "need λ1 ≥ λ2 ≥ 1");
    let d = lambda1 - lambda2;
    let matrices = (0..=d)
        .map(|k| Matrix::from_entries(2, vec![k, lambda2, lambda2, d - k]))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    (u64::from(lambda2).pow(2), matrices)
}

/// `C(x, 2)`, taken as 0 for `x < 2`.
fn choose2(x: i64) -> u64 {
    if x < 2 {
        0
    } else {
        (x * (x - 1) / 2) as u64
    }
}

/// Closed-form minimum inversion count:
///
/// `Σ_i (⌊i/2⌋ + 1)·C(λ'_i, 2) + Σ_{i odd} Σ_{j even} C(λ'_i + λ'_j − n, 2)`
///
/// with 1-based column indices `i, j` of the conjugate `λ'` and `n = ℓ(λ)`.
pub fn minimal_inversion_formula(p: &Partition) -> u64 {
    let n = p.len() as i64;
    let cols: Vec<i64> = p
        .conjugate()
        .parts()
        .iter()
        .map(|&c| i64::from(c))
        .collect();
    let own: u64 = cols
        .iter()
        .enumerate()
        .map(|(idx, &c)| {
            let i = idx as u64 + 1;
            (i / 2 + 1) * choose2(c)
        })
        .sum();
    let odd = cols.iter().step_by(2);
    let cross: u64 = odd
        .flat_map(|&ci| {
            cols.iter()
                .skip(1)
                .step_by(2)
                .map(move |&cj| choose2(ci + cj - n))
        })
        .sum();
    own + cross
}
