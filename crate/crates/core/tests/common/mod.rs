#![allow(dead_code)]

use rsklab::Matrix;

/// Every `n × n` nonnegative matrix of weight at most `max_weight`.
pub fn all_matrices(n: usize, max_weight: u32) -> Vec<Matrix> {
    fn rec(pos: usize, left: u32, cur: &mut Vec<u32>, n: usize, out: &mut Vec<Matrix>) {
        if pos == cur.len() {
            out.push(Matrix::from_entries(n, cur.clone()));
            return;
        }
        for v in 0..=left {
            cur[pos] = v;
            rec(pos + 1, left - v, cur, n, out);
        }
        cur[pos] = 0;
    }
    let mut out = Vec::new();
    rec(0, max_weight, &mut vec![0; n * n], n, &mut out);
    out
}

/// All permutations of `1..=len` in lexicographic order.
pub fn permutations(len: u32) -> Vec<Vec<u32>> {
    fn rec(cur: &mut Vec<u32>, used: &mut Vec<bool>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for x in 0..used.len() {
            if !used[x] {
                used[x] = true;
                cur.push(x as u32 + 1);
                rec(cur, used, out);
                cur.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; len as usize], &mut out);
    out
}

pub fn permutation_matrix(w: &[u32]) -> Matrix {
    let n = w.len();
    let mut m = Matrix::zeros(n);
    for (i, &x) in w.iter().enumerate() {
        m.set(i, x as usize - 1, 1);
    }
    m
}

/// Longest strictly increasing subsequence by checking every subset.
pub fn brute_lis(w: &[u32]) -> usize {
    (0u32..1 << w.len())
        .filter(|mask| {
            let picked: Vec<u32> = (0..w.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| w[i])
                .collect();
            picked.windows(2).all(|p| p[0] < p[1])
        })
        .map(|mask| mask.count_ones() as usize)
        .max()
        .unwrap_or(0)
}
