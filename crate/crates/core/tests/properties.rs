mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;
use rsklab::greene::GreeneOracle;
use rsklab::partitions::enumerate_partitions;
use rsklab::search::{enumerate_shape_class, enumerate_via_inverse_rsk, Caps};
use rsklab::{rsk_forward, rsk_inverse, shape_of_matrix, Biword, Matrix};

use common::{all_matrices, brute_lis, permutation_matrix, permutations};

#[test]
fn first_row_is_longest_increasing_subsequence() {
    for len in 1..=7 {
        for w in permutations(len) {
            let shape = shape_of_matrix(&permutation_matrix(&w));
            assert_eq!(shape.part(0) as usize, brute_lis(&w), "{w:?}");
            let rev: Vec<u32> = w.iter().rev().copied().collect();
            // longest decreasing subsequence = first column
            assert_eq!(shape.len(), brute_lis(&rev));
        }
    }
}

#[test]
fn reversal_transposes_insertion_tableau() {
    for len in 1..=6 {
        for w in permutations(len) {
            let rev: Vec<u32> = w.iter().rev().copied().collect();
            let p = rsk_forward(&permutation_matrix(&w)).p;
            let p_rev = rsk_forward(&permutation_matrix(&rev)).p;
            assert_eq!(p_rev, p.transpose(), "{w:?}");
        }
    }
}

#[test]
fn inverse_permutation_swaps_tableaux() {
    for w in permutations(5) {
        let mut inv = vec![0u32; w.len()];
        for (i, &x) in w.iter().enumerate() {
            inv[x as usize - 1] = i as u32 + 1;
        }
        let pair = rsk_forward(&permutation_matrix(&w));
        let pair_inv = rsk_forward(&permutation_matrix(&inv));
        assert_eq!((pair_inv.p, pair_inv.q), (pair.q, pair.p));
    }
}

#[test]
fn outputs_are_semistandard_with_matching_content() {
    for m in all_matrices(3, 6) {
        let pair = rsk_forward(&m);
        assert!(pair.p.validate_ssyt() && pair.q.validate_ssyt());
        assert_eq!(pair.p.shape(), pair.q.shape());
        assert_eq!(&pair.q.content(3)[1..], m.row_sums().as_slice());
        assert_eq!(&pair.p.content(3)[1..], m.column_sums().as_slice());
    }
}

#[test]
fn enumeration_strategies_agree_up_to_weight_8() {
    let caps = Caps::default();
    for weight in 1..=8 {
        for n in 1..=3 {
            for p in enumerate_partitions(weight, n) {
                let a = enumerate_shape_class(&p, &caps).unwrap();
                let b = enumerate_via_inverse_rsk(&p, &caps).unwrap();
                assert_eq!(a, b, "{p}");
                assert!(!a.is_empty());
                let distinct: BTreeSet<&Matrix> = b.iter().collect();
                assert_eq!(
                    distinct.len(),
                    b.len(),
                    "inverse RSK repeated a matrix for {p}"
                );
            }
        }
    }
}

#[test]
fn shape_class_matches_unpruned_filter() {
    let caps = Caps::default();
    let all = all_matrices(3, 6);
    for weight in 1..=6 {
        for p in enumerate_partitions(weight, 3) {
            let filtered: Vec<Matrix> = all
                .iter()
                .filter(|m| m.weight() == weight && shape_of_matrix(m) == p)
                .cloned()
                .collect::<BTreeSet<_>>()
                .into_iter()
                .collect();
            assert_eq!(enumerate_shape_class(&p, &caps).unwrap(), filtered, "{p}");
        }
    }
}

#[test]
fn greene_profile_on_permutations() {
    let oracle = GreeneOracle::default();
    for w in permutations(6) {
        let shape = shape_of_matrix(&permutation_matrix(&w));
        let profile = oracle.profile(&Biword::from_permutation(&w)).unwrap();
        assert_eq!(profile.to_partition().unwrap(), shape, "{w:?}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn roundtrip_4x4(entries in proptest::collection::vec(0u32..3, 16)) {
        let m = Matrix::from_entries(4, entries);
        let pair = rsk_forward(&m);
        prop_assert_eq!(rsk_inverse(&pair.p, &pair.q, 4).unwrap(), m.clone());
        let t = rsk_forward(&m.transpose());
        prop_assert_eq!((t.p, t.q), (pair.q, pair.p));
    }

    #[test]
    fn symmetric_gives_equal_tableaux(upper in proptest::collection::vec(0u32..3, 10)) {
        let mut m = Matrix::zeros(4);
        let mut it = upper.into_iter();
        for i in 0..4 {
            for j in i..4 {
                let v = it.next().unwrap();
                m.set(i, j, v);
                m.set(j, i, v);
            }
        }
        let pair = rsk_forward(&m);
        prop_assert_eq!(pair.p, pair.q);
    }
}
