mod common;

use common::{elements, m};
use proptest::prelude::*;
use regring::ginv::{inner_inverses, principal_left_ideal, principal_right_ideal};
use regring::matrix::{
    inner_inverse_matrix, inner_set_equal_matrices, inner_subset_matrices, membership_ar, membership_ra, rank, Matrix,
};

fn oracle_agrees(k: usize, q: u64) -> usize {
    let ring = m(k, q);
    let elems = elements(&ring);
    let mats: Vec<Matrix> = elems.iter().map(|e| ring.to_matrix(e).unwrap()).collect();
    let inner: Vec<_> = elems.iter().map(|e| inner_inverses(&ring, e).unwrap()).collect();
    let right: Vec<_> = elems.iter().map(|e| principal_right_ideal(&ring, e).unwrap()).collect();
    let left: Vec<_> = elems.iter().map(|e| principal_left_ideal(&ring, e).unwrap()).collect();
    let mut pairs = 0;
    for i in 0..elems.len() {
        for j in 0..elems.len() {
            assert_eq!(inner_set_equal_matrices(&mats[i], &mats[j]), inner[i] == inner[j], "{i} {j}");
            assert_eq!(inner_subset_matrices(&mats[i], &mats[j]), inner[i].is_subset(&inner[j]), "{i} {j}");
            assert_eq!(membership_ar(&mats[j], &mats[i]), right[i].contains(&elems[j]));
            assert_eq!(membership_ra(&mats[j], &mats[i]), left[i].contains(&elems[j]));
            pairs += 1;
        }
    }
    pairs
}

#[test]
fn oracle_m2_gf2() {
    assert_eq!(oracle_agrees(2, 2), 256);
}

#[test]
fn oracle_m2_gf3() {
    assert_eq!(oracle_agrees(2, 3), 6561);
}

#[test]
fn ginverse_is_reflexive_on_every_small_matrix() {
    for (k, q) in [(2, 2), (2, 3), (3, 2)] {
        let ring = m(k, q);
        for e in elements(&ring) {
            let a = ring.to_matrix(&e).unwrap();
            let g = inner_inverse_matrix(&a);
            assert_eq!(a.mul(&g).mul(&a), a);
            assert_eq!(g.mul(&a).mul(&g), g);
            assert!(inner_inverses(&ring, &e).unwrap().contains(&ring.from_matrix(&g).unwrap()));
        }
    }
}

fn matrix_strategy() -> impl Strategy<Value = (Matrix, Matrix)> {
    (2usize..7, prop::sample::select(vec![2u64, 3, 5, 7, 65_521, 4_294_967_291])).prop_flat_map(|(k, q)| {
        let entries = prop::collection::vec(0..q, k * k);
        (entries.clone(), entries, 0..=k).prop_map(move |(x, y, r)| {
            // Low-rank products exercise the singular cases.
            let a = Matrix::from_entries(k, q, x);
            let b = Matrix::from_entries(k, q, y);
            (a.mul(&Matrix::diag_identity(k, q, r)).mul(&b), b)
        })
    })
}

proptest! {
    #[test]
    fn ginverse_properties_at_scale((a, b) in matrix_strategy()) {
        let g = inner_inverse_matrix(&a);
        prop_assert_eq!(a.mul(&g).mul(&a), a.clone());
        prop_assert_eq!(g.mul(&a).mul(&g), g.clone());
        prop_assert_eq!(rank(&g), rank(&a));
        prop_assert!(inner_set_equal_matrices(&a, &a));
        prop_assert!(membership_ar(&a.mul(&b), &a));
        prop_assert!(membership_ra(&b.mul(&a), &a));
    }
}
