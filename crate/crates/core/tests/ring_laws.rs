mod common;

use common::{m, z};
use proptest::prelude::*;
use regring::ring::is_semiprime;
use regring::{build_example_ring, Elem, Ring, RingSpec};

fn laws_hold(ring: &Ring, i: u64, j: u64, k: u64) {
    let n = ring.size();
    let (x, y, w) = (ring.elem_at(i % n), ring.elem_at(j % n), ring.elem_at(k % n));
    let mul = |p: &Elem, q: &Elem| ring.mul(p, q).unwrap();
    let add = |p: &Elem, q: &Elem| ring.add(p, q).unwrap();
    assert_eq!(mul(&mul(&x, &y), &w), mul(&x, &mul(&y, &w)));
    assert_eq!(mul(&x, &add(&y, &w)), add(&mul(&x, &y), &mul(&x, &w)));
    assert_eq!(mul(&add(&x, &y), &w), add(&mul(&x, &w), &mul(&y, &w)));
    assert_eq!(add(&x, &y), add(&y, &x));
    assert_eq!(mul(&ring.one(), &x), x);
    assert_eq!(mul(&x, &ring.one()), x);
    assert_eq!(add(&x, &ring.neg(&x).unwrap()), ring.zero());
    assert_eq!(ring.canonical_index(&x), i % n);
}

proptest! {
    #[test]
    fn zmod_is_a_ring(n in 2u64..500, i: u64, j: u64, k: u64) {
        laws_hold(&z(n), i, j, k);
    }

    #[test]
    fn matrix_rings_are_rings(k in 1usize..4, q in prop::sample::select(vec![2u64, 3, 5, 7]), i: u64, j: u64, l: u64) {
        laws_hold(&m(k, q), i, j, l);
    }

    #[test]
    fn example_is_a_ring(i: u64, j: u64, k: u64) {
        laws_hold(&build_example_ring(), i, j, k);
    }

    #[test]
    fn large_moduli_do_not_overflow(n in (1u64 << 62)..u64::MAX, i: u64, j: u64, k: u64) {
        laws_hold(&z(n), i, j, k);
    }
}

fn squarefree(n: u64) -> bool {
    (2..=n).take_while(|p| p * p <= n).all(|p| !n.is_multiple_of(p * p))
}

#[test]
fn semiprime_zmod_is_squarefree() {
    for n in 2..=100 {
        let v = is_semiprime(&z(n)).unwrap();
        assert_eq!(v.semiprime, squarefree(n), "Z/{n}");
        assert_eq!(v.witness.is_none(), v.semiprime);
    }
}

#[test]
fn matrix_rings_over_fields_are_semiprime() {
    for (k, q) in [(1, 2), (2, 2), (2, 3), (3, 2)] {
        assert!(is_semiprime(&m(k, q)).unwrap().semiprime);
    }
}

#[test]
fn specs_round_trip() {
    for ring in [z(12), m(2, 3), build_example_ring()] {
        let spec = ring.to_spec();
        let again = RingSpec::from_json(&spec.to_json()).unwrap().build().unwrap();
        assert_eq!(again.size(), ring.size());
        assert_eq!(again.describe(), ring.describe());
        let n = ring.size();
        for i in (0..n).step_by((n / 50).max(1) as usize) {
            for j in (0..n).step_by((n / 20).max(1) as usize) {
                let p = ring.mul(&ring.elem_at(i), &ring.elem_at(j)).unwrap();
                let q = again.mul(&again.elem_at(i), &again.elem_at(j)).unwrap();
                assert_eq!(ring.canonical_index(&p), again.canonical_index(&q));
            }
        }
    }
}

#[test]
fn elements_of_different_rings_do_not_mix() {
    let (r, s) = (z(6), z(6));
    assert!(r.add(&r.one(), &s.one()).is_err());
}
