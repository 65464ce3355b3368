#![allow(dead_code)]

use regring::{build_example_ring, Elem, Ring};

pub fn z(n: u64) -> Ring {
    Ring::zmod(n).unwrap()
}

pub fn m(k: usize, q: u64) -> Ring {
    Ring::matrix(k, q).unwrap()
}

/// Z/6, Z/30, M2(GF(2)), M2(GF(3)).
pub fn semiprime_rings() -> Vec<Ring> {
    vec![z(6), z(30), m(2, 2), m(2, 3)]
}

/// The semiprime rings followed by the example algebra.
pub fn all_rings() -> Vec<Ring> {
    let mut rings = semiprime_rings();
    rings.push(build_example_ring());
    rings
}

pub fn elements(ring: &Ring) -> Vec<Elem> {
    ring.elements().unwrap().collect()
}

pub fn mat(ring: &Ring, text: &str) -> Elem {
    regring::parse_element(ring, text).unwrap()
}
