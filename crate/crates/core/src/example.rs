//! The GF(2)-algebra on `a, b, x` with
//! `axa = a, bxb = b, xax = x, xbx = x, a² = b² = ab = ba = x² = 0`,
//! unity adjoined. It has regular `a ≠ b` with equal inner-inverse sets.
//!
//! The product table below was derived by rewriting completion of the
//! relations (see [`crate::rewrite`]); tests rebuild it from the relations and
//! compare.

use crate::error::{Error, Result};
use crate::ring::{Elem, Ring, TableSpec};

/// Basis in shortlex order; `1` is the unity.
pub const EXAMPLE_BASIS: [&str; 10] = ["1", "a", "b", "x", "ax", "bx", "xa", "xb", "axb", "bxa"];

/// Nonzero basis products `(i, j, k)`: `b_i · b_j = b_k`.
#[rustfmt::skip]
const PRODUCTS: [(usize, usize, usize); 55] = [
    (0, 0, 0), (0, 1, 1), (0, 2, 2), (0, 3, 3), (0, 4, 4), (0, 5, 5), (0, 6, 6), (0, 7, 7), (0, 8, 8), (0, 9, 9),
    (1, 0, 1), (1, 3, 4), (1, 6, 1), (1, 7, 8),
    (2, 0, 2), (2, 3, 5), (2, 6, 9), (2, 7, 2),
    (3, 0, 3), (3, 1, 6), (3, 2, 7), (3, 4, 3), (3, 5, 3), (3, 8, 7), (3, 9, 6),
    (4, 0, 4), (4, 1, 1), (4, 2, 8), (4, 4, 4), (4, 5, 4), (4, 8, 8), (4, 9, 1),
    (5, 0, 5), (5, 1, 9), (5, 2, 2), (5, 4, 5), (5, 5, 5), (5, 8, 2), (5, 9, 9),
    (6, 0, 6), (6, 3, 3), (6, 6, 6), (6, 7, 7),
    (7, 0, 7), (7, 3, 3), (7, 6, 6), (7, 7, 7),
    (8, 0, 8), (8, 3, 4), (8, 6, 1), (8, 7, 8),
    (9, 0, 9), (9, 3, 5), (9, 6, 9), (9, 7, 2),
];

/// The defining relations, `None` meaning zero.
pub const EXAMPLE_RELATIONS: [(&str, Option<&str>); 9] = [
    ("axa", Some("a")),
    ("bxb", Some("b")),
    ("xax", Some("x")),
    ("xbx", Some("x")),
    ("aa", None),
    ("bb", None),
    ("ab", None),
    ("ba", None),
    ("xx", None),
];

pub fn example_spec() -> TableSpec {
    let mut unity = vec![0; EXAMPLE_BASIS.len()];
    unity[0] = 1;
    TableSpec {
        p: 2,
        basis: EXAMPLE_BASIS.iter().map(|s| s.to_string()).collect(),
        unity,
        constants: PRODUCTS.iter().map(|&(i, j, k)| (i, j, k, 1)).collect(),
    }
}

/// Builds the ring and re-verifies every defining relation.
pub fn build_example_ring() -> Ring {
    let ring = Ring::table(&example_spec()).expect("embedded example table is a valid algebra");
    if let Err(e) = example_generators(&ring) {
        panic!("embedded example table violates its relations: {e}");
    }
    ring
}

/// The generators `a`, `b`, `x` of an example ring.
#[derive(Debug, Clone)]
pub struct ExampleGenerators {
    pub a: Elem,
    pub b: Elem,
    pub x: Elem,
}

fn word(ring: &Ring, w: &str) -> Result<Elem> {
    let t = ring.table_algebra().ok_or_else(|| Error::WrongRing("not a table algebra".into()))?;
    let mut acc = ring.one();
    for c in w.chars() {
        let pos = t
            .labels()
            .iter()
            .position(|l| l.len() == 1 && l.starts_with(c))
            .ok_or_else(|| Error::WrongRing(format!("no generator {c}")))?;
        let mut coords = vec![0; t.dim()];
        coords[pos] = 1;
        acc = ring.mul(&acc, &ring.elem(&coords)?)?;
    }
    Ok(acc)
}

/// Checks that `ring` is the example algebra (basis, characteristic, all
/// relations and unity laws) and returns its generators.
pub fn example_generators(ring: &Ring) -> Result<ExampleGenerators> {
    let t = ring.table_algebra().ok_or_else(|| Error::WrongRing("not a table algebra".into()))?;
    if t.p() != 2 || t.labels().iter().map(String::as_str).ne(EXAMPLE_BASIS) {
        return Err(Error::WrongRing("basis differs from the example basis".into()));
    }
    for (lhs, rhs) in EXAMPLE_RELATIONS {
        let left = word(ring, lhs)?;
        let right = match rhs {
            Some(r) => word(ring, r)?,
            None => ring.zero(),
        };
        if left != right {
            return Err(Error::WrongRing(format!("relation {lhs} = {} fails", rhs.unwrap_or("0"))));
        }
    }
    let gens = ExampleGenerators { a: word(ring, "a")?, b: word(ring, "b")?, x: word(ring, "x")? };
    for g in [&gens.a, &gens.b, &gens.x] {
        if ring.mul(&ring.one(), g)? != *g || ring.mul(g, &ring.one())? != *g {
            return Err(Error::WrongRing("unity law fails".into()));
        }
    }
    Ok(gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rewrite::RewriteSystem;

    #[test]
    fn table_matches_rewriting_completion() {
        let sys = RewriteSystem::complete(&['a', 'b', 'x'], &EXAMPLE_RELATIONS, 100).unwrap();
        let derived = sys.table_spec(2, 64).unwrap();
        assert_eq!(derived, example_spec());
    }

    #[test]
    fn basis_has_nine_nonunit_words_and_1024_elements() {
        let ring = build_example_ring();
        assert_eq!(EXAMPLE_BASIS.len() - 1, 9);
        assert_eq!(ring.size(), 1024);
        assert_eq!(ring.elements().unwrap().count(), 1024);
    }

    #[test]
    fn defining_products() {
        let ring = build_example_ring();
        let ExampleGenerators { a, b, x } = example_generators(&ring).unwrap();
        assert_eq!(ring.product(&[&a, &x, &a]).unwrap(), a);
        assert_eq!(ring.mul(&a, &b).unwrap(), ring.zero());
        assert_eq!(ring.mul(&x, &ring.mul(&a, &x).unwrap()).unwrap(), x);
    }

    #[test]
    fn other_rings_are_not_the_example() {
        assert!(matches!(example_generators(&Ring::zmod(6).unwrap()), Err(Error::WrongRing(_))));
        let mut spec = example_spec();
        spec.constants.retain(|&(i, j, _, _)| !(i == 1 && j == 3)); // drop a·x = ax
        if let Ok(ring) = Ring::table(&spec) {
            assert!(example_generators(&ring).is_err());
        }
    }
}
