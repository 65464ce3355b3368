use crate::error::Result;
use crate::matrix;
use crate::set::ElemSet;

use super::{Elem, Ring};

/// Some `a0` with `a·a0·a = a`, or `None` if `a` is not regular.
///
/// Matrix rings use the rank-factorization inverse and need no enumeration;
/// the other backends return the first witness in canonical order.
pub fn is_regular(ring: &Ring, a: &Elem) -> Result<Option<Elem>> {
    ring.check(a)?;
    if let Some(m) = ring.to_matrix(a) {
        return ring.from_matrix(&matrix::inner_inverse_matrix(&m)).map(Some);
    }
    let n = ring.enumerable_size()?;
    let ai = ring.idx(a);
    Ok((0..n).find(|&x| ring.mul3_idx(ai, x, ai) == ai).map(|x| ring.at(x)))
}

/// `Reg(R)`: every element admitting an inner inverse.
pub fn regular_elements(ring: &Ring) -> Result<ElemSet> {
    let n = ring.enumerable_size()?;
    if ring.matrix_params().is_some() {
        // Every matrix over a field is regular.
        return Ok(ElemSet::from_unsorted(ring, (0..n).collect()));
    }
    let members = (0..n).filter(|&a| (0..n).any(|x| ring.mul3_idx(a, x, a) == a)).collect();
    Ok(ElemSet::from_unsorted(ring, members))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemiprimeVerdict {
    pub semiprime: bool,
    /// The first nonzero `z` (canonical order) with `z·R·z = 0`.
    pub witness: Option<Elem>,
}

/// Semiprime iff no nonzero `z` has `z·t·z = 0` for every `t`.
///
/// `z·t·z` is additive in `t`, so it suffices to test `t` over additive
/// generators.
pub fn is_semiprime(ring: &Ring) -> Result<SemiprimeVerdict> {
    let n = ring.enumerable_size()?;
    let gens = ring.generator_indices();
    let witness = (1..n).find(|&z| gens.iter().all(|&g| ring.mul3_idx(z, g, z) == 0));
    Ok(SemiprimeVerdict { semiprime: witness.is_none(), witness: witness.map(|z| ring.at(z)) })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u64) -> Ring {
        Ring::zmod(n).unwrap()
    }

    fn residues(set: &ElemSet) -> Vec<u64> {
        set.iter().map(|x| x.coords()[0]).collect()
    }

    #[test]
    fn two_is_not_regular_mod_4() {
        let r = z(4);
        assert_eq!(is_regular(&r, &r.elem(&[2]).unwrap()).unwrap(), None);
    }

    #[test]
    fn zero_is_regular_with_witness_zero() {
        for r in [z(4), z(6), Ring::matrix(2, 3).unwrap()] {
            assert_eq!(is_regular(&r, &r.zero()).unwrap(), Some(r.zero()));
        }
    }

    #[test]
    fn regular_element_sets() {
        assert_eq!(residues(&regular_elements(&z(6)).unwrap()), vec![0, 1, 2, 3, 4, 5]);
        assert_eq!(residues(&regular_elements(&z(4)).unwrap()), vec![0, 1, 3]);
        assert_eq!(residues(&regular_elements(&z(2)).unwrap()), vec![0, 1]);
    }

    #[test]
    fn matrix_regularity_witness_is_inner() {
        let r = Ring::matrix(2, 3).unwrap();
        for a in r.elements().unwrap() {
            let g = is_regular(&r, &a).unwrap().unwrap();
            assert_eq!(r.product(&[&a, &g, &a]).unwrap(), a);
        }
    }

    #[test]
    fn semiprime_examples() {
        assert_eq!(is_semiprime(&z(6)).unwrap(), SemiprimeVerdict { semiprime: true, witness: None });
        let r4 = z(4);
        assert_eq!(
            is_semiprime(&r4).unwrap(),
            SemiprimeVerdict { semiprime: false, witness: Some(r4.elem(&[2]).unwrap()) }
        );
        assert!(is_semiprime(&Ring::matrix(2, 2).unwrap()).unwrap().semiprime);
    }
}
