use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::Result;
use crate::ring::{Elem, Ring};

/// A finite set of elements of one ring, stored as sorted canonical indices.
/// Two sets are equal exactly when their index sequences are.
#[derive(Clone)]
pub struct ElemSet {
    ring: Ring,
    members: Vec<u32>,
}

impl ElemSet {
    pub fn empty(ring: &Ring) -> ElemSet {
        ElemSet { ring: ring.clone(), members: Vec::new() }
    }

    pub fn singleton(ring: &Ring, x: &Elem) -> Result<ElemSet> {
        ring.check(x)?;
        Ok(ElemSet { ring: ring.clone(), members: vec![ring.idx(x)] })
    }

    pub fn from_elems<'a>(ring: &Ring, elems: impl IntoIterator<Item = &'a Elem>) -> Result<ElemSet> {
        let mut members = Vec::new();
        for x in elems {
            ring.check(x)?;
            members.push(ring.idx(x));
        }
        Ok(ElemSet::from_unsorted(ring, members))
    }

    pub(crate) fn from_unsorted(ring: &Ring, mut members: Vec<u32>) -> ElemSet {
        members.sort_unstable();
        members.dedup();
        ElemSet { ring: ring.clone(), members }
    }

    pub(crate) fn from_bits(ring: &Ring, bits: &FixedBitSet) -> ElemSet {
        ElemSet { ring: ring.clone(), members: bits.ones().map(|i| i as u32).collect() }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn indices(&self) -> &[u32] {
        &self.members
    }

    pub fn contains(&self, x: &Elem) -> bool {
        x.ring_id() == self.ring.id() && self.contains_idx(self.ring.idx(x))
    }

    pub(crate) fn contains_idx(&self, i: u32) -> bool {
        self.members.binary_search(&i).is_ok()
    }

    pub fn first(&self) -> Option<Elem> {
        self.members.first().map(|&i| self.ring.at(i))
    }

    pub fn iter(&self) -> impl Iterator<Item = Elem> + '_ {
        self.members.iter().map(|&i| self.ring.at(i))
    }

    pub fn is_subset(&self, other: &ElemSet) -> bool {
        self.ring == other.ring && self.members.iter().all(|&i| other.contains_idx(i))
    }

    pub fn intersection(&self, other: &ElemSet) -> ElemSet {
        ElemSet {
            ring: self.ring.clone(),
            members: self.members.iter().copied().filter(|&i| other.contains_idx(i)).collect(),
        }
    }

    /// Members outside `other`, in canonical order.
    pub fn difference(&self, other: &ElemSet) -> Vec<Elem> {
        self.members.iter().filter(|&&i| !other.contains_idx(i)).map(|&i| self.ring.at(i)).collect()
    }
}

impl PartialEq for ElemSet {
    fn eq(&self, other: &ElemSet) -> bool {
        self.ring == other.ring && self.members == other.members
    }
}

impl Eq for ElemSet {}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter().map(|x| crate::parse::render(&self.ring, &x))).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_and_duplicate_free() {
        let z6 = Ring::zmod(6).unwrap();
        let xs: Vec<Elem> = [5, 1, 3, 1].iter().map(|&c| z6.elem(&[c]).unwrap()).collect();
        let s = ElemSet::from_elems(&z6, &xs).unwrap();
        assert_eq!(s.indices(), &[1, 3, 5]);
        assert!(s.contains(&z6.elem(&[3]).unwrap()));
        assert!(!s.contains(&z6.elem(&[2]).unwrap()));
        assert_eq!(s.first(), Some(z6.elem(&[1]).unwrap()));
    }

    #[test]
    fn sets_from_different_rings_differ() {
        let a = Ring::zmod(6).unwrap();
        let b = Ring::zmod(6).unwrap();
        assert_ne!(ElemSet::empty(&a), ElemSet::empty(&b));
        assert!(ElemSet::from_elems(&a, &[b.one()]).is_err());
    }
}
