use std::cell::{OnceCell, RefCell};
use std::collections::HashMap;
use std::rc::Rc;

use fixedbitset::FixedBitSet;

use crate::error::Result;
use crate::example::{example_generators, ExampleGenerators};
use crate::ring::{is_semiprime, Elem, Ring, SemiprimeVerdict};
use crate::set::ElemSet;

/// Rings up to this size are quantified exhaustively.
pub const FULL_LIMIT: u32 = 4096;

/// Number of elements quantified over in sampled mode.
pub const SAMPLE_SIZE: u32 = 256;

type Cache = RefCell<HashMap<u32, Rc<FixedBitSet>>>;

/// Shared state for the checks on one ring: the quantification domain and
/// lazily built element sets, as index bitmaps.
pub struct Lab {
    ring: Ring,
    n: u32,
    domain: Vec<u32>,
    sampled: bool,
    inner: Cache,
    outer: Cache,
    right_ideal: Cache,
    left_ideal: Cache,
    semiprime: OnceCell<SemiprimeVerdict>,
    units: OnceCell<Vec<u32>>,
    example: OnceCell<Option<ExampleGenerators>>,
}

/// `0`, `1` and evenly strided indices, sorted and deduplicated.
pub fn stride_sample(n: u32, one: u32) -> Vec<u32> {
    let steps = u64::from(SAMPLE_SIZE - 2);
    let mut out: Vec<u32> = (0..steps).map(|k| (k * u64::from(n) / steps) as u32).collect();
    out.push(one);
    out.sort_unstable();
    out.dedup();
    out
}

impl Lab {
    pub fn new(ring: &Ring) -> Result<Lab> {
        let n = ring.enumerable_size()?;
        let sampled = n > FULL_LIMIT;
        let domain = if sampled { stride_sample(n, ring.idx(&ring.one())) } else { (0..n).collect() };
        Ok(Lab {
            ring: ring.clone(),
            n,
            domain,
            sampled,
            inner: Cache::default(),
            outer: Cache::default(),
            right_ideal: Cache::default(),
            left_ideal: Cache::default(),
            semiprime: OnceCell::new(),
            units: OnceCell::new(),
            example: OnceCell::new(),
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn size(&self) -> u32 {
        self.n
    }

    pub fn sampled(&self) -> bool {
        self.sampled
    }

    /// Elements the checks quantify over.
    pub fn domain(&self) -> &[u32] {
        &self.domain
    }

    pub fn elem(&self, i: u32) -> Elem {
        self.ring.at(i)
    }

    pub fn mul(&self, x: u32, y: u32) -> u32 {
        self.ring.mul_idx(x, y)
    }

    pub fn mul3(&self, x: u32, y: u32, z: u32) -> u32 {
        self.ring.mul3_idx(x, y, z)
    }

    pub fn add(&self, x: u32, y: u32) -> u32 {
        self.ring.add_idx(x, y)
    }

    pub fn sub(&self, x: u32, y: u32) -> u32 {
        self.ring.sub_idx(x, y)
    }

    pub fn one(&self) -> u32 {
        self.ring.one_idx()
    }

    pub fn scan(&self, pred: impl Fn(u32) -> bool) -> FixedBitSet {
        let mut bits = FixedBitSet::with_capacity(self.n as usize);
        for x in 0..self.n {
            if pred(x) {
                bits.insert(x as usize);
            }
        }
        bits
    }

    pub fn image(&self, f: impl Fn(u32) -> u32) -> FixedBitSet {
        let mut bits = FixedBitSet::with_capacity(self.n as usize);
        for t in 0..self.n {
            bits.insert(f(t) as usize);
        }
        bits
    }

    /// `{f(s) : s ∈ S}`.
    pub fn image_of(&self, set: &FixedBitSet, f: impl Fn(u32) -> u32) -> FixedBitSet {
        let mut bits = FixedBitSet::with_capacity(self.n as usize);
        for s in set.ones() {
            bits.insert(f(s as u32) as usize);
        }
        bits
    }

    pub fn empty(&self) -> FixedBitSet {
        FixedBitSet::with_capacity(self.n as usize)
    }

    fn cached(&self, cache: &Cache, a: u32, build: impl FnOnce() -> FixedBitSet) -> Rc<FixedBitSet> {
        if let Some(s) = cache.borrow().get(&a) {
            return Rc::clone(s);
        }
        let s = Rc::new(build());
        cache.borrow_mut().insert(a, Rc::clone(&s));
        s
    }

    /// `I(a)`.
    pub fn inner(&self, a: u32) -> Rc<FixedBitSet> {
        self.cached(&self.inner, a, || self.scan(|x| self.mul3(a, x, a) == a))
    }

    /// `{x : x·a·x = x}`.
    pub fn outer(&self, a: u32) -> Rc<FixedBitSet> {
        self.cached(&self.outer, a, || self.scan(|x| self.mul3(x, a, x) == x))
    }

    /// `Ref(a) = I(a) ∩ outer(a)`.
    pub fn reflexive(&self, a: u32) -> FixedBitSet {
        let mut s = (*self.inner(a)).clone();
        s.intersect_with(&self.outer(a));
        s
    }

    pub fn is_regular(&self, a: u32) -> bool {
        !self.inner(a).is_clear()
    }

    /// First inner inverse in canonical order.
    pub fn witness(&self, a: u32) -> Option<u32> {
        self.inner(a).minimum().map(|i| i as u32)
    }

    /// Regular members of the domain.
    pub fn regular(&self) -> Vec<u32> {
        self.domain.iter().copied().filter(|&a| self.is_regular(a)).collect()
    }

    /// `a·R`.
    pub fn right_ideal(&self, a: u32) -> Rc<FixedBitSet> {
        self.cached(&self.right_ideal, a, || self.image(|r| self.mul(a, r)))
    }

    /// `R·a`.
    pub fn left_ideal(&self, a: u32) -> Rc<FixedBitSet> {
        self.cached(&self.left_ideal, a, || self.image(|r| self.mul(r, a)))
    }

    pub fn semiprime(&self) -> &SemiprimeVerdict {
        self.semiprime.get_or_init(|| is_semiprime(&self.ring).expect("ring is enumerable"))
    }

    pub fn is_unit(&self, u: u32) -> bool {
        let one = self.one();
        (0..self.n).any(|v| self.mul(u, v) == one && self.mul(v, u) == one)
    }

    /// The unit group, in canonical order.
    pub fn units(&self) -> &[u32] {
        self.units.get_or_init(|| (0..self.n).filter(|&u| self.is_unit(u)).collect())
    }

    /// Generators of the example algebra, when this ring is it.
    pub fn example(&self) -> Option<&ExampleGenerators> {
        self.example.get_or_init(|| example_generators(&self.ring).ok()).as_ref()
    }

    pub fn to_set(&self, bits: &FixedBitSet) -> ElemSet {
        ElemSet::from_bits(&self.ring, bits)
    }

    pub fn generators(&self) -> Vec<u32> {
        self.ring.generator_indices()
    }
}

/// `S ∩ T = {0}` for sets that both contain 0.
pub fn meet_trivially(s: &FixedBitSet, t: &FixedBitSet) -> bool {
    s.intersection_count(t) == 1
}

/// First member of the symmetric difference.
pub fn first_difference(s: &FixedBitSet, t: &FixedBitSet) -> Option<u32> {
    s.symmetric_difference(t).next().map(|i| i as u32)
}
