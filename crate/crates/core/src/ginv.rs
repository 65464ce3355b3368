//! Inner, outer and reflexive inverse sets, annihilators and principal
//! ideals, computed by exhaustive scans over an enumerable ring.
//!
//! Notation: for `a` with inner inverse `a0`, `e = a·a0`, `f = a0·a`,
//! `e' = 1 − e`, `f' = 1 − f`.
//!
//! * `I(a) = {x : axa = a}` and, for any `a0 ∈ I(a)`,
//!   `I(a) = {a0 + t − a0·a·t·a·a0 : t ∈ R} = a0 + Iann(a)`.
//! * `Iann(a) = {x : axa = 0} = l(a) + r(a) = R·e' + f'·R`.
//! * `Ref(a) = I(a)·a·I(a)`, and for reflexive `a0`,
//!   `Ref(a) = a0 + f·R·e' + f'·R·e + f'·R·a·R·e'`.
//!
//! Operations that take a witness `a0` never search for one; get it from
//! [`crate::ring::is_regular`] or supply it.

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::ring::{is_regular, Elem, Ring};
use crate::set::ElemSet;

fn scan(ring: &Ring, pred: impl Fn(u32) -> bool) -> Result<ElemSet> {
    let n = ring.enumerable_size()?;
    Ok(ElemSet::from_unsorted(ring, (0..n).filter(|&x| pred(x)).collect()))
}

/// `{f(t) : t ∈ R}`.
fn image(ring: &Ring, f: impl Fn(u32) -> u32) -> Result<ElemSet> {
    let n = ring.enumerable_size()?;
    let mut bits = FixedBitSet::with_capacity(n as usize);
    for t in 0..n {
        bits.insert(f(t) as usize);
    }
    Ok(ElemSet::from_bits(ring, &bits))
}

fn check_inner(ring: &Ring, a: &Elem, a0: &Elem) -> Result<(u32, u32)> {
    ring.check(a)?;
    ring.check(a0)?;
    ring.enumerable_size()?;
    let (ai, a0i) = (ring.idx(a), ring.idx(a0));
    if ring.mul3_idx(ai, a0i, ai) != ai {
        return Err(Error::NotInnerInverse);
    }
    Ok((ai, a0i))
}

pub fn inner_inverses(ring: &Ring, a: &Elem) -> Result<ElemSet> {
    ring.check(a)?;
    let ai = ring.idx(a);
    scan(ring, |x| ring.mul3_idx(ai, x, ai) == ai)
}

/// `{a0 + t − a0·a·t·a·a0 : t ∈ R}`.
pub fn inner_inverses_param(ring: &Ring, a: &Elem, a0: &Elem) -> Result<ElemSet> {
    let (ai, a0i) = check_inner(ring, a, a0)?;
    let (f, e) = (ring.mul_idx(a0i, ai), ring.mul_idx(ai, a0i));
    image(ring, |t| ring.add_idx(a0i, ring.sub_idx(t, ring.mul3_idx(f, t, e))))
}

pub fn outer_inverses(ring: &Ring, a: &Elem) -> Result<ElemSet> {
    ring.check(a)?;
    let ai = ring.idx(a);
    scan(ring, |x| ring.mul3_idx(x, ai, x) == x)
}

pub fn reflexive_inverses(ring: &Ring, a: &Elem) -> Result<ElemSet> {
    ring.check(a)?;
    let ai = ring.idx(a);
    scan(ring, |x| ring.mul3_idx(ai, x, ai) == ai && ring.mul3_idx(x, ai, x) == x)
}

/// `φ_a(x) = x·a·x`.
pub fn phi(ring: &Ring, a: &Elem, x: &Elem) -> Result<Elem> {
    ring.product(&[x, a, x])
}

/// `{x·a·y : x, y ∈ I(a)}`.
pub fn reflexive_via_product(ring: &Ring, a: &Elem) -> Result<ElemSet> {
    let inner = inner_inverses(ring, a)?;
    if inner.is_empty() {
        return Err(Error::NotRegular);
    }
    let ai = ring.idx(a);
    let left = ElemSet::from_unsorted(ring, inner.indices().iter().map(|&x| ring.mul_idx(x, ai)).collect());
    product_set(ring, &left, &inner)
}

/// `l(a) = {x : x·a = 0}`.
pub fn left_annihilator(ring: &Ring, a: &Elem) -> Result<ElemSet> {
    ring.check(a)?;
    let ai = ring.idx(a);
    scan(ring, |x| ring.mul_idx(x, ai) == 0)
}

/// `r(a) = {x : a·x = 0}`.
pub fn right_annihilator(ring: &Ring, a: &Elem) -> Result<ElemSet> {
    ring.check(a)?;
    let ai = ring.idx(a);
    scan(ring, |x| ring.mul_idx(ai, x) == 0)
}

/// `Iann(a) = {x : a·x·a = 0}`.
pub fn inner_annihilator(ring: &Ring, a: &Elem) -> Result<ElemSet> {
    ring.check(a)?;
    let ai = ring.idx(a);
    scan(ring, |x| ring.mul3_idx(ai, x, ai) == 0)
}

/// `a·R`.
pub fn principal_right_ideal(ring: &Ring, a: &Elem) -> Result<ElemSet> {
    ring.check(a)?;
    let ai = ring.idx(a);
    image(ring, |r| ring.mul_idx(ai, r))
}

/// `R·a`.
pub fn principal_left_ideal(ring: &Ring, a: &Elem) -> Result<ElemSet> {
    ring.check(a)?;
    let ai = ring.idx(a);
    image(ring, |r| ring.mul_idx(r, ai))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdempotentFrame {
    /// `a·a0`
    pub e: Elem,
    /// `a0·a`
    pub f: Elem,
    /// `1 − e`
    pub e_c: Elem,
    /// `1 − f`
    pub f_c: Elem,
}

impl IdempotentFrame {
    /// `e² = e`, `f² = f`, `e·a = a`, `a·f = a`, `e + e' = 1`, `f + f' = 1`.
    pub fn holds_for(&self, ring: &Ring, a: &Elem) -> Result<bool> {
        let one = ring.one();
        Ok(ring.mul(&self.e, &self.e)? == self.e
            && ring.mul(&self.f, &self.f)? == self.f
            && ring.mul(&self.e, a)? == *a
            && ring.mul(a, &self.f)? == *a
            && ring.add(&self.e, &self.e_c)? == one
            && ring.add(&self.f, &self.f_c)? == one)
    }
}

pub fn idempotent_frame(ring: &Ring, a: &Elem, a0: &Elem) -> Result<IdempotentFrame> {
    check_inner(ring, a, a0)?;
    let e = ring.mul(a, a0)?;
    let f = ring.mul(a0, a)?;
    let one = ring.one();
    Ok(IdempotentFrame { e_c: ring.sub(&one, &e)?, f_c: ring.sub(&one, &f)?, e, f })
}

/// The three descriptions of `Iann(a)` side by side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IannDecomposition {
    /// `R·e'`
    pub re_c: ElemSet,
    /// `f'·R`
    pub f_cr: ElemSet,
    /// `l(a) + r(a)`
    pub l_plus_r: ElemSet,
    /// `R·e' + f'·R`
    pub re_c_plus_f_cr: ElemSet,
    /// `{x : axa = 0}` by direct scan
    pub iann: ElemSet,
}

impl IannDecomposition {
    pub fn holds(&self) -> bool {
        self.l_plus_r == self.iann && self.re_c_plus_f_cr == self.iann
    }
}

pub fn iann_decomposition(ring: &Ring, a: &Elem, a0: &Elem) -> Result<IannDecomposition> {
    let frame = idempotent_frame(ring, a, a0)?;
    let (e_c, f_c) = (ring.idx(&frame.e_c), ring.idx(&frame.f_c));
    let re_c = image(ring, |r| ring.mul_idx(r, e_c))?;
    let f_cr = image(ring, |r| ring.mul_idx(f_c, r))?;
    let l_plus_r = sumset(&left_annihilator(ring, a)?, &right_annihilator(ring, a)?)?;
    let re_c_plus_f_cr = sumset(&re_c, &f_cr)?;
    Ok(IannDecomposition { re_c, f_cr, l_plus_r, re_c_plus_f_cr, iann: inner_annihilator(ring, a)? })
}

/// `a0 + Iann(a)`.
pub fn inner_translate(ring: &Ring, a: &Elem, a0: &Elem) -> Result<ElemSet> {
    let (_, a0i) = check_inner(ring, a, a0)?;
    let iann = inner_annihilator(ring, a)?;
    Ok(translate(ring, a0i, &iann))
}

fn check_reflexive(ring: &Ring, a: &Elem, a0: &Elem) -> Result<(u32, u32)> {
    ring.check(a)?;
    ring.check(a0)?;
    ring.enumerable_size()?;
    let (ai, a0i) = (ring.idx(a), ring.idx(a0));
    if ring.mul3_idx(ai, a0i, ai) != ai || ring.mul3_idx(a0i, ai, a0i) != a0i {
        return Err(Error::NotReflexiveInverse);
    }
    Ok((ai, a0i))
}

/// `{a0 + f·r·e' + f'·s·e + f'·s·a·r·e' : r, s ∈ R}` for a reflexive inverse
/// `a0`, with one `r` and one `s` shared by the three terms.
///
/// This is `(a0 + f'·s)·a·(a0 + r·e')`, so it is computed as the product set
/// `{(a0 + f'·s)·a}·{a0 + r·e'}`.
pub fn ref_decomposition(ring: &Ring, a: &Elem, a0: &Elem) -> Result<ElemSet> {
    let (ai, a0i) = check_reflexive(ring, a, a0)?;
    let frame = idempotent_frame(ring, a, a0)?;
    let (e_c, f_c) = (ring.idx(&frame.e_c), ring.idx(&frame.f_c));
    let left = image(ring, |s| ring.mul_idx(ring.add_idx(a0i, ring.mul_idx(f_c, s)), ai))?;
    let right = image(ring, |r| ring.add_idx(a0i, ring.mul_idx(r, e_c)))?;
    product_set(ring, &left, &right)
}

/// The sumset `a0 + f·R·e' + f'·R·e + f'·R·a·R·e'` with independent summands.
/// It contains [`ref_decomposition`] and can be strictly larger: for
/// `a = a0 = E11` in `M2(GF(2))` it has 8 members against 4.
pub fn ref_decomposition_sumset(ring: &Ring, a: &Elem, a0: &Elem) -> Result<ElemSet> {
    let (ai, a0i) = check_reflexive(ring, a, a0)?;
    let frame = idempotent_frame(ring, a, a0)?;
    let [e, f, e_c, f_c] = [&frame.e, &frame.f, &frame.e_c, &frame.f_c].map(|x| ring.idx(x));
    let f_r_ec = image(ring, |r| ring.mul3_idx(f, r, e_c))?;
    let fc_r_e = image(ring, |r| ring.mul3_idx(f_c, r, e))?;
    let fc_r_a = image(ring, |r| ring.mul3_idx(f_c, r, ai))?;
    let r_ec = image(ring, |s| ring.mul_idx(s, e_c))?;
    let middle = product_set(ring, &fc_r_a, &r_ec)?;
    let sum = sumset(&sumset(&f_r_ec, &fc_r_e)?, &middle)?;
    Ok(translate(ring, a0i, &sum))
}

/// `Some(b·a0·b)` when `{b·x·b : x ∈ I(a)}` is a single element, else `None`.
///
/// By the parametrization of `I(a)` the set is
/// `b·a0·b + {b·(t − a0·a·t·a·a0)·b : t ∈ R}`, and the map in `t` is additive,
/// so it is a singleton iff that map vanishes on additive generators.
pub fn singleton_conjugate_test(ring: &Ring, b: &Elem, a: &Elem, a0: &Elem) -> Result<Option<Elem>> {
    let (ai, a0i) = check_inner(ring, a, a0)?;
    ring.check(b)?;
    let bi = ring.idx(b);
    let (f, e) = (ring.mul_idx(a0i, ai), ring.mul_idx(ai, a0i));
    let singleton = ring
        .generator_indices()
        .into_iter()
        .all(|g| ring.mul3_idx(bi, ring.sub_idx(g, ring.mul3_idx(f, g, e)), bi) == 0);
    Ok(singleton.then(|| ring.at(ring.mul3_idx(bi, a0i, bi))))
}

/// `S + T = {s + t}`.
pub fn sumset(s: &ElemSet, t: &ElemSet) -> Result<ElemSet> {
    combine(s, t, |ring, x, y| ring.add_idx(x, y))
}

/// `S·T = {s·t}`.
pub fn product_set(ring: &Ring, s: &ElemSet, t: &ElemSet) -> Result<ElemSet> {
    if s.ring() != ring {
        return Err(Error::RingMismatch);
    }
    combine(s, t, |ring, x, y| ring.mul_idx(x, y))
}

fn combine(s: &ElemSet, t: &ElemSet, op: impl Fn(&Ring, u32, u32) -> u32) -> Result<ElemSet> {
    let ring = s.ring();
    if ring != t.ring() {
        return Err(Error::RingMismatch);
    }
    let mut bits = FixedBitSet::with_capacity(ring.size() as usize);
    for &x in s.indices() {
        for &y in t.indices() {
            bits.insert(op(ring, x, y) as usize);
        }
    }
    Ok(ElemSet::from_bits(ring, &bits))
}

/// `{c·s·d : s ∈ S}`.
pub fn scaled_set(c: &Elem, s: &ElemSet, d: &Elem) -> Result<ElemSet> {
    let ring = s.ring();
    ring.check(c)?;
    ring.check(d)?;
    let (ci, di) = (ring.idx(c), ring.idx(d));
    Ok(ElemSet::from_unsorted(ring, s.indices().iter().map(|&x| ring.mul3_idx(ci, x, di)).collect()))
}

fn translate(ring: &Ring, by: u32, set: &ElemSet) -> ElemSet {
    ElemSet::from_unsorted(ring, set.indices().iter().map(|&z| ring.add_idx(by, z)).collect())
}

/// Every set attached to one element.
#[derive(Debug, Clone)]
pub struct InverseReport {
    pub a: Elem,
    /// First inner inverse in canonical order.
    pub witness: Option<Elem>,
    pub inner: ElemSet,
    pub reflexive: ElemSet,
    pub outer: ElemSet,
    pub iann: ElemSet,
    pub left_ann: ElemSet,
    pub right_ann: ElemSet,
    /// `a·R`
    pub right_ideal: ElemSet,
    /// `R·a`
    pub left_ideal: ElemSet,
}

pub fn inverse_report(ring: &Ring, a: &Elem) -> Result<InverseReport> {
    let inner = inner_inverses(ring, a)?;
    Ok(InverseReport {
        a: a.clone(),
        witness: inner.first(),
        reflexive: reflexive_inverses(ring, a)?,
        outer: outer_inverses(ring, a)?,
        iann: inner_annihilator(ring, a)?,
        left_ann: left_annihilator(ring, a)?,
        right_ann: right_annihilator(ring, a)?,
        right_ideal: principal_right_ideal(ring, a)?,
        left_ideal: principal_left_ideal(ring, a)?,
        inner,
    })
}

/// First inner inverse of `a`, or `NotRegular`.
pub fn witness(ring: &Ring, a: &Elem) -> Result<Elem> {
    is_regular(ring, a)?.ok_or(Error::NotRegular)
}
