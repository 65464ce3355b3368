//! Finite rings with unity over three backends.
//!
//! * `zmod`: integers modulo `n`.
//! * `matrix`: `k × k` matrices over the prime field `GF(q)`.
//! * `table`: a finite-dimensional algebra over `GF(p)` given by structure
//!   constants `b_i · b_j = Σ_k c[i][j][k] b_k`.
//!
//! Every element has a canonical index: the mixed-radix value of its
//! coordinate vector (residue, row-major matrix entries, or basis
//! coefficients), most significant coordinate first. Enumeration, sets and
//! reports all use this order.

mod regularity;
mod spec;
mod table;

use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::matrix::Matrix;

pub use regularity::{is_regular, is_semiprime, regular_elements, SemiprimeVerdict};
pub use spec::RingSpec;
pub use table::{TableAlgebra, TableSpec};

/// Default cap on the number of elements an exhaustive scan may visit.
pub const DEFAULT_BUDGET: u64 = 1 << 20;

/// Rings up to this size get a precomputed multiplication table.
const CAYLEY_LIMIT: u64 = 2048;

/// Index arithmetic works on `u32`, so no scan may exceed this many elements.
const INDEX_LIMIT: u64 = 1 << 32;

/// Coordinate buffers for index arithmetic. An enumerable ring has at most
/// 2^32 elements and every base is at least 2, so 32 coordinates suffice.
const MAX_WIDTH: usize = 32;

static NEXT_RING_ID: AtomicU64 = AtomicU64::new(1);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RingKind {
    Modular,
    Matrix,
    Table,
}

impl RingKind {
    pub fn as_str(self) -> &'static str {
        match self {
            RingKind::Modular => "zmod",
            RingKind::Matrix => "matrix",
            RingKind::Table => "table",
        }
    }
}

impl fmt::Display for RingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone)]
pub(crate) enum Backend {
    Modular { n: u64 },
    Matrix { k: usize, q: u64 },
    Table(TableAlgebra),
}

struct RingData {
    id: u64,
    backend: Backend,
    base: u64,
    width: usize,
    size: u64,
    unity: Box<[u64]>,
    cayley: OnceLock<Option<Box<[u32]>>>,
}

/// An immutable finite ring. Cloning is cheap and clones share identity, so
/// elements built from one clone are valid in every other.
#[derive(Clone)]
pub struct Ring {
    data: Arc<RingData>,
    budget: u64,
}

/// A ring element: the coordinate vector of its canonical representation,
/// tagged with the identity of the ring it belongs to.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Elem {
    ring: u64,
    coords: Box<[u64]>,
}

impl Elem {
    pub fn coords(&self) -> &[u64] {
        &self.coords
    }

    pub fn ring_id(&self) -> u64 {
        self.ring
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Ring {
    fn from_backend(backend: Backend) -> Result<Ring> {
        let (base, width, unity): (u64, usize, Box<[u64]>) = match &backend {
            Backend::Modular { n } => (*n, 1, Box::new([1 % *n])),
            Backend::Matrix { k, q } => {
                let mut unity = vec![0; k * k];
                for i in 0..*k {
                    unity[i * k + i] = 1;
                }
                (*q, k * k, unity.into())
            }
            Backend::Table(t) => (t.p(), t.dim(), t.unity().into()),
        };
        let size = u32::try_from(width)
            .ok()
            .and_then(|w| base.checked_pow(w))
            .ok_or(Error::TooLarge)?;
        Ok(Ring {
            data: Arc::new(RingData {
                id: NEXT_RING_ID.fetch_add(1, Ordering::Relaxed),
                backend,
                base,
                width,
                size,
                unity,
                cayley: OnceLock::new(),
            }),
            budget: DEFAULT_BUDGET,
        })
    }

    /// The integers modulo `n`.
    pub fn zmod(n: u64) -> Result<Ring> {
        if n < 2 {
            return Err(Error::InvalidModulus(n));
        }
        Ring::from_backend(Backend::Modular { n })
    }

    /// `k × k` matrices over `GF(q)`.
    pub fn matrix(k: usize, q: u64) -> Result<Ring> {
        if k == 0 {
            return Err(Error::InvalidSpec("matrix dimension must be at least 1".into()));
        }
        if q >= 1 << 32 {
            return Err(Error::TooLarge);
        }
        if !is_prime(q) {
            return Err(Error::NotPrime(q));
        }
        Ring::from_backend(Backend::Matrix { k, q })
    }

    /// A structure-constant algebra; validates unity and associativity.
    pub fn table(spec: &TableSpec) -> Result<Ring> {
        Ring::from_backend(Backend::Table(TableAlgebra::new(spec)?))
    }

    /// Same ring, different cap for exhaustive scans.
    pub fn with_budget(mut self, budget: u64) -> Ring {
        self.budget = budget;
        self
    }

    pub fn budget(&self) -> u64 {
        self.budget
    }

    pub fn id(&self) -> u64 {
        self.data.id
    }

    pub fn kind(&self) -> RingKind {
        match self.data.backend {
            Backend::Modular { .. } => RingKind::Modular,
            Backend::Matrix { .. } => RingKind::Matrix,
            Backend::Table(_) => RingKind::Table,
        }
    }

    pub(crate) fn backend(&self) -> &Backend {
        &self.data.backend
    }

    pub fn table_algebra(&self) -> Option<&TableAlgebra> {
        match &self.data.backend {
            Backend::Table(t) => Some(t),
            _ => None,
        }
    }

    /// Matrix dimension and field size for the matrix backend.
    pub fn matrix_params(&self) -> Option<(usize, u64)> {
        match self.data.backend {
            Backend::Matrix { k, q } => Some((k, q)),
            _ => None,
        }
    }

    pub fn size(&self) -> u64 {
        self.data.size
    }

    pub fn characteristic(&self) -> u64 {
        self.data.base
    }

    /// Number of coordinates per element.
    pub fn width(&self) -> usize {
        self.data.width
    }

    pub fn describe(&self) -> String {
        match &self.data.backend {
            Backend::Modular { n } => format!("Z/{n}"),
            Backend::Matrix { k, q } => format!("M{k}(GF({q}))"),
            Backend::Table(t) => format!("table algebra over GF({}) of dimension {}", t.p(), t.dim()),
        }
    }

    /// Size as a scan bound, or `BudgetExceeded`.
    pub fn enumerable_size(&self) -> Result<u32> {
        let size = self.data.size;
        let limit = self.budget.min(INDEX_LIMIT);
        if size > limit {
            return Err(Error::BudgetExceeded { size, budget: self.budget });
        }
        // size ≤ 2^32; the only value that does not fit u32 is 2^32 itself.
        u32::try_from(size).map_err(|_| Error::BudgetExceeded { size, budget: self.budget })
    }

    /// Every element exactly once, in canonical order.
    pub fn elements(&self) -> Result<impl Iterator<Item = Elem> + '_> {
        let n = self.enumerable_size()?;
        Ok((0..n).map(move |i| self.elem_at(u64::from(i))))
    }

    // ---- construction and coordinates ----

    pub(crate) fn check(&self, x: &Elem) -> Result<()> {
        if x.ring == self.data.id {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub(crate) fn wrap(&self, coords: Box<[u64]>) -> Elem {
        Elem { ring: self.data.id, coords }
    }

    /// Builds an element from coordinates, reducing each modulo the
    /// characteristic.
    pub fn elem(&self, coords: &[u64]) -> Result<Elem> {
        if coords.len() != self.data.width {
            return Err(Error::InvalidSpec(format!(
                "expected {} coordinates, got {}",
                self.data.width,
                coords.len()
            )));
        }
        let base = self.data.base;
        Ok(self.wrap(coords.iter().map(|&c| c % base).collect()))
    }

    pub fn zero(&self) -> Elem {
        self.wrap(vec![0; self.data.width].into())
    }

    pub fn one(&self) -> Elem {
        self.wrap(self.data.unity.clone())
    }

    /// Integer multiple of unity.
    pub fn scalar(&self, c: u64) -> Elem {
        let base = self.data.base;
        let c = c % base;
        self.wrap(self.data.unity.iter().map(|&u| mulmod(u, c, base)).collect())
    }

    /// The element with canonical index `idx`.
    ///
    /// Panics if `idx` is not below the ring size.
    pub fn elem_at(&self, idx: u64) -> Elem {
        assert!(idx < self.data.size, "index {idx} out of range");
        let mut coords = vec![0; self.data.width];
        decode_into(idx, self.data.base, &mut coords);
        self.wrap(coords.into())
    }

    /// Mixed-radix position of `x` in the canonical order.
    pub fn canonical_index(&self, x: &Elem) -> u64 {
        encode(&x.coords, self.data.base)
    }

    /// Additive generators: `1` for `zmod`, matrix units, or basis vectors.
    pub fn additive_generators(&self) -> Vec<Elem> {
        match self.data.backend {
            Backend::Modular { .. } => vec![self.scalar(1)],
            _ => (0..self.data.width)
                .map(|i| {
                    let mut c = vec![0; self.data.width];
                    c[i] = 1;
                    self.wrap(c.into())
                })
                .collect(),
        }
    }

    pub fn to_matrix(&self, x: &Elem) -> Option<Matrix> {
        match self.data.backend {
            Backend::Matrix { k, q } => Some(Matrix::from_entries(k, q, x.coords.to_vec())),
            _ => None,
        }
    }

    pub fn from_matrix(&self, m: &Matrix) -> Result<Elem> {
        match self.data.backend {
            Backend::Matrix { k, q } if m.k() == k && m.q() == q => Ok(self.wrap(m.entries().into())),
            _ => Err(Error::RingMismatch),
        }
    }

    // ---- element arithmetic ----

    pub fn add(&self, x: &Elem, y: &Elem) -> Result<Elem> {
        self.check(x)?;
        self.check(y)?;
        let base = self.data.base;
        Ok(self.wrap(x.coords.iter().zip(y.coords.iter()).map(|(&a, &b)| addmod(a, b, base)).collect()))
    }

    pub fn neg(&self, x: &Elem) -> Result<Elem> {
        self.check(x)?;
        let base = self.data.base;
        Ok(self.wrap(x.coords.iter().map(|&a| (base - a) % base).collect()))
    }

    pub fn sub(&self, x: &Elem, y: &Elem) -> Result<Elem> {
        let ny = self.neg(y)?;
        self.add(x, &ny)
    }

    pub fn mul(&self, x: &Elem, y: &Elem) -> Result<Elem> {
        self.check(x)?;
        self.check(y)?;
        let mut out = vec![0; self.data.width];
        self.mul_coords(&x.coords, &y.coords, &mut out);
        Ok(self.wrap(out.into()))
    }

    /// Left-to-right product of a sequence of factors.
    pub fn product(&self, factors: &[&Elem]) -> Result<Elem> {
        let mut acc = self.one();
        for f in factors {
            acc = self.mul(&acc, f)?;
        }
        Ok(acc)
    }

    fn mul_coords(&self, x: &[u64], y: &[u64], out: &mut [u64]) {
        match &self.data.backend {
            Backend::Modular { n } => out[0] = mulmod(x[0], y[0], *n),
            Backend::Matrix { k, q } => {
                let (k, q) = (*k, *q);
                for r in 0..k {
                    for c in 0..k {
                        let mut acc = 0u64;
                        for m in 0..k {
                            acc = (acc + x[r * k + m] * y[m * k + c]) % q;
                        }
                        out[r * k + c] = acc;
                    }
                }
            }
            Backend::Table(t) => t.mul_coords(x, y, out),
        }
    }

    // ---- index arithmetic for scans ----
    //
    // Valid only on rings whose size passed `enumerable_size`.

    pub(crate) fn one_idx(&self) -> u32 {
        encode(&self.data.unity, self.data.base) as u32
    }

    pub(crate) fn idx(&self, x: &Elem) -> u32 {
        self.canonical_index(x) as u32
    }

    pub(crate) fn at(&self, i: u32) -> Elem {
        self.elem_at(u64::from(i))
    }

    pub(crate) fn mul_idx(&self, i: u32, j: u32) -> u32 {
        let d = &*self.data;
        if let Backend::Modular { n } = d.backend {
            return mulmod(u64::from(i), u64::from(j), n) as u32;
        }
        if let Some(table) = self.cayley() {
            return table[i as usize * d.size as usize + j as usize];
        }
        self.mul_idx_direct(i, j)
    }

    fn mul_idx_direct(&self, i: u32, j: u32) -> u32 {
        let d = &*self.data;
        let w = d.width;
        let (mut x, mut y, mut out) = ([0u64; MAX_WIDTH], [0u64; MAX_WIDTH], [0u64; MAX_WIDTH]);
        decode_into(u64::from(i), d.base, &mut x[..w]);
        decode_into(u64::from(j), d.base, &mut y[..w]);
        self.mul_coords(&x[..w], &y[..w], &mut out[..w]);
        encode(&out[..w], d.base) as u32
    }

    fn cayley(&self) -> Option<&[u32]> {
        let d = &*self.data;
        d.cayley
            .get_or_init(|| {
                if d.size > CAYLEY_LIMIT {
                    return None;
                }
                let n = d.size as u32;
                let mut table = Vec::with_capacity((d.size * d.size) as usize);
                for i in 0..n {
                    for j in 0..n {
                        table.push(self.mul_idx_direct(i, j));
                    }
                }
                Some(table.into_boxed_slice())
            })
            .as_deref()
    }

    pub(crate) fn add_idx(&self, i: u32, j: u32) -> u32 {
        let d = &*self.data;
        match d.base {
            2 => i ^ j,
            _ if d.width == 1 => addmod(u64::from(i), u64::from(j), d.base) as u32,
            base => {
                let w = d.width;
                let (mut x, mut y) = ([0u64; MAX_WIDTH], [0u64; MAX_WIDTH]);
                decode_into(u64::from(i), base, &mut x[..w]);
                decode_into(u64::from(j), base, &mut y[..w]);
                for (a, b) in x[..w].iter_mut().zip(&y[..w]) {
                    *a = addmod(*a, *b, base);
                }
                encode(&x[..w], base) as u32
            }
        }
    }

    pub(crate) fn neg_idx(&self, i: u32) -> u32 {
        let d = &*self.data;
        match d.base {
            2 => i,
            base if d.width == 1 => ((base - u64::from(i)) % base) as u32,
            base => {
                let w = d.width;
                let mut x = [0u64; MAX_WIDTH];
                decode_into(u64::from(i), base, &mut x[..w]);
                for a in &mut x[..w] {
                    *a = (base - *a) % base;
                }
                encode(&x[..w], base) as u32
            }
        }
    }

    pub(crate) fn sub_idx(&self, i: u32, j: u32) -> u32 {
        self.add_idx(i, self.neg_idx(j))
    }

    /// `x · y · z` on indices.
    pub(crate) fn mul3_idx(&self, x: u32, y: u32, z: u32) -> u32 {
        self.mul_idx(self.mul_idx(x, y), z)
    }

    pub(crate) fn generator_indices(&self) -> Vec<u32> {
        self.additive_generators().iter().map(|g| self.idx(g)).collect()
    }
}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Ring")
            .field("id", &self.data.id)
            .field("ring", &self.describe())
            .field("budget", &self.budget)
            .finish()
    }
}

impl PartialEq for Ring {
    fn eq(&self, other: &Ring) -> bool {
        self.data.id == other.data.id
    }
}

impl Eq for Ring {}

fn addmod(a: u64, b: u64, m: u64) -> u64 {
    ((u128::from(a) + u128::from(b)) % u128::from(m)) as u64
}

pub(crate) fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((u128::from(a) * u128::from(b)) % u128::from(m)) as u64
}

fn encode(coords: &[u64], base: u64) -> u64 {
    coords.iter().fold(0, |acc, &c| acc * base + c)
}

fn decode_into(mut idx: u64, base: u64, out: &mut [u64]) {
    for c in out.iter_mut().rev() {
        *c = idx % base;
        idx /= base;
    }
}
