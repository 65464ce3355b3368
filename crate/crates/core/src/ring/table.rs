use crate::error::{Error, Result};

use super::{is_prime, mulmod};

/// Associativity is checked on every basis triple up to this dimension and
/// on a strided sample of triples above it.
const FULL_ASSOC_DIM: usize = 16;
const ASSOC_SAMPLE: usize = 4096;

/// Input description of a structure-constant algebra over `GF(p)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableSpec {
    pub p: u64,
    pub basis: Vec<String>,
    pub unity: Vec<u64>,
    /// Sparse tensor entries `(i, j, k, c)`: `b_i · b_j` has `c` in
    /// coordinate `k`. Omitted entries are zero; repeated entries add.
    pub constants: Vec<(usize, usize, usize, u64)>,
}

/// A validated structure-constant algebra.
#[derive(Debug, Clone)]
pub struct TableAlgebra {
    p: u64,
    labels: Vec<String>,
    unity: Vec<u64>,
    /// `products[i * dim + j]` lists the nonzero `(k, c)` of `b_i · b_j`.
    products: Vec<Vec<(usize, u64)>>,
}

fn valid_label(label: &str) -> bool {
    if label == "1" {
        return true;
    }
    let mut chars = label.chars();
    match chars.next() {
        Some(c) if c.is_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_alphanumeric() || c == '_' || c == '\'')
}

impl TableAlgebra {
    pub(crate) fn new(spec: &TableSpec) -> Result<TableAlgebra> {
        let p = spec.p;
        if p >= 1 << 32 {
            return Err(Error::TooLarge);
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let dim = spec.basis.len();
        if dim == 0 {
            return Err(Error::BadTensorShape("empty basis".into()));
        }
        for (i, label) in spec.basis.iter().enumerate() {
            if !valid_label(label) {
                return Err(Error::InvalidLabel(label.clone()));
            }
            if spec.basis[..i].contains(label) {
                return Err(Error::BadTensorShape(format!("duplicate basis label {label:?}")));
            }
        }
        if spec.unity.len() != dim {
            return Err(Error::BadTensorShape(format!(
                "unity has {} coordinates, basis has {dim}",
                spec.unity.len()
            )));
        }
        if let Some(&c) = spec.unity.iter().find(|&&c| c >= p) {
            return Err(Error::BadTensorShape(format!("unity coordinate {c} not reduced mod {p}")));
        }

        let mut dense = vec![0u64; dim * dim * dim];
        for &(i, j, k, c) in &spec.constants {
            if i >= dim || j >= dim || k >= dim {
                return Err(Error::BadTensorShape(format!("entry ({i}, {j}, {k}) outside dimension {dim}")));
            }
            if c >= p {
                return Err(Error::BadTensorShape(format!("constant {c} not reduced mod {p}")));
            }
            let slot = &mut dense[(i * dim + j) * dim + k];
            *slot = (*slot + c) % p;
        }
        let products = (0..dim * dim)
            .map(|ij| {
                (0..dim)
                    .filter_map(|k| {
                        let c = dense[ij * dim + k];
                        (c != 0).then_some((k, c))
                    })
                    .collect()
            })
            .collect();

        let algebra = TableAlgebra { p, labels: spec.basis.clone(), unity: spec.unity.clone(), products };
        algebra.check_unity()?;
        algebra.check_associative()?;
        if let Some(pos) = algebra.labels.iter().position(|l| l == "1") {
            if algebra.unity != algebra.basis_vector(pos) {
                return Err(Error::InvalidLabel("1 (reserved for the unity)".into()));
            }
        }
        Ok(algebra)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unity(&self) -> &[u64] {
        &self.unity
    }

    /// Nonzero `(k, c)` with `b_i · b_j = Σ c b_k`.
    pub fn basis_product(&self, i: usize, j: usize) -> &[(usize, u64)] {
        &self.products[i * self.dim() + j]
    }

    /// The sparse `(i, j, k, c)` entries, in order.
    pub fn constants(&self) -> Vec<(usize, usize, usize, u64)> {
        let dim = self.dim();
        let mut out = Vec::new();
        for i in 0..dim {
            for j in 0..dim {
                for &(k, c) in self.basis_product(i, j) {
                    out.push((i, j, k, c));
                }
            }
        }
        out
    }

    fn basis_vector(&self, i: usize) -> Vec<u64> {
        let mut v = vec![0; self.dim()];
        v[i] = 1;
        v
    }

    pub(crate) fn mul_coords(&self, x: &[u64], y: &[u64], out: &mut [u64]) {
        let (p, dim) = (self.p, self.dim());
        out.fill(0);
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                if yj == 0 {
                    continue;
                }
                let s = mulmod(xi, yj, p);
                for &(k, c) in &self.products[i * dim + j] {
                    out[k] = (out[k] + mulmod(s, c, p)) % p;
                }
            }
        }
    }

    fn mul_vec(&self, x: &[u64], y: &[u64]) -> Vec<u64> {
        let mut out = vec![0; self.dim()];
        self.mul_coords(x, y, &mut out);
        out
    }

    fn check_unity(&self) -> Result<()> {
        for i in 0..self.dim() {
            let b = self.basis_vector(i);
            if self.mul_vec(&self.unity, &b) != b || self.mul_vec(&b, &self.unity) != b {
                return Err(Error::NoUnity(i));
            }
        }
        Ok(())
    }

    fn associative_on(&self, i: usize, j: usize, l: usize) -> bool {
        let (bi, bj, bl) = (self.basis_vector(i), self.basis_vector(j), self.basis_vector(l));
        self.mul_vec(&self.mul_vec(&bi, &bj), &bl) == self.mul_vec(&bi, &self.mul_vec(&bj, &bl))
    }

    fn check_associative(&self) -> Result<()> {
        let dim = self.dim();
        let total = dim * dim * dim;
        let stride = if dim <= FULL_ASSOC_DIM { 1 } else { (total / ASSOC_SAMPLE).max(1) | 1 };
        let mut t = 0;
        while t < total {
            let (i, j, l) = (t / (dim * dim), (t / dim) % dim, t % dim);
            if !self.associative_on(i, j, l) {
                return Err(Error::NotAssociative { i, j, l });
            }
            t += stride;
        }
        Ok(())
    }
}
