//! Exact square matrices over a prime field `GF(q)`.
//!
//! Backs the matrix-ring elements and the non-enumerative tests used by the
//! inner-inverse comparison: rank, a rank factorization `A = E·diag(I_r, 0)·F`,
//! the reflexive inner inverse built from it, and rank-additivity tests for
//! trivially intersecting principal ideals.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    k: usize,
    q: u64,
    entries: Vec<u64>,
}

/// `A = E · diag(I_r, 0) · F` with `E`, `F` invertible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankFactorization {
    pub e: Matrix,
    pub rank: usize,
    pub f: Matrix,
    pub e_inv: Matrix,
    pub f_inv: Matrix,
}

fn inv_mod(a: u64, q: u64) -> u64 {
    // q is prime: a^(q-2) = a^-1.
    let (mut base, mut exp, mut acc) = (a % q, q - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % q;
        }
        base = base * base % q;
        exp >>= 1;
    }
    acc
}

/// Rank of a `rows × cols` row-major array over `GF(q)`.
fn echelon_rank(rows: usize, cols: usize, mut m: Vec<u64>, q: u64) -> usize {
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| m[r * cols + c] != 0) else {
            continue;
        };
        for j in 0..cols {
            m.swap(rank * cols + j, p * cols + j);
        }
        let inv = inv_mod(m[rank * cols + c], q);
        for r in rank + 1..rows {
            let factor = m[r * cols + c] * inv % q;
            if factor != 0 {
                for j in c..cols {
                    m[r * cols + j] = (m[r * cols + j] + q - factor * m[rank * cols + j] % q) % q;
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

impl Matrix {
    /// Entries are reduced modulo `q`. Panics if `entries.len() != k * k`.
    pub fn from_entries(k: usize, q: u64, entries: Vec<u64>) -> Matrix {
        assert_eq!(entries.len(), k * k, "a {k}x{k} matrix needs {} entries", k * k);
        Matrix { k, q, entries: entries.into_iter().map(|e| e % q).collect() }
    }

    pub fn zero(k: usize, q: u64) -> Matrix {
        Matrix { k, q, entries: vec![0; k * k] }
    }

    pub fn identity(k: usize, q: u64) -> Matrix {
        Matrix::diag_identity(k, q, k)
    }

    /// `diag(I_r, 0)`.
    pub fn diag_identity(k: usize, q: u64, r: usize) -> Matrix {
        let mut m = Matrix::zero(k, q);
        for i in 0..r.min(k) {
            m.entries[i * k + i] = 1;
        }
        m
    }

    /// Matrix unit with a single 1 at (`i`, `j`), zero-based.
    pub fn unit(k: usize, q: u64, i: usize, j: usize) -> Matrix {
        let mut m = Matrix::zero(k, q);
        m.entries[i * k + j] = 1;
        m
    }

    /// Parses the row-major text form `"1,0;0,0"`.
    pub fn parse(k: usize, q: u64, text: &str) -> Result<Matrix> {
        let rows: Vec<&str> = text.split(';').collect();
        if rows.len() != k {
            return Err(Error::Parse { pos: 0, msg: format!("expected {k} rows, found {}", rows.len()) });
        }
        let mut entries = Vec::with_capacity(k * k);
        let mut offset = 0;
        for row in rows {
            let cells: Vec<&str> = row.split(',').collect();
            if cells.len() != k {
                return Err(Error::Parse { pos: offset, msg: format!("expected {k} entries, found {}", cells.len()) });
            }
            let mut cell_offset = offset;
            for cell in cells {
                let value: u64 = cell.trim().parse().map_err(|_| Error::Parse {
                    pos: cell_offset,
                    msg: format!("bad matrix entry {:?}", cell.trim()),
                })?;
                entries.push(value % q);
                cell_offset += cell.len() + 1;
            }
            offset += row.len() + 1;
        }
        Ok(Matrix { k, q, entries })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.entries[r * self.k + c]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        let (k, q) = (self.k, self.q);
        let mut out = Matrix::zero(k, q);
        for r in 0..k {
            for c in 0..k {
                let mut acc = 0;
                for m in 0..k {
                    acc = (acc + self.get(r, m) * other.get(m, c)) % q;
                }
                out.entries[r * k + c] = acc;
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        let q = self.q;
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| (a + b) % q).collect();
        Matrix { k: self.k, q, entries }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        let q = self.q;
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| (a + q - b) % q).collect();
        Matrix { k: self.k, q, entries }
    }

    pub fn transpose(&self) -> Matrix {
        let k = self.k;
        let mut out = Matrix::zero(k, self.q);
        for r in 0..k {
            for c in 0..k {
                out.entries[c * k + r] = self.get(r, c);
            }
        }
        out
    }

    /// Gauss–Jordan inverse, `None` when singular.
    pub fn inverse(&self) -> Option<Matrix> {
        let (k, q) = (self.k, self.q);
        let mut m = self.entries.clone();
        let mut inv = Matrix::identity(k, q).entries;
        for c in 0..k {
            let p = (c..k).find(|&r| m[r * k + c] != 0)?;
            for j in 0..k {
                m.swap(c * k + j, p * k + j);
                inv.swap(c * k + j, p * k + j);
            }
            let s = inv_mod(m[c * k + c], q);
            for j in 0..k {
                m[c * k + j] = m[c * k + j] * s % q;
                inv[c * k + j] = inv[c * k + j] * s % q;
            }
            for r in 0..k {
                let f = m[r * k + c];
                if r != c && f != 0 {
                    for j in 0..k {
                        m[r * k + j] = (m[r * k + j] + q - f * m[c * k + j] % q) % q;
                        inv[r * k + j] = (inv[r * k + j] + q - f * inv[c * k + j] % q) % q;
                    }
                }
            }
        }
        Some(Matrix { k, q, entries: inv })
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.k {
            if r > 0 {
                f.write_str(";")?;
            }
            for c in 0..self.k {
                if c > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
        }
        Ok(())
    }
}

pub fn rank(a: &Matrix) -> usize {
    echelon_rank(a.k, a.k, a.entries.clone(), a.q)
}

/// Full-pivoting elimination: row operations accumulate in `P`, column
/// operations in `Q`, until `P·A·Q = diag(I_r, 0)`. Then `E = P⁻¹`, `F = Q⁻¹`.
pub fn rank_factorization(a: &Matrix) -> RankFactorization {
    let (k, q) = (a.k, a.q);
    let mut m = a.entries.clone();
    let mut p = Matrix::identity(k, q).entries;
    let mut qm = Matrix::identity(k, q).entries;
    let mut r = 0;
    while r < k {
        let Some((pi, pj)) = (r..k).flat_map(|i| (r..k).map(move |j| (i, j))).find(|&(i, j)| m[i * k + j] != 0)
        else {
            break;
        };
        for j in 0..k {
            m.swap(r * k + j, pi * k + j);
            p.swap(r * k + j, pi * k + j);
        }
        for i in 0..k {
            m.swap(i * k + r, i * k + pj);
            qm.swap(i * k + r, i * k + pj);
        }
        let s = inv_mod(m[r * k + r], q);
        for j in 0..k {
            m[r * k + j] = m[r * k + j] * s % q;
            p[r * k + j] = p[r * k + j] * s % q;
        }
        for i in 0..k {
            let f = m[i * k + r];
            if i != r && f != 0 {
                for j in 0..k {
                    m[i * k + j] = (m[i * k + j] + q - f * m[r * k + j] % q) % q;
                    p[i * k + j] = (p[i * k + j] + q - f * p[r * k + j] % q) % q;
                }
            }
        }
        // Row r is now the pivot row; clear it to the right with column operations.
        for j in 0..k {
            let f = m[r * k + j];
            if j != r && f != 0 {
                for i in 0..k {
                    m[i * k + j] = (m[i * k + j] + q - f * m[i * k + r] % q) % q;
                    qm[i * k + j] = (qm[i * k + j] + q - f * qm[i * k + r] % q) % q;
                }
            }
        }
        r += 1;
    }
    let e_inv = Matrix { k, q, entries: p };
    let f_inv = Matrix { k, q, entries: qm };
    RankFactorization {
        e: e_inv.inverse().expect("row operations are invertible"),
        rank: r,
        f: f_inv.inverse().expect("column operations are invertible"),
        e_inv,
        f_inv,
    }
}

/// `G0 = F⁻¹·diag(I_r, 0)·E⁻¹`; satisfies `A·G0·A = A` and `G0·A·G0 = G0`.
pub fn inner_inverse_matrix(a: &Matrix) -> Matrix {
    let rf = rank_factorization(a);
    rf.f_inv.mul(&Matrix::diag_identity(a.k, a.q, rf.rank)).mul(&rf.e_inv)
}

/// Rank of the `k × 2k` block `[B | D]`.
fn side_by_side_rank(b: &Matrix, d: &Matrix) -> usize {
    let k = b.k;
    let mut data = Vec::with_capacity(2 * k * k);
    for r in 0..k {
        data.extend_from_slice(&b.entries[r * k..(r + 1) * k]);
        data.extend_from_slice(&d.entries[r * k..(r + 1) * k]);
    }
    echelon_rank(k, 2 * k, data, b.q)
}

/// `B·R ∩ D·R = 0`: the column spaces of `B` and `D` meet trivially.
pub fn col_intersection_trivial(b: &Matrix, d: &Matrix) -> bool {
    side_by_side_rank(b, d) == rank(b) + rank(d)
}

/// `R·B ∩ R·D = 0`: the row spaces of `B` and `D` meet trivially.
pub fn row_intersection_trivial(b: &Matrix, d: &Matrix) -> bool {
    col_intersection_trivial(&b.transpose(), &d.transpose())
}

/// `b ∈ a·R`.
pub fn membership_ar(b: &Matrix, a: &Matrix) -> bool {
    a.mul(&inner_inverse_matrix(a)).mul(b) == *b
}

/// `b ∈ R·a`.
pub fn membership_ra(b: &Matrix, a: &Matrix) -> bool {
    b.mul(&inner_inverse_matrix(a)).mul(a) == *b
}

/// `I(A) ⊆ I(B)` via the trivial-intersection criterion with `D = A − B`.
pub fn inner_subset_matrices(a: &Matrix, b: &Matrix) -> bool {
    let d = a.sub(b);
    col_intersection_trivial(b, &d) && row_intersection_trivial(b, &d)
}

/// `I(A) = I(B)`, decided without enumerating either set.
pub fn inner_set_equal_matrices(a: &Matrix, b: &Matrix) -> bool {
    inner_subset_matrices(a, b) && inner_subset_matrices(b, a)
}
