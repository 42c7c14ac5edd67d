//! Subspaces of `F_q^n` in canonical form.
//!
//! A subspace is stored as the reduced row echelon form of any basis, so two
//! values are equal exactly when they span the same space, and the derived
//! `Hash`/`Ord` can key maps directly. The `Display` form (the basis in matrix
//! text form, e.g. `"1 0 1; 0 1 1"`) is the vertex label used in every file.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Elem, Field};
use crate::linalg::Matrix;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subspace {
    n: usize,
    basis: Matrix,
}

impl Subspace {
    /// Row space of `m`, which may be zero or the whole space.
    pub fn row_space(field: &Field, m: &Matrix) -> Subspace {
        Subspace { n: m.cols(), basis: m.rref(field).matrix }
    }

    /// `[S]`, the span of `vectors` in `F_q^n`. Fails if the span is zero.
    pub fn span<V: AsRef<[Elem]>>(field: &Field, n: usize, vectors: &[V]) -> Result<Subspace> {
        let m = Matrix::from_rows(n, vectors)?;
        let s = Subspace::row_space(field, &m);
        if s.dim() == 0 {
            return Err(Error::NotAVertex { k: 0, n });
        }
        Ok(s)
    }

    pub fn zero(n: usize) -> Subspace {
        Subspace { n, basis: Matrix::zeros(0, n) }
    }

    pub fn full(n: usize) -> Subspace {
        Subspace { n, basis: Matrix::identity(n) }
    }

    /// `[e_i]` for a 0-based coordinate `i`.
    pub fn axis(n: usize, i: usize) -> Subspace {
        let mut basis = Matrix::zeros(1, n);
        basis[(0, i)] = Elem::ONE;
        Subspace { n, basis }
    }

    /// Wraps a matrix already known to be in RREF with no zero rows.
    pub(crate) fn from_rref(basis: Matrix) -> Subspace {
        Subspace { n: basis.cols(), basis }
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    /// Nontrivial and proper, i.e. a vertex of the inclusion graph.
    pub fn is_vertex(&self) -> bool {
        (1..self.n).contains(&self.dim())
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.basis.row_iter().map(|row| row.iter().position(|e| !e.is_zero()).expect("RREF rows are nonzero")).collect()
    }

    pub fn contains_vector(&self, field: &Field, v: &[Elem]) -> bool {
        debug_assert_eq!(v.len(), self.n);
        let mut rest = v.to_vec();
        for row in self.basis.row_iter() {
            let pivot = row.iter().position(|e| !e.is_zero()).unwrap();
            let c = rest[pivot];
            if c.is_zero() {
                continue;
            }
            let neg = field.neg(c);
            for (r, &b) in rest.iter_mut().zip(row).skip(pivot) {
                *r = field.add(*r, field.mul(neg, b));
            }
        }
        rest.iter().all(|e| e.is_zero())
    }

    /// `self ⊆ other`.
    pub fn is_subset(&self, field: &Field, other: &Subspace) -> bool {
        self.n == other.n
            && self.dim() <= other.dim()
            && self.basis.row_iter().all(|row| other.contains_vector(field, row))
    }

    /// `self ⊊ other`, the adjacency relation of the inclusion graph.
    pub fn is_proper_subset(&self, field: &Field, other: &Subspace) -> bool {
        self.dim() < other.dim() && self.is_subset(field, other)
    }

    /// The orthogonal complement under `sum a_i b_i`.
    pub fn perp(&self, field: &Field) -> Subspace {
        if self.dim() == 0 {
            return Subspace::full(self.n);
        }
        Subspace::from_rref(self.basis.null_space(field))
    }

    pub fn join(&self, field: &Field, other: &Subspace) -> Result<Subspace> {
        if self.n != other.n {
            return Err(Error::Dimension { expected: self.n, found: other.n });
        }
        let rows: Vec<&[Elem]> = self.basis.row_iter().chain(other.basis.row_iter()).collect();
        Ok(Subspace::row_space(field, &Matrix::from_rows(self.n, &rows)?))
    }

    /// Image under the linear map `b -> Xb`.
    pub fn image(&self, field: &Field, x: &Matrix) -> Result<Subspace> {
        if x.shape() != (self.n, self.n) {
            return Err(Error::Dimension { expected: self.n, found: x.rows() });
        }
        // Rows of B X^T are the images X w of the basis rows w.
        let mut mapped = Matrix::zeros(self.dim(), self.n);
        for (i, w) in self.basis.row_iter().enumerate() {
            for (j, xrow) in x.row_iter().enumerate() {
                mapped[(i, j)] = crate::linalg::dot(field, xrow, w);
            }
        }
        Ok(Subspace::row_space(field, &mapped))
    }

    /// Image under the entrywise field automorphism `a -> a^(p^t)`.
    pub fn frobenius(&self, field: &Field, t: u32) -> Result<Subspace> {
        field.frobenius_inverse(t)?;
        // Frobenius maps an RREF matrix to an RREF matrix.
        Ok(Subspace::from_rref(self.basis.map(|e| field.frob(e, t))))
    }

    /// Parses a label (any spanning set in matrix text form) in `F_q^n`.
    pub fn parse(field: &Field, n: usize, text: &str) -> Result<Subspace> {
        let m = Matrix::parse(field, text)?;
        if m.cols() != n {
            return Err(Error::Dimension { expected: n, found: m.cols() });
        }
        Ok(Subspace::row_space(field, &m))
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.dim() == 0 {
            // Zero space: a single zero row keeps the label parseable.
            let zeros = vec!["0"; self.n];
            return f.write_str(&zeros.join(" "));
        }
        self.basis.fmt(f)
    }
}

/// The scalar multiple of `v` whose first nonzero coordinate is 1.
pub fn standard_rep(field: &Field, v: &[Elem]) -> Result<Vec<Elem>> {
    let lead = *v.iter().find(|e| !e.is_zero()).ok_or(Error::ZeroVector)?;
    let inv = field.inv(lead)?;
    Ok(v.iter().map(|&e| field.mul(inv, e)).collect())
}

/// All `k`-dimensional subspaces of `F_q^n`, each exactly once.
///
/// Order: pivot column sets lexicographically, then free RREF entries
/// lexicographically in row-major order.
pub fn enumerate_subspaces(field: &Field, n: usize, k: usize) -> Result<Vec<Subspace>> {
    if k > n {
        return Err(Error::OutOfRange { k, lo: 0, hi: n });
    }
    let q = field.order();
    let mut out = Vec::new();
    let mut pivots: Vec<usize> = (0..k).collect();
    loop {
        // Free positions of this profile, row-major.
        let free: Vec<(usize, usize)> = pivots
            .iter()
            .enumerate()
            .flat_map(|(r, &p)| ((p + 1)..n).filter(|c| !pivots.contains(c)).map(move |c| (r, c)))
            .collect();
        let mut template = Matrix::zeros(k, n);
        for (r, &p) in pivots.iter().enumerate() {
            template[(r, p)] = Elem::ONE;
        }
        let mut digits = vec![0u32; free.len()];
        loop {
            let mut m = template.clone();
            for (&(r, c), &d) in free.iter().zip(&digits) {
                m[(r, c)] = Elem(d);
            }
            out.push(Subspace::from_rref(m));
            // Increment with the first free entry most significant.
            let mut pos = free.len();
            loop {
                if pos == 0 {
                    break;
                }
                pos -= 1;
                digits[pos] += 1;
                if digits[pos] < q {
                    break;
                }
                digits[pos] = 0;
            }
            if digits.iter().all(|&d| d == 0) {
                break;
            }
        }
        if !next_combination(&mut pivots, n) {
            break;
        }
    }
    Ok(out)
}

fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    let Some(i) = (0..k).rev().find(|&i| c[i] < n - k + i) else {
        return false;
    };
    c[i] += 1;
    for j in i + 1..k {
        c[j] = c[j - 1] + 1;
    }
    true
}
