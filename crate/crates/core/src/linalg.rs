//! Dense vectors and matrices over `F_q`.
//!
//! Vectors are coordinate columns relative to the standard basis
//! `e_1, ..., e_n`; a matrix `X` acts by `b -> Xb`. Text form is rows separated
//! by `;` with space-separated encoded entries, e.g. `"1 0 0; 0 1 1"`.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Elem, Field};

/// Row-major dense matrix of field elements. Arithmetic needs the owning
/// [`Field`] passed in explicitly.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

/// Output of [`Matrix::rref`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    /// Reduced row echelon form with the zero rows dropped.
    pub matrix: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Matrix {
        Matrix { rows, cols, data: vec![Elem::ZERO; rows * cols] }
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<Elem>) -> Result<Matrix> {
        if data.len() != rows * cols {
            return Err(Error::Dimension { expected: rows * cols, found: data.len() });
        }
        Ok(Matrix { rows, cols, data })
    }

    /// Builds a matrix from rows of equal length.
    pub fn from_rows<R: AsRef<[Elem]>>(cols: usize, rows: &[R]) -> Result<Matrix> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(Error::Dimension { expected: cols, found: r.len() });
            }
            data.extend_from_slice(r);
        }
        Ok(Matrix { rows: rows.len(), cols, data })
    }

    /// Validates raw encoded values against `field`.
    pub fn from_values(field: &Field, rows: usize, cols: usize, values: &[u32]) -> Result<Matrix> {
        let data = values.iter().map(|&v| field.element(v)).collect::<Result<Vec<_>>>()?;
        Matrix::from_vec(rows, cols, data)
    }

    pub fn identity(n: usize) -> Matrix {
        Matrix::scalar(n, Elem::ONE)
    }

    pub fn scalar(n: usize, c: Elem) -> Matrix {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = c;
        }
        m
    }

    pub fn diagonal(entries: &[Elem]) -> Matrix {
        let n = entries.len();
        let mut m = Matrix::zeros(n, n);
        for (i, &d) in entries.iter().enumerate() {
            m[(i, i)] = d;
        }
        m
    }

    /// The matrix unit `E_ij` (0-based): a single 1 at `(i, j)`.
    pub fn unit(n: usize, i: usize, j: usize) -> Matrix {
        let mut m = Matrix::zeros(n, n);
        m[(i, j)] = Elem::ONE;
        m
    }

    /// The identity with rows `k` and `l` exchanged (0-based).
    pub fn transposition(n: usize, k: usize, l: usize) -> Matrix {
        let mut m = Matrix::identity(n);
        m.swap_rows(k, l);
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn data(&self) -> &[Elem] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[Elem]> + '_ {
        // chunks_exact panics on a zero chunk size
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| e.is_zero())
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    /// Applies `f` entrywise.
    pub fn map(&self, mut f: impl FnMut(Elem) -> Elem) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|&e| f(e)).collect() }
    }

    pub fn scale(&self, field: &Field, c: Elem) -> Matrix {
        self.map(|e| field.mul(c, e))
    }

    pub fn add(&self, field: &Field, other: &Matrix) -> Result<Matrix> {
        if self.shape() != other.shape() {
            return Err(Error::Dimension { expected: self.rows * self.cols, found: other.rows * other.cols });
        }
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| field.add(a, b)).collect();
        Ok(Matrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn sub(&self, field: &Field, other: &Matrix) -> Result<Matrix> {
        self.add(field, &other.map(|e| field.neg(e)))
    }

    pub fn mul(&self, field: &Field, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::Dimension { expected: self.cols, found: other.rows });
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let t = field.mul(a, other[(k, j)]);
                    out[(i, j)] = field.add(out[(i, j)], t);
                }
            }
        }
        Ok(out)
    }

    /// The product `Xv` for a coordinate column `v`.
    pub fn apply(&self, field: &Field, v: &[Elem]) -> Result<Vec<Elem>> {
        if v.len() != self.cols {
            return Err(Error::Dimension { expected: self.cols, found: v.len() });
        }
        Ok(self
            .row_iter()
            .map(|row| row.iter().zip(v).fold(Elem::ZERO, |acc, (&x, &b)| field.add(acc, field.mul(x, b))))
            .collect())
    }

    /// Reduced row echelon form. The returned matrix keeps only the `rank`
    /// nonzero rows, so its row space equals that of `self`.
    pub fn rref(&self, field: &Field) -> Rref {
        let mut m = self.clone();
        let pivots = m.reduce_in_place(field);
        let rank = pivots.len();
        m.data.truncate(rank * m.cols);
        m.rows = rank;
        Rref { matrix: m, rank, pivots }
    }

    pub fn rank(&self, field: &Field) -> usize {
        self.clone().reduce_in_place(field).len()
    }

    /// Gauss-Jordan elimination; returns the pivot columns. Rows past the
    /// rank are left zero.
    pub(crate) fn reduce_in_place(&mut self, field: &Field) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(src) = (r..self.rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            self.swap_rows(r, src);
            let inv = field.inv(self[(r, c)]).expect("pivot is nonzero");
            for j in c..self.cols {
                self[(r, j)] = field.mul(inv, self[(r, j)]);
            }
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let factor = self[(i, c)];
                if factor.is_zero() {
                    continue;
                }
                let neg = field.neg(factor);
                for j in c..self.cols {
                    let t = field.mul(neg, self[(r, j)]);
                    self[(i, j)] = field.add(self[(i, j)], t);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn inverse(&self, field: &Field) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::Dimension { expected: self.rows, found: self.cols });
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)];
            }
            aug[(i, n + i)] = Elem::ONE;
        }
        let pivots = aug.reduce_in_place(field);
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::Singular);
        }
        let mut inv = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = aug[(i, n + j)];
            }
        }
        Ok(inv)
    }

    pub fn is_invertible(&self, field: &Field) -> bool {
        self.is_square() && self.rank(field) == self.rows
    }

    /// Basis (in RREF) of `{v : Mv = 0}`.
    pub fn null_space(&self, field: &Field) -> Matrix {
        let Rref { matrix: r, pivots, .. } = self.rref(field);
        let n = self.cols;
        let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Matrix::zeros(free.len(), n);
        for (b, &fc) in free.iter().enumerate() {
            basis[(b, fc)] = Elem::ONE;
            for (row, &pc) in pivots.iter().enumerate() {
                basis[(b, pc)] = field.neg(r[(row, fc)]);
            }
        }
        basis.rref(field).matrix
    }

    /// Rescales so the first nonzero entry in row-major order is 1. This
    /// picks one representative per class modulo nonzero scalars.
    pub fn normalize_projective(&self, field: &Field) -> Result<Matrix> {
        let lead = *self.data.iter().find(|e| !e.is_zero()).ok_or(Error::ZeroMatrix)?;
        Ok(self.scale(field, field.inv(lead)?))
    }

    /// Parses the `"a b c; d e f"` text form.
    pub fn parse(field: &Field, text: &str) -> Result<Matrix> {
        let text = text.trim();
        if text.is_empty() {
            return Err(Error::Parse("empty matrix".into()));
        }
        let mut rows: Vec<Vec<Elem>> = Vec::new();
        for row in text.split(';') {
            let entries = row
                .split_whitespace()
                .map(|tok| {
                    let v: u32 = tok.parse().map_err(|_| Error::Parse(format!("bad matrix entry {tok:?}")))?;
                    field.element(v)
                })
                .collect::<Result<Vec<_>>>()?;
            rows.push(entries);
        }
        let cols = rows[0].len();
        if cols == 0 {
            return Err(Error::Parse("empty matrix row".into()));
        }
        Matrix::from_rows(cols, &rows).map_err(|_| Error::Parse(format!("ragged matrix {text:?}")))
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Elem;

    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &Elem {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Elem {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.row_iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            for (j, e) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{e}")?;
            }
        }
        Ok(())
    }
}

/// The standard dot product `sum a_i b_i`.
pub fn dot(field: &Field, a: &[Elem], b: &[Elem]) -> Elem {
    a.iter().zip(b).fold(Elem::ZERO, |acc, (&x, &y)| field.add(acc, field.mul(x, y)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(field: &Field, text: &str) -> Matrix {
        Matrix::parse(field, text).unwrap()
    }

    #[test]
    fn rref_examples() {
        let f2 = Field::prime(2).unwrap();
        let z = Matrix::zeros(2, 3).rref(&f2);
        assert_eq!((z.rank, z.pivots.len(), z.matrix.rows()), (0, 0, 0));
        let id = Matrix::identity(4).rref(&f2);
        assert_eq!(id.rank, 4);
        assert_eq!(id.matrix, Matrix::identity(4));
        assert_eq!(m(&f2, "1 1 0; 0 1 1; 1 0 1").rank(&f2), 2);
    }

    #[test]
    fn inverse_examples() {
        let f2 = Field::prime(2).unwrap();
        let f5 = Field::prime(5).unwrap();
        assert_eq!(Matrix::identity(3).inverse(&f5).unwrap(), Matrix::identity(3));
        let d = Matrix::diagonal(&[Elem(2), Elem(3), Elem(4)]);
        assert_eq!(d.inverse(&f5).unwrap(), Matrix::diagonal(&[Elem(3), Elem(2), Elem(4)]));
        let u = m(&f2, "1 1; 0 1");
        assert_eq!(u.inverse(&f2).unwrap(), u);
        assert_eq!(m(&f2, "1 1; 1 1").inverse(&f2), Err(Error::Singular));
        assert!(matches!(Matrix::zeros(2, 3).inverse(&f2), Err(Error::Dimension { .. })));
    }

    #[test]
    fn null_space_examples() {
        let f2 = Field::prime(2).unwrap();
        assert_eq!(Matrix::identity(3).null_space(&f2).rows(), 0);
        assert_eq!(Matrix::zeros(1, 4).null_space(&f2).rows(), 4);
        let ns = m(&f2, "1 1 0").null_space(&f2);
        assert_eq!(ns.rows(), 2);
        // (1,1,0) is orthogonal to itself in characteristic 2
        let with_self = Matrix::from_rows(3, &[ns.row(0), ns.row(1), &[Elem(1), Elem(1), Elem(0)]]).unwrap();
        assert_eq!(with_self.rank(&f2), 2);
    }

    #[test]
    fn apply_examples() {
        let f2 = Field::prime(2).unwrap();
        let f3 = Field::prime(3).unwrap();
        let v = vec![Elem(1), Elem(0), Elem(1)];
        assert_eq!(Matrix::identity(3).apply(&f2, &v).unwrap(), v);
        let e2 = [Elem(0), Elem(1), Elem(0)];
        assert_eq!(Matrix::unit(3, 0, 1).apply(&f2, &e2).unwrap(), vec![Elem(1), Elem(0), Elem(0)]);
        let two = Matrix::scalar(2, Elem(2));
        assert_eq!(two.apply(&f3, &[Elem(1), Elem(2)]).unwrap(), vec![Elem(2), Elem(1)]);
        assert!(matches!(two.apply(&f3, &[Elem(1)]), Err(Error::Dimension { .. })));
    }

    #[test]
    fn normalize_examples() {
        let f3 = Field::prime(3).unwrap();
        let f4 = Field::new(2, 2).unwrap();
        let x = m(&f3, "1 2; 0 1");
        assert_eq!(x.normalize_projective(&f3).unwrap(), x);
        assert_eq!(Matrix::scalar(3, Elem(2)).normalize_projective(&f3).unwrap(), Matrix::identity(3));
        let y = m(&f4, "0 2; 3 1");
        let y3 = y.scale(&f4, Elem(3));
        assert_eq!(y.normalize_projective(&f4).unwrap(), y3.normalize_projective(&f4).unwrap());
        assert_eq!(Matrix::zeros(2, 2).normalize_projective(&f3), Err(Error::ZeroMatrix));
    }

    #[test]
    fn text_format() {
        let f2 = Field::prime(2).unwrap();
        let x = m(&f2, "1 0 0; 0 1 1");
        assert_eq!(x.shape(), (2, 3));
        assert_eq!(x.to_string(), "1 0 0; 0 1 1");
        assert!(Matrix::parse(&f2, "1 0; 1").is_err());
        assert!(Matrix::parse(&f2, "1 2").is_err());
        assert!(Matrix::parse(&f2, "").is_err());
    }

    #[test]
    fn elementary_matrices() {
        let f3 = Field::prime(3).unwrap();
        let p = Matrix::transposition(3, 0, 2);
        assert_eq!(p.to_string(), "0 0 1; 0 1 0; 1 0 0");
        assert_eq!(p.mul(&f3, &p).unwrap(), Matrix::identity(3));
        assert_eq!(Matrix::unit(2, 1, 0).to_string(), "0 0; 1 0");
    }
}
