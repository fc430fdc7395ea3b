//! Dense exact matrices over any supported scalar domain.

mod charpoly;
mod echelon;
mod elim;
mod single;

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use rand::Rng;

use crate::error::{Error, Result};
use crate::scalars::{Domain, Poly, Scalar};

pub use charpoly::{char_poly, companion, min_poly};
pub use echelon::{Echelon, Subspace};
pub use elim::Rref;
pub use single::{
    conjugate, direct_sum, f_triangularizable_single, is_nilpotent, matrix_is_irreducible,
    MatrixIrreducibility, Nilpotency, SingleTriangularizability,
};

/// A column vector; scalars multiply it from the right.
pub type Vector = Vec<Scalar>;

/// Row-major dense matrix acting on the left of column vectors.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Matrix {
    domain: Domain,
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn new(domain: &Domain, rows: usize, cols: usize, entries: Vec<Scalar>) -> Result<Matrix> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        if let Some(bad) = entries.iter().find(|s| !domain.contains(s)) {
            return Err(Error::DomainMismatch(format!("{bad} is not in {}", domain.descriptor())));
        }
        Ok(Matrix { domain: domain.clone(), rows, cols, entries })
    }

    pub fn from_rows(domain: &Domain, rows: Vec<Vec<Scalar>>) -> Result<Matrix> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Matrix::new(domain, r, c, rows.into_iter().flatten().collect())
    }

    /// Panics when `values.len() != rows * cols`.
    pub fn from_i64(domain: &Domain, rows: usize, cols: usize, values: &[i64]) -> Matrix {
        assert_eq!(values.len(), rows * cols, "wrong number of entries");
        let entries = values.iter().map(|&v| domain.from_i64(v)).collect();
        Matrix { domain: domain.clone(), rows, cols, entries }
    }

    pub fn from_columns(domain: &Domain, rows: usize, columns: &[Vector]) -> Matrix {
        let mut m = Matrix::zero(domain, rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length");
            for (i, s) in col.iter().enumerate() {
                m.set(i, j, s.clone());
            }
        }
        m
    }

    pub fn zero(domain: &Domain, rows: usize, cols: usize) -> Matrix {
        Matrix { domain: domain.clone(), rows, cols, entries: alloc::vec![domain.zero(); rows * cols] }
    }

    pub fn identity(domain: &Domain, n: usize) -> Matrix {
        Matrix::scalar(domain, n, &domain.one())
    }

    pub fn scalar(domain: &Domain, n: usize, c: &Scalar) -> Matrix {
        let mut m = Matrix::zero(domain, n, n);
        for i in 0..n {
            m.set(i, i, c.clone());
        }
        m
    }

    /// The matrix unit with a one at `(i, j)`, zero-based.
    pub fn unit(domain: &Domain, n: usize, i: usize, j: usize) -> Matrix {
        let mut m = Matrix::zero(domain, n, n);
        m.set(i, j, domain.one());
        m
    }

    pub fn diag(domain: &Domain, values: &[Scalar]) -> Matrix {
        let mut m = Matrix::zero(domain, values.len(), values.len());
        for (i, v) in values.iter().enumerate() {
            m.set(i, i, v.clone());
        }
        m
    }

    pub fn random<R: Rng + ?Sized>(domain: &Domain, rows: usize, cols: usize, rng: &mut R) -> Matrix {
        let entries = (0..rows * cols).map(|_| domain.random(rng)).collect();
        Matrix { domain: domain.clone(), rows, cols, entries }
    }

    /// Rejection-samples until the matrix has full rank.
    pub fn random_invertible<R: Rng + ?Sized>(domain: &Domain, n: usize, rng: &mut R) -> Matrix {
        loop {
            let m = Matrix::random(domain, n, n, rng);
            if m.rank() == n {
                return m;
            }
        }
    }

    pub fn domain(&self) -> &Domain {
        &self.domain
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, s: Scalar) {
        self.entries[i * self.cols + j] = s;
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vector> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    fn same_shape(&self, other: &Matrix) {
        assert_eq!(self.domain, other.domain, "domain mismatch");
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
    }

    fn zip(&self, other: &Matrix, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Matrix {
        self.same_shape(other);
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| f(a, b)).collect();
        Matrix { domain: self.domain.clone(), rows: self.rows, cols: self.cols, entries }
    }

    fn map(&self, f: impl Fn(&Scalar) -> Scalar) -> Matrix {
        let entries = self.entries.iter().map(f).collect();
        Matrix { domain: self.domain.clone(), rows: self.rows, cols: self.cols, entries }
    }

    /// Panics on shape or domain mismatch.
    pub fn add(&self, other: &Matrix) -> Matrix {
        self.zip(other, |a, b| self.domain.add(a, b))
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        self.zip(other, |a, b| self.domain.sub(a, b))
    }

    pub fn neg(&self) -> Matrix {
        self.map(|a| self.domain.neg(a))
    }

    pub fn checked_mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.domain != other.domain {
            return Err(Error::DomainMismatch(format!(
                "{} vs {}",
                self.domain.descriptor(),
                other.domain.descriptor()
            )));
        }
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(self.mul(other))
    }

    /// Panics on shape or domain mismatch; see [`Matrix::checked_mul`].
    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.domain, other.domain, "domain mismatch");
        assert_eq!(self.cols, other.rows, "inner dimensions differ");
        let d = &self.domain;
        let mut out = Matrix::zero(d, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if d.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !d.is_zero(b) {
                        let idx = i * other.cols + j;
                        out.entries[idx] = d.add(&out.entries[idx], &d.mul(a, b));
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vector {
        assert_eq!(self.cols, v.len(), "vector length");
        let d = &self.domain;
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(d.zero(), |acc, (a, x)| d.add(&acc, &d.mul(a, x)))
            })
            .collect()
    }

    /// `A·c`: every entry multiplied by `c` on the right.
    pub fn scale(&self, c: &Scalar) -> Matrix {
        self.map(|a| self.domain.mul(a, c))
    }

    /// `c·A`.
    pub fn scale_left(&self, c: &Scalar) -> Matrix {
        self.map(|a| self.domain.mul(c, a))
    }

    pub fn pow(&self, k: u32) -> Matrix {
        assert!(self.is_square());
        let mut out = Matrix::identity(&self.domain, self.rows);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    pub fn transpose(&self) -> Matrix {
        let mut m = Matrix::zero(&self.domain, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(j, i, self.get(i, j).clone());
            }
        }
        m
    }

    /// Transpose with every entry conjugated; plain transpose over fields.
    pub fn conj_transpose(&self) -> Matrix {
        self.transpose().map(|a| self.domain.conj(a))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|s| self.domain.is_zero(s))
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Matrix::identity(&self.domain, self.rows)
    }

    /// A central scalar multiple of the identity.
    pub fn is_scalar(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        if self.rows == 0 {
            return true;
        }
        let c = self.get(0, 0);
        self.domain.is_central(c) && *self == Matrix::scalar(&self.domain, self.rows, c)
    }

    pub fn is_upper_triangular(&self) -> bool {
        (0..self.rows).all(|i| (0..i.min(self.cols)).all(|j| self.domain.is_zero(self.get(i, j))))
    }

    pub fn diagonal(&self) -> Vec<Scalar> {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i).clone()).collect()
    }

    pub fn trace(&self) -> Scalar {
        let d = &self.domain;
        self.diagonal().iter().fold(d.zero(), |acc, x| d.add(&acc, x))
    }

    pub fn submatrix(&self, rows: core::ops::Range<usize>, cols: core::ops::Range<usize>) -> Matrix {
        let mut m = Matrix::zero(&self.domain, rows.len(), cols.len());
        for (a, i) in rows.clone().enumerate() {
            for (b, j) in cols.clone().enumerate() {
                m.set(a, b, self.get(i, j).clone());
            }
        }
        m
    }

    /// Coordinates of all entries over the center, row-major, `center_dim`
    /// coordinates per entry.
    pub fn center_flat(&self) -> Vector {
        self.entries.iter().flat_map(|s| self.domain.center_coords(s)).collect()
    }

    pub fn from_center_flat(domain: &Domain, rows: usize, cols: usize, flat: &[Scalar]) -> Matrix {
        let k = domain.center_dim();
        assert_eq!(flat.len(), rows * cols * k, "flattened length");
        let entries = flat.chunks(k).map(|c| domain.from_center_coords(c)).collect();
        Matrix { domain: domain.clone(), rows, cols, entries }
    }

    /// Each entry mapped into the center; `None` if some entry is not central.
    pub fn to_center(&self) -> Option<Matrix> {
        let center = self.domain.center();
        let entries = self.entries.iter().map(|s| self.domain.to_center(s)).collect::<Option<Vec<_>>>()?;
        Some(Matrix { domain: center, rows: self.rows, cols: self.cols, entries })
    }

    /// The same matrix with entries embedded from the center into `domain`.
    pub fn embed(&self, domain: &Domain) -> Matrix {
        assert_eq!(domain.center(), self.domain, "embedding needs the center domain");
        self.map_into(domain, |s| domain.embed_center(s))
    }

    fn map_into(&self, domain: &Domain, f: impl Fn(&Scalar) -> Scalar) -> Matrix {
        let entries = self.entries.iter().map(f).collect();
        Matrix { domain: domain.clone(), rows: self.rows, cols: self.cols, entries }
    }

    /// `f(A)` for a polynomial over the center of the domain.
    pub fn eval_poly(&self, f: &Poly) -> Matrix {
        assert!(self.is_square());
        let d = &self.domain;
        let n = self.rows;
        let mut acc = Matrix::zero(d, n, n);
        for c in f.coeffs().iter().rev() {
            acc = acc.mul(self).add(&Matrix::scalar(d, n, &d.embed_center(c)));
        }
        acc
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// The column space as a right subspace.
    pub fn image(&self) -> Subspace {
        Subspace::span(&self.domain, self.rows, &self.columns())
    }

    pub fn commutes_with(&self, other: &Matrix) -> bool {
        self.mul(other) == other.mul(self)
    }

    pub fn to_string_rows(&self) -> String {
        let mut s = String::from("[");
        for i in 0..self.rows {
            if i > 0 {
                s.push_str(", ");
            }
            s.push('[');
            for (j, x) in self.row(i).iter().enumerate() {
                if j > 0 {
                    s.push_str(", ");
                }
                s.push_str(&format!("{x}"));
            }
            s.push(']');
        }
        s.push(']');
        s
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_rows())
    }
}

/// Vector helpers, right-scalar convention.
pub mod vector {
    use super::Vector;
    use crate::scalars::{Domain, Scalar};

    pub fn zero(d: &Domain, n: usize) -> Vector {
        alloc::vec![d.zero(); n]
    }

    pub fn unit(d: &Domain, n: usize, i: usize) -> Vector {
        let mut v = zero(d, n);
        v[i] = d.one();
        v
    }

    pub fn is_zero(d: &Domain, v: &[Scalar]) -> bool {
        v.iter().all(|s| d.is_zero(s))
    }

    /// `v·c`.
    pub fn scale(d: &Domain, v: &[Scalar], c: &Scalar) -> Vector {
        v.iter().map(|x| d.mul(x, c)).collect()
    }

    pub fn add(d: &Domain, v: &[Scalar], w: &[Scalar]) -> Vector {
        v.iter().zip(w).map(|(a, b)| d.add(a, b)).collect()
    }

    pub fn sub(d: &Domain, v: &[Scalar], w: &[Scalar]) -> Vector {
        v.iter().zip(w).map(|(a, b)| d.sub(a, b)).collect()
    }
}
