use alloc::vec::Vec;

use super::{vector, Matrix, Subspace, Vector};
use crate::scalars::Scalar;
use crate::error::{Error, Result};

/// Reduced row echelon form `reduced = transform · M`, built from left row
/// operations only.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub reduced: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
    pub transform: Matrix,
}

impl Matrix {
    pub fn rref(&self) -> Rref {
        let d = self.domain().clone();
        let (rows, cols) = (self.rows(), self.cols());
        let mut r = self.to_rows();
        let mut w = Matrix::identity(&d, rows).to_rows();
        let mut pivots = Vec::new();
        let mut top = 0;
        for c in 0..cols {
            if top == rows {
                break;
            }
            let Some(p) = (top..rows).find(|&i| !d.is_zero(&r[i][c])) else {
                continue;
            };
            r.swap(top, p);
            w.swap(top, p);
            let inv = d.inv(&r[top][c]).expect("nonzero pivot");
            r[top] = r[top].iter().map(|x| d.mul(&inv, x)).collect();
            w[top] = w[top].iter().map(|x| d.mul(&inv, x)).collect();
            for i in 0..rows {
                if i == top || d.is_zero(&r[i][c]) {
                    continue;
                }
                let m = r[i][c].clone();
                let sr: Vec<_> = r[top].iter().map(|x| d.mul(&m, x)).collect();
                let sw: Vec<_> = w[top].iter().map(|x| d.mul(&m, x)).collect();
                r[i] = vector::sub(&d, &r[i], &sr);
                w[i] = vector::sub(&d, &w[i], &sw);
            }
            pivots.push(c);
            top += 1;
        }
        let reduced = Matrix::new(&d, rows, cols, r.into_iter().flatten().collect()).unwrap();
        let transform = Matrix::new(&d, rows, rows, w.into_iter().flatten().collect()).unwrap();
        Rref { reduced, rank: pivots.len(), pivots, transform }
    }

    /// `{x : Mx = 0}`.
    pub fn kernel(&self) -> Subspace {
        let d = self.domain().clone();
        let n = self.cols();
        let rr = self.rref();
        let mut basis = Vec::new();
        for f in (0..n).filter(|c| !rr.pivots.contains(c)) {
            let mut x = vector::unit(&d, n, f);
            for (row, &pc) in rr.pivots.iter().enumerate() {
                x[pc] = d.neg(rr.reduced.get(row, f));
            }
            basis.push(x);
        }
        Subspace::span(&d, n, &basis)
    }

    /// A solution of `M·x = b` with `x` multiplying from the right; free
    /// variables are set to zero.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vector> {
        assert_eq!(b.len(), self.rows(), "right-hand side length");
        let d = self.domain().clone();
        let cols = self.cols();
        let mut aug = Matrix::zero(&d, self.rows(), cols + 1);
        for (i, bi) in b.iter().enumerate() {
            for j in 0..cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, cols, bi.clone());
        }
        let rr = aug.rref();
        if rr.pivots.last() == Some(&cols) {
            return None;
        }
        let mut x = vector::zero(&d, cols);
        for (row, &pc) in rr.pivots.iter().enumerate() {
            x[pc] = rr.reduced.get(row, cols).clone();
        }
        Some(x)
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("inverse of a non-square matrix".into()));
        }
        let rr = self.rref();
        if rr.rank < self.rows() {
            return Err(Error::Singular);
        }
        Ok(rr.transform)
    }
}
