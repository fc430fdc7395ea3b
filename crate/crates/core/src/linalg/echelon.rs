use alloc::vec::Vec;

use super::{vector, Matrix, Vector};
use crate::scalars::{Domain, Scalar};

/// Vectors in reduced echelon form: each row has a leading one at its
/// pivot and zeros at every other row's pivot. Rows are kept sorted by
/// pivot, so equal spans give equal values.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Echelon {
    domain: Domain,
    len: usize,
    rows: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(domain: &Domain, len: usize) -> Echelon {
        Echelon { domain: domain.clone(), len, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn domain(&self) -> &Domain {
        &self.domain
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn rows(&self) -> &[Vector] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// `v` minus its projection onto the span along the pivot coordinates.
    pub fn reduce(&self, v: &[Scalar]) -> Vector {
        assert_eq!(v.len(), self.len, "vector length");
        let d = &self.domain;
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = v[p].clone();
            if d.is_zero(&c) {
                continue;
            }
            for (x, b) in v.iter_mut().zip(row) {
                if !d.is_zero(b) {
                    *x = d.sub(x, &d.mul(b, &c));
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        vector::is_zero(&self.domain, &self.reduce(v))
    }

    /// Coefficients `c` with `v = Σ rows[k]·c[k]`, if `v` lies in the span.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Adds `v` to the span; returns false when it was already there.
    pub fn insert(&mut self, v: &[Scalar]) -> bool {
        let d = self.domain.clone();
        let r = self.reduce(v);
        let Some(p) = r.iter().position(|x| !d.is_zero(x)) else {
            return false;
        };
        let inv = d.inv(&r[p]).expect("nonzero pivot");
        let r = vector::scale(&d, &r, &inv);
        for row in &mut self.rows {
            let c = row[p].clone();
            if !d.is_zero(&c) {
                *row = vector::sub(&d, row, &vector::scale(&d, &r, &c));
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.rows.insert(at, r);
        self.pivots.insert(at, p);
        true
    }
}

/// A right subspace of `D^n` held by its reduced echelon basis.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subspace {
    echelon: Echelon,
}

impl Subspace {
    pub fn zero(domain: &Domain, n: usize) -> Subspace {
        Subspace { echelon: Echelon::new(domain, n) }
    }

    pub fn full(domain: &Domain, n: usize) -> Subspace {
        let units: Vec<Vector> = (0..n).map(|i| vector::unit(domain, n, i)).collect();
        Subspace::span(domain, n, &units)
    }

    pub fn span(domain: &Domain, n: usize, vectors: &[Vector]) -> Subspace {
        let mut s = Subspace::zero(domain, n);
        for v in vectors {
            s.insert(v);
        }
        s
    }

    pub fn domain(&self) -> &Domain {
        self.echelon.domain()
    }

    pub fn ambient(&self) -> usize {
        self.echelon.len()
    }

    pub fn dim(&self) -> usize {
        self.echelon.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient()
    }

    pub fn is_proper_nonzero(&self) -> bool {
        !self.is_zero() && !self.is_full()
    }

    pub fn basis(&self) -> &[Vector] {
        self.echelon.rows()
    }

    pub fn pivots(&self) -> &[usize] {
        self.echelon.pivots()
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.echelon.contains(v)
    }

    pub fn reduce(&self, v: &[Scalar]) -> Vector {
        self.echelon.reduce(v)
    }

    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        self.echelon.coordinates(v)
    }

    pub fn insert(&mut self, v: &[Scalar]) -> bool {
        self.echelon.insert(v)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis().iter().all(|v| self.contains(v))
    }

    pub fn join(&self, other: &Subspace) -> Subspace {
        let mut s = self.clone();
        for v in other.basis() {
            s.insert(v);
        }
        s
    }

    /// `A·S ⊆ S`.
    pub fn is_invariant_under(&self, a: &Matrix) -> bool {
        self.basis().iter().all(|v| self.contains(&a.mul_vec(v)))
    }

    /// Standard basis indices completing the basis to the whole space: the
    /// non-pivot coordinates.
    pub fn complement_indices(&self) -> Vec<usize> {
        (0..self.ambient()).filter(|i| !self.pivots().contains(i)).collect()
    }

    /// The `n × dim` matrix whose columns are the basis vectors.
    pub fn basis_matrix(&self) -> Matrix {
        Matrix::from_columns(self.domain(), self.ambient(), self.basis())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn v(d: &Domain, xs: &[i64]) -> Vector {
        xs.iter().map(|&x| d.from_i64(x)).collect()
    }

    #[test]
    fn echelon_is_canonical() {
        let d = Domain::Rational;
        let a = Subspace::span(&d, 3, &[v(&d, &[1, 2, 3]), v(&d, &[0, 1, 1])]);
        let b = Subspace::span(&d, 3, &[v(&d, &[1, 3, 4]), v(&d, &[2, 4, 6])]);
        assert_eq!(a, b);
        assert_eq!(a.pivots(), &[0, 1]);
        assert_eq!(a.basis()[0], v(&d, &[1, 0, 1]));
        assert!(a.contains(&v(&d, &[3, 7, 10])));
        assert!(!a.contains(&v(&d, &[0, 0, 1])));
        assert_eq!(a.complement_indices(), vec![2]);
    }

    #[test]
    fn right_scalars_over_quaternions() {
        let d = Domain::Quaternion;
        let q = |a, b, c, e| Scalar::Quat(crate::Quaternion::from_ints(a, b, c, e));
        let x = vec![q(1, 0, 0, 0), q(0, 1, 0, 0)];
        let s = Subspace::span(&d, 2, core::slice::from_ref(&x));
        // x·j = (j, i·j) = (j, k) stays in the right span
        let xj = vector::scale(&d, &x, &q(0, 0, 1, 0));
        assert!(s.contains(&xj));
        // j·x = (j, j·i) = (j, -k) does not
        let jx: Vector = x.iter().map(|e| d.mul(&q(0, 0, 1, 0), e)).collect();
        assert!(!s.contains(&jx));
        let c = s.coordinates(&xj).unwrap();
        assert_eq!(c, vec![q(0, 0, 1, 0)]);
    }
}
