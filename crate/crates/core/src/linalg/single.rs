use alloc::format;
use alloc::vec::Vec;

use super::{min_poly, char_poly, vector, Matrix, Subspace};
use crate::error::{Error, Result};
use crate::module::{is_irreducible, spin, IrreducibilityVerdict};
use crate::scalars::{poly_irreducible, poly_splits, Domain, Poly, PolyIrreducibility, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Nilpotency {
    pub nilpotent: bool,
    /// Least `k >= 1` with `A^k = 0`.
    pub index: Option<usize>,
}

/// Nilpotent iff `A^n = 0` for the matrix size `n`.
pub fn is_nilpotent(a: &Matrix) -> Nilpotency {
    assert!(a.is_square(), "nilpotency of a non-square matrix");
    let mut p = a.clone();
    for k in 1..=a.rows().max(1) {
        if p.is_zero() {
            return Nilpotency { nilpotent: true, index: Some(k) };
        }
        p = p.mul(a);
    }
    Nilpotency { nilpotent: false, index: None }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingleTriangularizability {
    pub triangularizable: bool,
    pub min_poly: Poly,
    /// Roots of the minimal polynomial in the center, with multiplicity.
    pub eigenvalues: Vec<(Scalar, usize)>,
}

/// Triangularizable with inner eigenvalues in the center iff the minimal
/// polynomial splits there.
pub fn f_triangularizable_single(a: &Matrix) -> Result<SingleTriangularizability> {
    let m = min_poly(a);
    if m.degree() == Some(0) {
        // only the 0x0 matrix
        return Ok(SingleTriangularizability { triangularizable: true, min_poly: m, eigenvalues: Vec::new() });
    }
    let s = poly_splits(&m)?;
    Ok(SingleTriangularizability { triangularizable: s.splits, min_poly: m, eigenvalues: s.roots })
}

/// `P⁻¹·A·P`.
pub fn conjugate(p: &Matrix, a: &Matrix) -> Result<Matrix> {
    let inv = p.inverse()?;
    inv.checked_mul(a)?.checked_mul(p)
}

pub fn direct_sum(domain: &Domain, blocks: &[Matrix]) -> Result<Matrix> {
    if let Some(b) = blocks.iter().find(|b| b.domain() != domain) {
        return Err(Error::DomainMismatch(format!("block over {}", b.domain().descriptor())));
    }
    let rows = blocks.iter().map(Matrix::rows).sum();
    let cols = blocks.iter().map(Matrix::cols).sum();
    let mut m = Matrix::zero(domain, rows, cols);
    let (mut r0, mut c0) = (0, 0);
    for b in blocks {
        for i in 0..b.rows() {
            for j in 0..b.cols() {
                m.set(r0 + i, c0 + j, b.get(i, j).clone());
            }
        }
        r0 += b.rows();
        c0 += b.cols();
    }
    Ok(m)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixIrreducibility {
    pub irreducible: bool,
    pub char_poly: Poly,
    /// A proper nonzero invariant subspace when reducible (n > 1).
    pub witness: Option<Subspace>,
}

/// A single matrix is irreducible iff its characteristic polynomial is.
/// For `n = 1` every nonzero matrix counts as irreducible and `[0]` does not.
pub fn matrix_is_irreducible(a: &Matrix) -> Result<MatrixIrreducibility> {
    let chi = char_poly(a)?;
    let d = a.domain();
    let n = a.rows();
    if n == 0 {
        return Err(Error::InvalidInput("empty matrix".into()));
    }
    if n == 1 {
        return Ok(MatrixIrreducibility { irreducible: !a.is_zero(), char_poly: chi, witness: None });
    }
    match poly_irreducible(&chi)? {
        PolyIrreducibility::Irreducible => Ok(MatrixIrreducibility { irreducible: true, char_poly: chi, witness: None }),
        PolyIrreducibility::Reducible(g) => {
            let mut w = a.eval_poly(&g).kernel();
            if w.is_full() {
                // g(A) = 0, so every cyclic subspace has dimension <= deg g < n
                w = spin(d, core::slice::from_ref(a), &vector::unit(d, n, 0));
            }
            debug_assert!(w.is_proper_nonzero() && w.is_invariant_under(a));
            Ok(MatrixIrreducibility { irreducible: false, char_poly: chi, witness: Some(w) })
        }
        PolyIrreducibility::Unknown => {
            // cheap refutation first: a standard basis vector that is not cyclic
            for i in 0..n {
                let s = spin(d, core::slice::from_ref(a), &vector::unit(d, n, i));
                if !s.is_full() {
                    return Ok(MatrixIrreducibility { irreducible: false, char_poly: chi, witness: Some(s) });
                }
            }
            match is_irreducible(d, n, core::slice::from_ref(a), 0)? {
                IrreducibilityVerdict::Irreducible(_) => {
                    Ok(MatrixIrreducibility { irreducible: true, char_poly: chi, witness: None })
                }
                IrreducibilityVerdict::Reducible(w) => {
                    Ok(MatrixIrreducibility { irreducible: false, char_poly: chi, witness: Some(w) })
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::companion;
    use crate::Quaternion;
    use alloc::vec;

    #[test]
    fn nilpotency_examples() {
        let q = Domain::Rational;
        assert_eq!(is_nilpotent(&Matrix::unit(&q, 2, 0, 1)), Nilpotency { nilpotent: true, index: Some(2) });
        assert!(!is_nilpotent(&Matrix::identity(&q, 2)).nilpotent);
        let u = Matrix::from_i64(&q, 3, 3, &[0, 1, 1, 0, 0, 1, 0, 0, 0]);
        assert_eq!(is_nilpotent(&u).index, Some(3));
        assert_eq!(is_nilpotent(&Matrix::zero(&q, 2, 2)).index, Some(1));
    }

    #[test]
    fn single_triangularizability() {
        let q = Domain::Rational;
        let c = companion(&Poly::from_i64(&q, &[1, 0, 1])).unwrap();
        assert!(!f_triangularizable_single(&c).unwrap().triangularizable);
        let u = Matrix::from_i64(&q, 3, 3, &[0, 1, 2, 0, 0, 3, 0, 0, 0]);
        let t = f_triangularizable_single(&u).unwrap();
        assert!(t.triangularizable);
        assert_eq!(t.eigenvalues, vec![(q.from_i64(0), 3)]);
        let i = Matrix::diag(&Domain::Quaternion, &[Scalar::Quat(Quaternion::i())]);
        assert!(!f_triangularizable_single(&i).unwrap().triangularizable);
    }

    #[test]
    fn conjugation_examples() {
        let q = Domain::Rational;
        let a = Matrix::from_i64(&q, 2, 2, &[1, 2, 3, 4]);
        let i = Matrix::identity(&q, 2);
        assert_eq!(conjugate(&i, &a).unwrap(), a);
        let p = Matrix::from_i64(&q, 2, 2, &[2, 1, 1, 1]);
        assert_eq!(conjugate(&p, &i).unwrap(), i);
        let swap = Matrix::from_i64(&q, 2, 2, &[0, 1, 1, 0]);
        assert_eq!(conjugate(&swap, &Matrix::unit(&q, 2, 0, 0)).unwrap(), Matrix::unit(&q, 2, 1, 1));
        assert_eq!(conjugate(&Matrix::zero(&q, 2, 2), &a), Err(Error::Singular));
    }

    #[test]
    fn direct_sum_examples() {
        let q = Domain::Rational;
        let c = Matrix::from_i64(&q, 1, 1, &[3]);
        let e = Matrix::from_i64(&q, 1, 1, &[5]);
        assert_eq!(direct_sum(&q, &[c, e]).unwrap(), Matrix::from_i64(&q, 2, 2, &[3, 0, 0, 5]));
        let comp = companion(&Poly::from_i64(&q, &[1, 0, 1])).unwrap();
        let cc = direct_sum(&q, &[comp.clone(), comp]).unwrap();
        assert_eq!(min_poly(&cc), Poly::from_i64(&q, &[1, 0, 1]));
        assert_eq!(direct_sum(&q, &[]).unwrap().rows(), 0);
    }

    #[test]
    fn single_matrix_irreducibility() {
        let q = Domain::Rational;
        let c = companion(&Poly::from_i64(&q, &[1, 0, 1])).unwrap();
        assert!(matrix_is_irreducible(&c).unwrap().irreducible);
        let dg = Matrix::from_i64(&q, 2, 2, &[1, 0, 0, 2]);
        let v = matrix_is_irreducible(&dg).unwrap();
        assert!(!v.irreducible);
        assert_eq!(v.witness.unwrap(), Subspace::span(&q, 2, &[vector::unit(&q, 2, 0)]));
        let f2 = Domain::Prime(2);
        let c2 = companion(&Poly::from_i64(&f2, &[1, 1, 1])).unwrap();
        assert!(matrix_is_irreducible(&c2).unwrap().irreducible);
        // g(A) = 0 case: C ⊕ C has reducible char poly (x^2+1)^2
        let cc = direct_sum(&q, &[c.clone(), c]).unwrap();
        let v = matrix_is_irreducible(&cc).unwrap();
        assert!(!v.irreducible);
        let w = v.witness.unwrap();
        assert!(w.is_proper_nonzero() && w.is_invariant_under(&cc));
    }
}
