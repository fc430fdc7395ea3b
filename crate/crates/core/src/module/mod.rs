//! Invariant subspaces: spinning, irreducibility, composition chains,
//! triangularization and commutants.

mod chain;
mod commutant;
mod meataxe;
mod real;

use alloc::vec::Vec;

use crate::linalg::{vector, Matrix, Subspace, Vector};
use crate::scalars::{Domain, Scalar};

pub use chain::{
    composition_chain, inner_eigenvalues, triangularize, Obstruction, SubspaceChain, Triangularization,
    TriangularizationReport,
};
pub use commutant::{
    commutant, compress, hyperinvariant_check, is_absolutely_irreducible, AbsoluteIrreducibility, Hyperinvariance,
};
pub use meataxe::{is_irreducible, Certificate, CertificateMethod, IrreducibilityVerdict, SINGULAR_SEARCH_BUDGET};
pub use real::{realify, realify_vector, right_multiplication, unrealify_vector};

/// Smallest subspace containing `v` and closed under every generator.
pub fn spin(domain: &Domain, gens: &[Matrix], v: &[Scalar]) -> Subspace {
    spin_vectors(domain, gens, &[v.to_vec()])
}

/// Smallest subspace containing all `vs` and closed under every generator.
pub fn spin_vectors(domain: &Domain, gens: &[Matrix], vs: &[Vector]) -> Subspace {
    let n = vs.first().map_or_else(|| gens.first().map_or(0, Matrix::rows), Vec::len);
    let mut s = Subspace::zero(domain, n);
    let mut queue: Vec<Vector> = Vec::new();
    for v in vs {
        if s.insert(v) {
            queue.push(v.clone());
        }
    }
    let mut i = 0;
    while i < queue.len() && !s.is_full() {
        for g in gens {
            let w = g.mul_vec(&queue[i]);
            if s.insert(&w) {
                queue.push(w);
            }
        }
        i += 1;
    }
    s
}

/// True when the collection is empty or every member is zero.
pub(crate) fn is_zero_collection(gens: &[Matrix]) -> bool {
    gens.iter().all(Matrix::is_zero)
}

/// The standard witness for the zero collection: `span{e₁}`, or the zero
/// subspace when `n = 1`.
pub(crate) fn zero_collection_witness(domain: &Domain, n: usize) -> Subspace {
    if n >= 2 {
        Subspace::span(domain, n, &[vector::unit(domain, n, 0)])
    } else {
        Subspace::zero(domain, n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spin_examples() {
        let q = Domain::Rational;
        let e21 = Matrix::unit(&q, 2, 1, 0);
        assert!(spin(&q, &[e21], &vector::unit(&q, 2, 0)).is_full());
        let e12 = Matrix::unit(&q, 2, 0, 1);
        assert!(spin(&q, core::slice::from_ref(&e12), &vector::unit(&q, 2, 1)).is_full());
        assert_eq!(spin(&q, core::slice::from_ref(&e12), &vector::unit(&q, 2, 0)).dim(), 1);
        assert!(spin(&q, &[e12], &vector::zero(&q, 2)).is_zero());
    }
}
