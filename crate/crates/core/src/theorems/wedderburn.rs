use alloc::string::String;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::Status;
use crate::algebra::{check_generators, is_nilpotent_algebra, AlgebraBasis, AlgebraNilpotency};
use crate::error::{Error, Result};
use crate::linalg::{f_triangularizable_single, is_nilpotent, Matrix};
use crate::scalars::Domain;

/// Random combinations tried when hunting for nilpotents that complete a span.
pub const NILPOTENT_SEARCH_BUDGET: usize = 256;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WedderburnFailure {
    NonNilpotentMember { index: usize },
    /// `N[left]·N[right]` leaves the span.
    NotAnAlgebra { left: usize, right: usize, product: Matrix },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WedderburnReport {
    pub status: Status,
    pub dim: usize,
    pub n: usize,
    pub nilpotency: Option<AlgebraNilpotency>,
    pub failure: Option<WedderburnFailure>,
}

/// For a set of nilpotent matrices whose span is closed under products,
/// checks that the span is a nilpotent algebra with index at most
/// `min(dim + 1, n)`.
pub fn wedderburn_verify(domain: &Domain, n: usize, set: &[Matrix]) -> Result<WedderburnReport> {
    check_generators(domain, n, set)?;
    let mut report = WedderburnReport { status: Status::RefutedHypothesis, dim: 0, n, nilpotency: None, failure: None };
    if let Some(index) = set.iter().position(|m| !is_nilpotent(m).nilpotent) {
        report.failure = Some(WedderburnFailure::NonNilpotentMember { index });
        return Ok(report);
    }
    let span = AlgebraBasis::span(domain, n, set)?;
    report.dim = span.dim();
    for (i, x) in set.iter().enumerate() {
        for (j, y) in set.iter().enumerate() {
            let product = x.mul(y);
            if !span.contains(&product) {
                report.failure = Some(WedderburnFailure::NotAnAlgebra { left: i, right: j, product });
                return Ok(report);
            }
        }
    }
    let nil = is_nilpotent_algebra(&span)?;
    match nil.index {
        Some(k) if k <= (span.dim() + 1).min(n.max(1)) => {}
        _ => return Err(Error::TheoremViolation("an algebra spanned by nilpotents is not nilpotent".into())),
    }
    report.nilpotency = Some(nil);
    report.status = Status::Certified;
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WedderburnMatrixReport {
    pub status: Status,
    pub dim: usize,
    pub n: usize,
    /// Dimension of the span of the nilpotents found.
    pub nilpotent_dim: usize,
    pub nilpotency: Option<AlgebraNilpotency>,
    /// Why the hypotheses fail or could not be confirmed.
    pub reason: Option<String>,
}

/// For a closed algebra of triangularizable matrices, confirms it is spanned
/// by nilpotents (basis elements, basis products, then seeded random
/// combinations) and then that `A^n = 0`. A basis element of nonzero trace
/// refutes the span hypothesis outright since nilpotents are traceless.
pub fn wedderburn_matrix_verify(a: &AlgebraBasis, seed: u64) -> Result<WedderburnMatrixReport> {
    if !a.is_closed() {
        return Err(Error::InvalidInput("the basis does not span an algebra".into()));
    }
    let d = a.domain();
    let n = a.n();
    let mut report = WedderburnMatrixReport {
        status: Status::Inapplicable,
        dim: a.dim(),
        n,
        nilpotent_dim: 0,
        nilpotency: None,
        reason: None,
    };
    for (i, b) in a.basis().iter().enumerate() {
        if !f_triangularizable_single(b)?.triangularizable {
            report.reason = Some(alloc::format!("basis element {i} has inner eigenvalues outside the field"));
            return Ok(report);
        }
    }
    let mut span = AlgebraBasis::zero(d, n);
    let offer = |m: &Matrix, span: &mut AlgebraBasis| {
        if is_nilpotent(m).nilpotent {
            span.insert(m);
        }
    };
    for b in a.basis() {
        offer(b, &mut span);
    }
    for x in a.basis() {
        for y in a.basis() {
            if span.dim() == a.dim() {
                break;
            }
            offer(&x.mul(y), &mut span);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..NILPOTENT_SEARCH_BUDGET {
        if span.dim() == a.dim() {
            break;
        }
        offer(&a.random_element(&mut rng), &mut span);
    }
    report.nilpotent_dim = span.dim();
    if span.dim() < a.dim() {
        let traced = a.basis().iter().position(|b| !d.is_zero(&d.center_coords(&b.trace())[0]));
        match traced {
            Some(i) => {
                report.reason = Some(alloc::format!(
                    "basis element {i} has nonzero trace {} while nilpotents are traceless",
                    a.basis()[i].trace()
                ));
            }
            None => {
                report.status = Status::Inconclusive;
                report.reason = Some(alloc::format!(
                    "found nilpotents spanning dimension {} of {}",
                    span.dim(),
                    a.dim()
                ));
            }
        }
        return Ok(report);
    }
    let nil = is_nilpotent_algebra(a)?;
    if nil.index.is_none_or(|k| k > n.max(1)) {
        return Err(Error::TheoremViolation("triangularizable algebra spanned by nilpotents has A^n != 0".into()));
    }
    report.nilpotency = Some(nil);
    report.status = Status::Certified;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn e(d: &Domain, n: usize, i: usize, j: usize) -> Matrix {
        Matrix::unit(d, n, i, j)
    }

    #[test]
    fn spanned_sets() {
        let q = Domain::Rational;
        let r = wedderburn_verify(&q, 3, &[e(&q, 3, 0, 1), e(&q, 3, 0, 2), e(&q, 3, 1, 2)]).unwrap();
        assert_eq!(r.status, Status::Certified);
        assert_eq!(r.nilpotency.unwrap().index, Some(3));
        let r = wedderburn_verify(&q, 2, &[e(&q, 2, 0, 1), e(&q, 2, 1, 0)]).unwrap();
        assert_eq!(r.status, Status::RefutedHypothesis);
        match r.failure {
            Some(WedderburnFailure::NotAnAlgebra { product, .. }) => assert_eq!(product, e(&q, 2, 0, 0)),
            other => panic!("{other:?}"),
        }
        let r = wedderburn_verify(&q, 2, &[Matrix::zero(&q, 2, 2)]).unwrap();
        assert_eq!(r.nilpotency.unwrap().index, Some(1));
        let r = wedderburn_verify(&q, 2, &[Matrix::identity(&q, 2)]).unwrap();
        assert_eq!(r.failure, Some(WedderburnFailure::NonNilpotentMember { index: 0 }));
    }

    #[test]
    fn closed_algebras() {
        let q = Domain::Rational;
        let upper = AlgebraBasis::span(&q, 3, &[e(&q, 3, 0, 1), e(&q, 3, 0, 2), e(&q, 3, 1, 2)]).unwrap();
        let r = wedderburn_matrix_verify(&upper, 0).unwrap();
        assert_eq!(r.status, Status::Certified);
        assert_eq!(r.nilpotency.unwrap().chain, vec![3, 1, 0]);
        let full = AlgebraBasis::span(&q, 2, &[e(&q, 2, 0, 0), e(&q, 2, 0, 1), e(&q, 2, 1, 0), e(&q, 2, 1, 1)]).unwrap();
        let r = wedderburn_matrix_verify(&full, 0).unwrap();
        assert_eq!(r.status, Status::Inapplicable);
        assert!(r.reason.unwrap().contains("trace"));
        let r = wedderburn_matrix_verify(&AlgebraBasis::zero(&q, 2), 0).unwrap();
        assert_eq!(r.status, Status::Certified);
        let h = Domain::Quaternion;
        let upper = AlgebraBasis::close(&h, 2, &[e(&h, 2, 0, 1)], false).unwrap();
        assert_eq!(wedderburn_matrix_verify(&upper, 0).unwrap().status, Status::Certified);
    }
}
