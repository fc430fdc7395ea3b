//! Algebras and semigroups generated by finite sets of matrices.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use rand::Rng;

use crate::error::{Error, Result};
use crate::linalg::{is_nilpotent, Echelon, Matrix};
use crate::scalars::{Domain, Scalar};

/// Default cap on semigroup closures.
pub const SEMIGROUP_CAP: usize = 10_000;

pub(crate) fn check_generators(domain: &Domain, n: usize, gens: &[Matrix]) -> Result<()> {
    for (i, g) in gens.iter().enumerate() {
        if g.domain() != domain {
            return Err(Error::DomainMismatch(format!(
                "generator {i} is over {}, expected {}",
                g.domain().descriptor(),
                domain.descriptor()
            )));
        }
        if g.rows() != n || g.cols() != n {
            return Err(Error::DimensionMismatch(format!(
                "generator {i} is {}x{}, expected {n}x{n}",
                g.rows(),
                g.cols()
            )));
        }
    }
    Ok(())
}

/// A subspace of `M_n(D)` over the center `F`, held as a reduced echelon
/// basis of center-coordinate flattenings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraBasis {
    domain: Domain,
    n: usize,
    unital: bool,
    echelon: Echelon,
    basis: Vec<Matrix>,
}

impl AlgebraBasis {
    pub fn zero(domain: &Domain, n: usize) -> AlgebraBasis {
        let len = n * n * domain.center_dim();
        AlgebraBasis { domain: domain.clone(), n, unital: false, echelon: Echelon::new(&domain.center(), len), basis: Vec::new() }
    }

    /// The F-span of `mats`, without closing under products.
    pub fn span(domain: &Domain, n: usize, mats: &[Matrix]) -> Result<AlgebraBasis> {
        check_generators(domain, n, mats)?;
        let mut a = AlgebraBasis::zero(domain, n);
        for m in mats {
            a.insert(m);
        }
        Ok(a)
    }

    /// The F-algebra generated by `gens`, with the identity adjoined when
    /// `unital`. Products are taken in FIFO order of discovery.
    pub fn close(domain: &Domain, n: usize, gens: &[Matrix], unital: bool) -> Result<AlgebraBasis> {
        check_generators(domain, n, gens)?;
        let mut a = AlgebraBasis::zero(domain, n);
        a.unital = unital;
        let mut found: Vec<Matrix> = Vec::new();
        if unital {
            let id = Matrix::identity(domain, n);
            a.insert(&id);
            found.push(id);
        }
        for g in gens {
            if a.insert(g) {
                found.push(g.clone());
            }
        }
        let mut i = 0;
        while i < found.len() {
            for j in 0..=i {
                for prod in [found[i].mul(&found[j]), found[j].mul(&found[i])] {
                    if a.insert(&prod) {
                        found.push(prod);
                    }
                }
            }
            i += 1;
        }
        debug_assert!(a.is_closed());
        Ok(a)
    }

    pub fn domain(&self) -> &Domain {
        &self.domain
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_unital(&self) -> bool {
        self.unital
    }

    pub(crate) fn set_unital(&mut self, unital: bool) {
        self.unital = unital;
    }

    pub fn basis(&self) -> &[Matrix] {
        &self.basis
    }

    /// Dimension of the full matrix algebra over the center.
    pub fn full_dim(&self) -> usize {
        self.n * self.n * self.domain.center_dim()
    }

    pub fn contains(&self, m: &Matrix) -> bool {
        self.echelon.contains(&m.center_flat())
    }

    /// Coordinates over the center with respect to [`AlgebraBasis::basis`].
    pub fn coordinates(&self, m: &Matrix) -> Option<Vec<Scalar>> {
        self.echelon.coordinates(&m.center_flat())
    }

    pub fn insert(&mut self, m: &Matrix) -> bool {
        if !self.echelon.insert(&m.center_flat()) {
            return false;
        }
        self.basis = self
            .echelon
            .rows()
            .iter()
            .map(|r| Matrix::from_center_flat(&self.domain, self.n, self.n, r))
            .collect();
        true
    }

    pub fn contains_all(&self, other: &AlgebraBasis) -> bool {
        other.basis.iter().all(|m| self.contains(m))
    }

    /// Every product of basis elements lies in the span.
    pub fn is_closed(&self) -> bool {
        self.first_outside_product().is_none()
    }

    /// A product of two basis elements that leaves the span.
    pub fn first_outside_product(&self) -> Option<(usize, usize, Matrix)> {
        for (i, x) in self.basis.iter().enumerate() {
            for (j, y) in self.basis.iter().enumerate() {
                let p = x.mul(y);
                if !self.contains(&p) {
                    return Some((i, j, p));
                }
            }
        }
        None
    }

    /// `Σ B_k·c_k` with coefficients drawn from the center.
    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R) -> Matrix {
        let f = self.domain.center();
        let mut acc = Matrix::zero(&self.domain, self.n, self.n);
        for b in &self.basis {
            let c = self.domain.embed_center(&f.random(rng));
            acc = acc.add(&b.scale(&c));
        }
        acc
    }

    /// The same algebra with every basis element conjugated by `P`.
    pub fn conjugated(&self, p: &Matrix) -> Result<AlgebraBasis> {
        let inv = p.inverse()?;
        let mats: Vec<Matrix> = self.basis.iter().map(|b| inv.mul(b).mul(p)).collect();
        let mut a = AlgebraBasis::span(&self.domain, self.n, &mats)?;
        a.unital = self.unital;
        Ok(a)
    }
}

/// Span of all products `x·y` with `x` from X and `y` from Y.
pub fn product_space(x: &AlgebraBasis, y: &AlgebraBasis) -> AlgebraBasis {
    assert_eq!((x.domain(), x.n()), (y.domain(), y.n()), "incompatible algebras");
    let mut out = AlgebraBasis::zero(x.domain(), x.n());
    for a in x.basis() {
        for b in y.basis() {
            out.insert(&a.mul(b));
        }
    }
    out
}

/// Dimensions of `A ⊇ A² ⊇ A³ ⊇ …`, where `A^k` is the span of k-fold
/// products, stopping at zero or at the first repeat.
pub fn power_chain(a: &AlgebraBasis) -> Vec<usize> {
    let mut dims = alloc::vec![a.dim()];
    let mut cur = a.clone();
    while cur.dim() > 0 {
        let next = product_space(&cur, a);
        let stable = next.dim() == cur.dim();
        dims.push(next.dim());
        if stable {
            break;
        }
        cur = next;
    }
    dims
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraNilpotency {
    pub nilpotent: bool,
    /// Least `k` with `A^k = 0`.
    pub index: Option<usize>,
    pub chain: Vec<usize>,
}

/// Nilpotency of an algebra from its power chain; checks the bounds
/// `index <= dim + 1` and `index <= n`.
pub fn is_nilpotent_algebra(a: &AlgebraBasis) -> Result<AlgebraNilpotency> {
    let chain = power_chain(a);
    let index = chain.iter().position(|&d| d == 0).map(|k| k + 1);
    if let Some(k) = index {
        if k > a.dim() + 1 || k > a.n().max(1) {
            return Err(Error::TheoremViolation(format!(
                "nilpotency index {k} exceeds min(dim + 1, n) = min({}, {})",
                a.dim() + 1,
                a.n()
            )));
        }
    }
    Ok(AlgebraNilpotency { nilpotent: index.is_some(), index, chain })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NilpotentSpan {
    pub span: AlgebraBasis,
    pub witnesses: Vec<Matrix>,
}

/// The span of the nilpotent members of a finite set.
pub fn nilpotent_span(domain: &Domain, n: usize, set: &[Matrix]) -> Result<NilpotentSpan> {
    check_generators(domain, n, set)?;
    let witnesses: Vec<Matrix> = set.iter().filter(|m| is_nilpotent(m).nilpotent).cloned().collect();
    let span = AlgebraBasis::span(domain, n, &witnesses)?;
    Ok(NilpotentSpan { span, witnesses })
}

/// A finite set of matrices, listed in discovery order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemigroupSet {
    domain: Domain,
    n: usize,
    elements: Vec<Matrix>,
}

impl SemigroupSet {
    pub fn from_elements(domain: &Domain, n: usize, elements: &[Matrix]) -> Result<SemigroupSet> {
        check_generators(domain, n, elements)?;
        let mut seen = BTreeSet::new();
        let elements = elements.iter().filter(|m| seen.insert((*m).clone())).cloned().collect();
        Ok(SemigroupSet { domain: domain.clone(), n, elements })
    }

    pub fn domain(&self) -> &Domain {
        &self.domain
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> &[Matrix] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, m: &Matrix) -> bool {
        self.elements.contains(m)
    }

    pub fn is_closed(&self) -> bool {
        let set: BTreeSet<&Matrix> = self.elements.iter().collect();
        self.elements.iter().all(|a| self.elements.iter().all(|b| set.contains(&a.mul(b))))
    }

    /// True when some element is nonzero.
    pub fn is_nonzero(&self) -> bool {
        self.elements.iter().any(|m| !m.is_zero())
    }
}

/// Multiplicative closure; fails once more than `cap` elements appear.
pub fn semigroup_close(domain: &Domain, n: usize, gens: &[Matrix], cap: usize) -> Result<SemigroupSet> {
    check_generators(domain, n, gens)?;
    if cap == 0 {
        return Err(Error::InvalidInput("semigroup cap must be at least 1".into()));
    }
    let mut seen = BTreeSet::new();
    let mut elements: Vec<Matrix> = Vec::new();
    let mut push = |m: Matrix, elements: &mut Vec<Matrix>| -> Result<()> {
        if seen.insert(m.clone()) {
            elements.push(m);
            if elements.len() > cap {
                return Err(Error::CapExceeded(cap));
            }
        }
        Ok(())
    };
    for g in gens {
        push(g.clone(), &mut elements)?;
    }
    // every product is a shorter product times a generator
    let mut i = 0;
    while i < elements.len() {
        for g in gens {
            let m = elements[i].mul(g);
            push(m, &mut elements)?;
        }
        i += 1;
    }
    Ok(SemigroupSet { domain: domain.clone(), n, elements })
}

/// The smallest set containing `j_gens` and closed under multiplication by
/// elements of `s` on either side.
pub fn ideal_close(s: &SemigroupSet, j_gens: &[Matrix]) -> Result<SemigroupSet> {
    check_generators(s.domain(), s.n(), j_gens)?;
    let mut seen = BTreeSet::new();
    let mut elements: Vec<Matrix> = Vec::new();
    for g in j_gens {
        if seen.insert(g.clone()) {
            elements.push(g.clone());
        }
    }
    let mut i = 0;
    while i < elements.len() {
        let j = elements[i].clone();
        for x in s.elements() {
            for m in [x.mul(&j), j.mul(x)] {
                if seen.insert(m.clone()) {
                    elements.push(m);
                }
            }
        }
        i += 1;
    }
    Ok(SemigroupSet { domain: s.domain().clone(), n: s.n(), elements })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn e(d: &Domain, n: usize, i: usize, j: usize) -> Matrix {
        Matrix::unit(d, n, i - 1, j - 1)
    }

    #[test]
    fn closure_examples() {
        let f2 = Domain::Prime(2);
        let q = Domain::Rational;
        let a = AlgebraBasis::close(&f2, 2, &[e(&f2, 2, 1, 2), e(&f2, 2, 2, 1)], false).unwrap();
        assert_eq!(a.dim(), 4);
        assert!(a.contains(&e(&f2, 2, 1, 1)));
        let b = AlgebraBasis::close(&q, 2, &[e(&q, 2, 1, 2)], false).unwrap();
        assert_eq!(b.basis(), &[e(&q, 2, 1, 2)]);
        assert!(!b.contains(&e(&q, 2, 2, 1)));
        assert!(b.contains(&Matrix::zero(&q, 2, 2)));
        let c = AlgebraBasis::close(&q, 3, &[], true).unwrap();
        assert_eq!(c.basis(), &[Matrix::identity(&q, 3)]);
        assert!(AlgebraBasis::close(&q, 3, &[e(&q, 2, 1, 2)], false).is_err());
    }

    #[test]
    fn products_and_powers() {
        let q = Domain::Rational;
        let x = AlgebraBasis::span(&q, 2, &[e(&q, 2, 1, 2)]).unwrap();
        let y = AlgebraBasis::span(&q, 2, &[e(&q, 2, 2, 1)]).unwrap();
        assert_eq!(product_space(&x, &y).basis(), &[e(&q, 2, 1, 1)]);
        assert_eq!(product_space(&x, &AlgebraBasis::zero(&q, 2)).dim(), 0);
        let full = AlgebraBasis::close(&q, 2, &[e(&q, 2, 1, 2), e(&q, 2, 2, 1)], false).unwrap();
        assert_eq!(product_space(&full, &full).dim(), 4);
        let upper = AlgebraBasis::close(&q, 3, &[e(&q, 3, 1, 2), e(&q, 3, 2, 3)], false).unwrap();
        assert_eq!(upper.dim(), 3);
        assert_eq!(power_chain(&upper), vec![3, 1, 0]);
        assert_eq!(power_chain(&x), vec![1, 0]);
        assert_eq!(power_chain(&full), vec![4, 4]);
        let nil = is_nilpotent_algebra(&upper).unwrap();
        assert_eq!((nil.nilpotent, nil.index), (true, Some(3)));
        assert!(!is_nilpotent_algebra(&full).unwrap().nilpotent);
        assert_eq!(is_nilpotent_algebra(&AlgebraBasis::zero(&q, 2)).unwrap().index, Some(1));
    }

    #[test]
    fn nilpotent_span_examples() {
        let q = Domain::Rational;
        let set = [e(&q, 2, 1, 2), e(&q, 2, 2, 1), Matrix::identity(&q, 2)];
        assert_eq!(nilpotent_span(&q, 2, &set).unwrap().span.dim(), 2);
        assert_eq!(nilpotent_span(&q, 2, &[Matrix::zero(&q, 2, 2)]).unwrap().span.dim(), 0);
        let s = e(&q, 2, 1, 2).add(&e(&q, 2, 2, 1));
        assert_eq!(nilpotent_span(&q, 2, &[s]).unwrap().span.dim(), 0);
    }

    #[test]
    fn semigroup_examples() {
        let q = Domain::Rational;
        let s = semigroup_close(&q, 2, &[e(&q, 2, 1, 1)], SEMIGROUP_CAP).unwrap();
        assert_eq!(s.elements(), &[e(&q, 2, 1, 1)]);
        let s = semigroup_close(&q, 2, &[e(&q, 2, 1, 2), e(&q, 2, 2, 1)], SEMIGROUP_CAP).unwrap();
        let set: BTreeSet<Matrix> = s.elements().iter().cloned().collect();
        let want: BTreeSet<Matrix> =
            [e(&q, 2, 1, 2), e(&q, 2, 2, 1), e(&q, 2, 1, 1), e(&q, 2, 2, 2), Matrix::zero(&q, 2, 2)].into_iter().collect();
        // E12·E12 = 0 also belongs to the closure
        assert_eq!(set, want);
        let two = Matrix::scalar(&q, 2, &q.from_i64(2));
        assert_eq!(semigroup_close(&q, 2, &[two], 10), Err(Error::CapExceeded(10)));
    }

    #[test]
    fn ideal_examples() {
        let q = Domain::Rational;
        let s = SemigroupSet::from_elements(&q, 2, &[e(&q, 2, 1, 1)]).unwrap();
        assert_eq!(ideal_close(&s, &[e(&q, 2, 1, 1)]).unwrap().elements(), &[e(&q, 2, 1, 1)]);
        let mut units = vec![Matrix::zero(&q, 2, 2)];
        for i in 1..=2 {
            for j in 1..=2 {
                units.push(e(&q, 2, i, j));
            }
        }
        let s = SemigroupSet::from_elements(&q, 2, &units).unwrap();
        assert!(s.is_closed());
        let j = ideal_close(&s, &[e(&q, 2, 1, 1)]).unwrap();
        assert_eq!(j.len(), 5);
        assert!(ideal_close(&s, &[]).unwrap().is_empty());
    }
}
