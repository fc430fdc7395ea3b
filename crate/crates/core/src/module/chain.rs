use alloc::format;
use alloc::vec::Vec;

use super::is_irreducible;
use crate::algebra::check_generators;
use crate::error::{Error, Result};
use crate::linalg::{vector, Matrix, Subspace, Vector};
use crate::scalars::{Domain, Scalar};

/// A strictly increasing chain `0 = M₀ < M₁ < … < M_k = Dⁿ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspaceChain {
    domain: Domain,
    n: usize,
    members: Vec<Subspace>,
}

/// Basis vectors of `high` completing a basis of `low`.
fn complement(low: &Subspace, high: &Subspace) -> Vec<Vector> {
    let mut s = low.clone();
    high.basis().iter().filter(|v| s.insert(v)).cloned().collect()
}

/// Matrices of the generators acting on `high / low` in the complement basis.
fn quotient_action(low: &Subspace, reps: &[Vector], gens: &[Matrix]) -> Vec<Matrix> {
    let d = low.domain();
    let n = low.ambient();
    let mut cols: Vec<Vector> = low.basis().to_vec();
    cols.extend(reps.iter().cloned());
    let frame = Matrix::from_columns(d, n, &cols);
    let k = low.dim();
    gens.iter()
        .map(|g| {
            let images: Vec<Vector> = reps
                .iter()
                .map(|r| frame.solve(&g.mul_vec(r)).expect("generator leaves the upper subspace")[k..].to_vec())
                .collect();
            Matrix::from_columns(d, reps.len(), &images)
        })
        .collect()
}

impl SubspaceChain {
    pub fn new(domain: &Domain, n: usize, members: Vec<Subspace>) -> Result<SubspaceChain> {
        let ok = members.first().is_some_and(Subspace::is_zero)
            && members.last().is_some_and(Subspace::is_full)
            && members.iter().all(|m| m.ambient() == n && m.domain() == domain)
            && members.windows(2).all(|w| w[0].dim() < w[1].dim() && w[1].contains_subspace(&w[0]));
        if !ok {
            return Err(Error::InvalidInput("not a strictly increasing chain from 0 to the whole space".into()));
        }
        Ok(SubspaceChain { domain: domain.clone(), n, members })
    }

    /// `0 < span{e₁} < span{e₁, e₂} < …`.
    pub fn standard(domain: &Domain, n: usize) -> SubspaceChain {
        let members = (0..=n)
            .map(|k| {
                let vs: Vec<Vector> = (0..k).map(|i| vector::unit(domain, n, i)).collect();
                Subspace::span(domain, n, &vs)
            })
            .collect();
        SubspaceChain { domain: domain.clone(), n, members }
    }

    pub fn domain(&self) -> &Domain {
        &self.domain
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn members(&self) -> &[Subspace] {
        &self.members
    }

    pub fn dims(&self) -> Vec<usize> {
        self.members.iter().map(Subspace::dim).collect()
    }

    pub fn quotient_dims(&self) -> Vec<usize> {
        self.members.windows(2).map(|w| w[1].dim() - w[0].dim()).collect()
    }

    pub fn is_invariant_under(&self, g: &Matrix) -> bool {
        self.members.iter().all(|m| m.is_invariant_under(g))
    }

    /// Representatives of each quotient, in chain order.
    pub fn adapted_basis(&self) -> Vec<Vec<Vector>> {
        self.members.windows(2).map(|w| complement(&w[0], &w[1])).collect()
    }

    /// Columns are the adapted basis vectors.
    pub fn change_of_basis(&self) -> Matrix {
        let cols: Vec<Vector> = self.adapted_basis().into_iter().flatten().collect();
        Matrix::from_columns(&self.domain, self.n, &cols)
    }

    /// For each step, the generators acting on `M_i / M_{i-1}`.
    pub fn quotient_actions(&self, gens: &[Matrix]) -> Vec<Vec<Matrix>> {
        self.members
            .windows(2)
            .map(|w| quotient_action(&w[0], &complement(&w[0], &w[1]), gens))
            .collect()
    }
}

fn refine(
    gens: &[Matrix],
    low: Subspace,
    high: Subspace,
    seed: u64,
    out: &mut Vec<Subspace>,
) -> Result<()> {
    let reps = complement(&low, &high);
    let m = reps.len();
    if m <= 1 {
        out.push(high);
        return Ok(());
    }
    let q = quotient_action(&low, &reps, gens);
    let d = low.domain().clone();
    match is_irreducible(&d, m, &q, seed)? {
        super::IrreducibilityVerdict::Irreducible(_) => {
            out.push(high);
            Ok(())
        }
        super::IrreducibilityVerdict::Reducible(u) => {
            let mut mid = low.clone();
            for coeffs in u.basis() {
                let lifted = reps.iter().zip(coeffs).fold(vector::zero(&d, low.ambient()), |acc, (r, c)| {
                    vector::add(&d, &acc, &vector::scale(&d, r, c))
                });
                mid.insert(&lifted);
            }
            refine(gens, low, mid.clone(), seed, out)?;
            refine(gens, mid, high, seed, out)
        }
    }
}

/// A maximal chain of common invariant subspaces: quotients are split by
/// the irreducibility test's witnesses until every quotient is irreducible.
pub fn composition_chain(domain: &Domain, n: usize, gens: &[Matrix], seed: u64) -> Result<SubspaceChain> {
    check_generators(domain, n, gens)?;
    let mut members = alloc::vec![Subspace::zero(domain, n)];
    if n > 0 {
        refine(gens, Subspace::zero(domain, n), Subspace::full(domain, n), seed, &mut members)?;
    }
    let chain = SubspaceChain::new(domain, n, members)?;
    if !gens.iter().all(|g| chain.is_invariant_under(g)) {
        return Err(Error::TheoremViolation("composition chain member is not invariant".into()));
    }
    Ok(chain)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangularizationReport {
    pub chain: SubspaceChain,
    pub p: Matrix,
    /// `P⁻¹·G·P` for each generator, upper triangular.
    pub triangular_forms: Vec<Matrix>,
    /// Diagonal of each triangular form.
    pub inner_eigenvalues: Vec<Vec<Scalar>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Obstruction {
    pub chain: SubspaceChain,
    /// Index `i` of the first irreducible quotient `M_i / M_{i-1}` of
    /// dimension at least two.
    pub step: usize,
    pub lower: Subspace,
    pub upper: Subspace,
    pub quotient_action: Vec<Matrix>,
}

impl Obstruction {
    pub fn quotient_dim(&self) -> usize {
        self.upper.dim() - self.lower.dim()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Triangularization {
    Triangularized(TriangularizationReport),
    Obstructed(Obstruction),
}

/// Simultaneous triangularization through a composition chain.
pub fn triangularize(domain: &Domain, n: usize, gens: &[Matrix], seed: u64) -> Result<Triangularization> {
    let chain = composition_chain(domain, n, gens, seed)?;
    if let Some(i) = chain.quotient_dims().iter().position(|&q| q >= 2) {
        let (lower, upper) = (chain.members()[i].clone(), chain.members()[i + 1].clone());
        let quotient_action = quotient_action(&lower, &complement(&lower, &upper), gens);
        return Ok(Triangularization::Obstructed(Obstruction { chain, step: i + 1, lower, upper, quotient_action }));
    }
    let p = chain.change_of_basis();
    let inv = p.inverse()?;
    let triangular_forms: Vec<Matrix> = gens.iter().map(|g| inv.mul(g).mul(&p)).collect();
    if let Some(bad) = triangular_forms.iter().position(|t| !t.is_upper_triangular()) {
        return Err(Error::TheoremViolation(format!("conjugated generator {bad} is not upper triangular")));
    }
    let inner_eigenvalues = triangular_forms.iter().map(Matrix::diagonal).collect();
    Ok(Triangularization::Triangularized(TriangularizationReport { chain, p, triangular_forms, inner_eigenvalues }))
}

/// The scalars `λ` with `A·x − x·λ ∈ M_{i-1}` for the chain's adapted
/// representatives `x`.
pub fn inner_eigenvalues(a: &Matrix, chain: &SubspaceChain) -> Result<Vec<Scalar>> {
    if a.domain() != chain.domain() || a.rows() != chain.n() || !a.is_square() {
        return Err(Error::DimensionMismatch("matrix and chain disagree".into()));
    }
    if chain.quotient_dims().iter().any(|&q| q != 1) || !chain.is_invariant_under(a) {
        return Err(Error::InvalidInput("chain does not triangularize the matrix".into()));
    }
    let p = chain.change_of_basis();
    Ok(p.inverse()?.mul(a).mul(&p).diagonal())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::companion;
    use crate::scalars::Poly;
    use alloc::vec;

    #[test]
    fn chain_examples() {
        let q = Domain::Rational;
        let gens = [Matrix::unit(&q, 3, 0, 1), Matrix::unit(&q, 3, 1, 2)];
        assert_eq!(composition_chain(&q, 3, &gens, 0).unwrap().dims(), vec![0, 1, 2, 3]);
        let comp = companion(&Poly::from_i64(&q, &[1, 0, 1])).unwrap();
        assert_eq!(composition_chain(&q, 2, &[comp], 0).unwrap().dims(), vec![0, 2]);
        let dg = Matrix::from_i64(&q, 2, 2, &[1, 0, 0, 2]);
        let c = composition_chain(&q, 2, &[dg], 0).unwrap();
        assert_eq!(c.members()[1], Subspace::span(&q, 2, &[vector::unit(&q, 2, 0)]));
    }

    #[test]
    fn triangularize_examples() {
        let q = Domain::Rational;
        let gens = [Matrix::unit(&q, 2, 0, 1), Matrix::unit(&q, 2, 0, 0)];
        let Triangularization::Triangularized(r) = triangularize(&q, 2, &gens, 0).unwrap() else {
            panic!("expected a triangularization");
        };
        assert_eq!(r.chain.members()[1], Subspace::span(&q, 2, &[vector::unit(&q, 2, 0)]));
        assert_eq!(r.inner_eigenvalues[1], vec![q.from_i64(1), q.from_i64(0)]);
        assert_eq!(r.inner_eigenvalues[0], vec![q.from_i64(0), q.from_i64(0)]);
        let comp = companion(&Poly::from_i64(&q, &[1, 0, 1])).unwrap();
        let Triangularization::Obstructed(o) = triangularize(&q, 2, &[comp], 0).unwrap() else {
            panic!("expected an obstruction");
        };
        assert_eq!((o.step, o.quotient_dim()), (1, 2));
        let z = triangularize(&q, 3, &[Matrix::zero(&q, 3, 3)], 0).unwrap();
        let Triangularization::Triangularized(r) = z else { panic!() };
        assert!(r.inner_eigenvalues[0].iter().all(|x| q.is_zero(x)));
    }

    #[test]
    fn inner_eigenvalue_examples() {
        let q = Domain::Rational;
        let std2 = SubspaceChain::standard(&q, 2);
        let dg = Matrix::from_i64(&q, 2, 2, &[3, 0, 0, 5]);
        assert_eq!(inner_eigenvalues(&dg, &std2).unwrap(), vec![q.from_i64(3), q.from_i64(5)]);
        assert_eq!(inner_eigenvalues(&Matrix::unit(&q, 2, 0, 1), &std2).unwrap(), vec![q.zero(), q.zero()]);
        let f3 = Domain::Prime(3);
        let a = Matrix::from_i64(&f3, 2, 2, &[1, 1, 0, 2]);
        let c = SubspaceChain::standard(&f3, 2);
        assert_eq!(inner_eigenvalues(&a, &c).unwrap(), vec![Scalar::Mod(1), Scalar::Mod(2)]);
        assert!(inner_eigenvalues(&Matrix::unit(&q, 2, 1, 0), &std2).is_err());
    }
}
