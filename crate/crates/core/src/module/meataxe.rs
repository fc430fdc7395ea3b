use alloc::format;
use alloc::vec::Vec;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::real::{realify, right_multiplication, unrealify_vector};
use super::{commutant, is_zero_collection, spin, zero_collection_witness};
use crate::algebra::{check_generators, AlgebraBasis};
use crate::error::{Error, Result};
use crate::linalg::{char_poly, min_poly, vector, Matrix, Subspace, Vector};
use crate::quaternion::Quaternion;
use crate::scalars::{poly_factor, poly_irreducible, Domain, Poly, PolyIrreducibility, RATIONAL_DEGREE_LIMIT};

/// Number of products and of random elements tried when looking for a
/// usable singular element.
pub const SINGULAR_SEARCH_BUDGET: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CertificateMethod {
    /// The generated algebra is all of `M_n` over the center.
    FullAlgebra,
    /// `n = 1` with a nonzero member.
    OneDimensional,
    /// `ker p(θ)` has dimension `deg p`; one of its vectors spins to the
    /// whole space and one vector of the transposed kernel spins to the
    /// whole dual space.
    Norton { trial: usize, element: Matrix, factor: Poly, kernel_vector: Vector, dual_vector: Vector },
    /// The commutant is a division algebra and the generated algebra is
    /// its full commutant.
    DoubleCentralizer { commutant_dim: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub method: CertificateMethod,
    pub seed: u64,
    /// Dimension over the center of the unital algebra that was analysed.
    pub algebra_dim: usize,
    /// The quaternion module was analysed as a rational module of four
    /// times the size.
    pub realified: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IrreducibilityVerdict {
    Irreducible(Certificate),
    /// A proper nonzero subspace invariant under every member; the zero
    /// subspace only for the zero collection in dimension one.
    Reducible(Subspace),
}

impl IrreducibilityVerdict {
    pub fn is_irreducible(&self) -> bool {
        matches!(self, IrreducibilityVerdict::Irreducible(_))
    }

    pub fn witness(&self) -> Option<&Subspace> {
        match self {
            IrreducibilityVerdict::Reducible(w) => Some(w),
            IrreducibilityVerdict::Irreducible(_) => None,
        }
    }
}

/// Decides whether `gens` has a common nontrivial invariant subspace.
pub fn is_irreducible(domain: &Domain, n: usize, gens: &[Matrix], seed: u64) -> Result<IrreducibilityVerdict> {
    check_generators(domain, n, gens)?;
    if n == 0 {
        return Err(Error::InvalidInput("irreducibility needs n >= 1".into()));
    }
    if is_zero_collection(gens) {
        return Ok(IrreducibilityVerdict::Reducible(zero_collection_witness(domain, n)));
    }
    if n == 1 {
        let algebra_dim = AlgebraBasis::close(domain, n, gens, true)?.dim();
        let cert = Certificate { method: CertificateMethod::OneDimensional, seed, algebra_dim, realified: false };
        return Ok(IrreducibilityVerdict::Irreducible(cert));
    }
    if *domain != Domain::Quaternion {
        return field_irreducible(domain, n, gens, seed);
    }
    let mut real: Vec<Matrix> = gens.iter().map(realify).collect();
    real.push(right_multiplication(n, &Quaternion::i()));
    real.push(right_multiplication(n, &Quaternion::j()));
    Ok(match field_irreducible(&Domain::Rational, 4 * n, &real, seed)? {
        IrreducibilityVerdict::Irreducible(mut cert) => {
            cert.realified = true;
            IrreducibilityVerdict::Irreducible(cert)
        }
        IrreducibilityVerdict::Reducible(w) => {
            let vs: Vec<Vector> = w.basis().iter().map(|v| unrealify_vector(v)).collect();
            let s = Subspace::span(domain, n, &vs);
            debug_assert_eq!(4 * s.dim(), w.dim());
            IrreducibilityVerdict::Reducible(s)
        }
    })
}

/// Elements tried in turn: basis elements, products of basis pairs, then
/// seeded random combinations.
fn candidates<'a>(b: &'a AlgebraBasis, seed: u64) -> impl Iterator<Item = Matrix> + 'a {
    let basis = b.basis();
    let k = basis.len();
    let products = (0..k * k).take(SINGULAR_SEARCH_BUDGET).map(move |t| basis[t / k].mul(&basis[t % k]));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let random = (0..SINGULAR_SEARCH_BUDGET).map(move |_| b.random_element(&mut rng));
    basis.iter().cloned().chain(products).chain(random)
}

fn annihilator(d: &Domain, n: usize, dual: &Subspace) -> Subspace {
    let rows = Matrix::from_columns(d, n, dual.basis()).transpose();
    rows.kernel()
}

fn field_irreducible(d: &Domain, n: usize, gens: &[Matrix], seed: u64) -> Result<IrreducibilityVerdict> {
    let b = AlgebraBasis::close(d, n, gens, true)?;
    let cert = |method| Certificate { method, seed, algebra_dim: b.dim(), realified: false };
    if b.dim() == n * n {
        return Ok(IrreducibilityVerdict::Irreducible(cert(CertificateMethod::FullAlgebra)));
    }
    for i in 0..n {
        let s = spin(d, gens, &vector::unit(d, n, i));
        if !s.is_full() {
            return Ok(IrreducibilityVerdict::Reducible(s));
        }
    }
    let transposed: Vec<Matrix> = gens.iter().map(Matrix::transpose).collect();
    // characteristic polynomials of degree n cannot be factored over Q here
    let factorable = d.is_finite() || n <= RATIONAL_DEGREE_LIMIT;
    for (trial, theta) in candidates(&b, seed).enumerate().take_while(|_| factorable) {
        let Some(factors) = poly_factor(&char_poly(&theta)?)? else {
            continue;
        };
        for (p, _) in factors {
            let a = theta.eval_poly(&p);
            let ker = a.kernel();
            if Some(ker.dim()) != p.degree() {
                continue;
            }
            let v = ker.basis()[0].clone();
            let s = spin(d, gens, &v);
            if !s.is_full() {
                return Ok(IrreducibilityVerdict::Reducible(s));
            }
            let w = a.transpose().kernel().basis()[0].clone();
            let sd = spin(d, &transposed, &w);
            if !sd.is_full() {
                return Ok(IrreducibilityVerdict::Reducible(annihilator(d, n, &sd)));
            }
            let method =
                CertificateMethod::Norton { trial, element: theta, factor: p, kernel_vector: v, dual_vector: w };
            return Ok(IrreducibilityVerdict::Irreducible(cert(method)));
        }
    }
    double_centralizer(d, n, &b, gens, seed)
}

/// Fallback when no element passes the kernel-dimension condition: a
/// singular element of the commutant gives a witness, and a division
/// commutant whose commutant is the algebra proves irreducibility.
fn double_centralizer(d: &Domain, n: usize, b: &AlgebraBasis, gens: &[Matrix], seed: u64) -> Result<IrreducibilityVerdict> {
    let c = commutant(d, n, gens)?;
    for x in candidates(&c, seed ^ 0x5eed) {
        if !x.is_zero() && x.rank() < n {
            return Ok(IrreducibilityVerdict::Reducible(x.kernel()));
        }
    }
    let cc = commutant(d, n, c.basis())?;
    if cc.dim() == b.dim() && certify_division(&c, seed)? {
        let method = CertificateMethod::DoubleCentralizer { commutant_dim: c.dim() };
        let cert = Certificate { method, seed, algebra_dim: b.dim(), realified: false };
        return Ok(IrreducibilityVerdict::Irreducible(cert));
    }
    Err(Error::Inconclusive(format!(
        "no usable singular element in {} trials and the commutant (dim {}) could not be certified",
        b.dim() + 2 * SINGULAR_SEARCH_BUDGET,
        c.dim()
    )))
}

/// Exact sufficient conditions for a matrix algebra to be a division
/// algebra: a field generated by one element, or a definite quaternion
/// algebra over Q.
fn certify_division(c: &AlgebraBasis, seed: u64) -> Result<bool> {
    let basis = c.basis();
    let commutative = basis.iter().all(|x| basis.iter().all(|y| x.commutes_with(y)));
    if commutative {
        for x in candidates(c, seed) {
            let m = min_poly(&x);
            if m.degree() == Some(c.dim()) {
                return Ok(poly_irreducible(&m)? == PolyIrreducibility::Irreducible);
            }
        }
        return Ok(false);
    }
    if *c.domain() != Domain::Rational || c.dim() != 4 {
        return Ok(false);
    }
    let q = Domain::Rational;
    let n = c.n();
    let Some(x) = basis.iter().find(|x| !x.is_scalar()) else {
        return Ok(false);
    };
    let m = min_poly(x);
    if m.degree() != Some(2) {
        return Ok(false);
    }
    let half = q.mul(&m.coeff(1), &q.inv(&q.from_i64(2)).unwrap());
    // X' = X + m₁/2 squares to a scalar
    let x1 = x.add(&Matrix::scalar(&q, n, &half));
    let sq = x1.mul(&x1);
    let Some(y) = basis.iter().map(|z| x1.mul(z).sub(&z.mul(&x1))).find(|y| !y.is_zero()) else {
        return Ok(false);
    };
    let y2 = y.mul(&y);
    if !sq.is_scalar() || !y2.is_scalar() {
        return Ok(false);
    }
    let negative = |m: &Matrix| m.get(0, 0).is_negative_rational();
    let span = AlgebraBasis::span(&q, n, &[Matrix::identity(&q, n), x1.clone(), y.clone(), x1.mul(&y)])?;
    Ok(negative(&sq) && negative(&y2) && span.dim() == 4)
}
