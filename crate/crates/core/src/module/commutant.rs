use alloc::format;
use alloc::vec::Vec;

use super::{is_irreducible, is_zero_collection};
use crate::algebra::{check_generators, AlgebraBasis};
use crate::error::{Error, Result};
use crate::linalg::{min_poly, vector, Matrix, Subspace};
use crate::scalars::{poly_irreducible, Domain, Poly, PolyIrreducibility};

/// All matrices commuting with every generator, as a unital algebra over
/// the center. Each generator cuts the current solution space down.
pub fn commutant(domain: &Domain, n: usize, gens: &[Matrix]) -> Result<AlgebraBasis> {
    check_generators(domain, n, gens)?;
    let len = n * n * domain.center_dim();
    let f = domain.center();
    let mut sols: Vec<Matrix> =
        (0..len).map(|u| Matrix::from_center_flat(domain, n, n, &vector::unit(&f, len, u))).collect();
    for g in gens {
        if sols.is_empty() {
            break;
        }
        let cols: Vec<_> = sols.iter().map(|x| x.mul(g).sub(&g.mul(x)).center_flat()).collect();
        let system = Matrix::from_columns(&f, len, &cols);
        sols = system
            .kernel()
            .basis()
            .iter()
            .map(|c| {
                sols.iter().zip(c).fold(Matrix::zero(domain, n, n), |acc, (x, k)| {
                    if f.is_zero(k) {
                        acc
                    } else {
                        acc.add(&x.scale(&domain.embed_center(k)))
                    }
                })
            })
            .collect();
    }
    let mut a = AlgebraBasis::span(domain, n, &sols)?;
    a.set_unital(true);
    Ok(a)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hyperinvariance {
    /// A proper nonzero subspace invariant under `A` and its commutant exists.
    pub has_nontrivial: bool,
    pub min_poly: Poly,
    pub min_poly_irreducible: bool,
    pub commutant_dim: usize,
    /// `ker f(A)` for a proper divisor `f` of the minimal polynomial.
    pub witness: Option<Subspace>,
}

/// Joint invariant subspaces of `{A} ∪ {A}'` against irreducibility of the
/// minimal polynomial; disagreement is reported as an internal violation.
pub fn hyperinvariant_check(a: &Matrix, seed: u64) -> Result<Hyperinvariance> {
    let d = a.domain();
    if !d.is_field() {
        return Err(Error::NotAField(d.descriptor()));
    }
    let n = a.rows();
    if !a.is_square() || n < 2 {
        return Err(Error::InvalidInput("hyperinvariant check needs a square matrix with n > 1".into()));
    }
    let comm = commutant(d, n, core::slice::from_ref(a))?;
    let mut gens = alloc::vec![a.clone()];
    gens.extend(comm.basis().iter().cloned());
    let joint = is_irreducible(d, n, &gens, seed)?;
    let m = min_poly(a);
    let divisor = match poly_irreducible(&m)? {
        PolyIrreducibility::Irreducible => None,
        PolyIrreducibility::Reducible(f) => Some(f),
        PolyIrreducibility::Unknown => {
            return Err(Error::Inconclusive(format!("irreducibility of the minimal polynomial {m}")))
        }
    };
    let min_poly_irreducible = divisor.is_none();
    if joint.is_irreducible() != min_poly_irreducible {
        return Err(Error::TheoremViolation(format!(
            "joint irreducibility {} but minimal polynomial {m} irreducible = {min_poly_irreducible}",
            joint.is_irreducible()
        )));
    }
    let witness = divisor.map(|f| a.eval_poly(&f).kernel());
    if let Some(w) = &witness {
        if !w.is_proper_nonzero() || !gens.iter().all(|g| w.is_invariant_under(g)) {
            return Err(Error::TheoremViolation("kernel of a proper divisor is not hyperinvariant".into()));
        }
    }
    if min_poly_irreducible {
        let r = m.degree().unwrap();
        if !n.is_multiple_of(r) || comm.dim() != (n / r) * (n / r) * r {
            return Err(Error::TheoremViolation(format!(
                "commutant dimension {} for n = {n}, irreducible minimal polynomial of degree {r}",
                comm.dim()
            )));
        }
    }
    Ok(Hyperinvariance {
        has_nontrivial: !min_poly_irreducible,
        min_poly: m,
        min_poly_irreducible,
        commutant_dim: comm.dim(),
        witness,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbsoluteIrreducibility {
    pub absolutely_irreducible: bool,
    pub closure_dim: usize,
    pub commutant_dim: usize,
    pub irreducible: bool,
}

/// Absolutely irreducible iff the unital closure is all of `M_n(F)`;
/// cross-checked against irreducibility with a scalar commutant.
pub fn is_absolutely_irreducible(domain: &Domain, n: usize, gens: &[Matrix], seed: u64) -> Result<AbsoluteIrreducibility> {
    if !domain.is_field() {
        return Err(Error::NotAField(domain.descriptor()));
    }
    let closure_dim = AlgebraBasis::close(domain, n, gens, true)?.dim();
    let commutant_dim = commutant(domain, n, gens)?.dim();
    let irreducible = is_irreducible(domain, n, gens, seed)?.is_irreducible();
    let absolutely_irreducible = !is_zero_collection(gens) && closure_dim == n * n;
    if absolutely_irreducible != (irreducible && commutant_dim == 1) {
        return Err(Error::TheoremViolation(format!(
            "closure dim {closure_dim}, irreducible {irreducible}, commutant dim {commutant_dim}"
        )));
    }
    Ok(AbsoluteIrreducibility { absolutely_irreducible, closure_dim, commutant_dim, irreducible })
}

/// The operators `T·S` restricted to `range(T)`, in the echelon basis of the
/// range.
pub fn compress(t: &Matrix, set: &[Matrix]) -> Result<Vec<Matrix>> {
    if t.is_zero() {
        return Err(Error::InvalidInput("compression by the zero matrix".into()));
    }
    let d = t.domain();
    check_generators(d, t.rows(), set)?;
    let range = t.image();
    let k = range.dim();
    set.iter()
        .map(|s| {
            let op = t.mul(s);
            let cols: Vec<_> = range
                .basis()
                .iter()
                .map(|r| range.coordinates(&op.mul_vec(r)).expect("T·S maps into range(T)"))
                .collect();
            Ok(Matrix::from_columns(d, k, &cols))
        })
        .collect()
}
