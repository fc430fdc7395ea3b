use alloc::format;
use alloc::vec::Vec;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::Status;
use crate::algebra::{check_generators, AlgebraBasis};
use crate::error::{Error, Result};
use crate::linalg::{f_triangularizable_single, vector, Matrix, SingleTriangularizability, Subspace, Vector};
use crate::module::{is_irreducible, IrreducibilityVerdict, SINGULAR_SEARCH_BUDGET};
use crate::scalars::{Domain, Scalar};

/// Cap on the pairwise products scanned by the rank search.
const PRODUCT_SCAN_CAP: usize = 1024;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RankOneSource {
    Basis(usize),
    Product(usize, usize),
    Random(usize),
    /// `T·B·T` from a lower-rank descent.
    Descent,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankOne {
    pub element: Matrix,
    pub source: RankOneSource,
    /// Nonzero ranks met before a rank-one element turned up, smallest first.
    pub ranks_seen: Vec<usize>,
}

/// A rank-one element: basis elements, then products of basis pairs,
/// then seeded random combinations, then `T·B·T` descent from the lowest
/// rank met.
pub fn find_rank_one(a: &AlgebraBasis, seed: u64) -> Result<RankOne> {
    let basis = a.basis();
    let k = basis.len();
    let mut best: Option<(usize, Matrix)> = None;
    let mut ranks_seen: Vec<usize> = Vec::new();
    let mut consider = |m: Matrix, source: RankOneSource, best: &mut Option<(usize, Matrix)>| {
        if m.is_zero() {
            return None;
        }
        let r = m.rank();
        if !ranks_seen.contains(&r) {
            ranks_seen.push(r);
        }
        if r == 1 {
            return Some((m, source));
        }
        if best.as_ref().is_none_or(|(b, _)| r < *b) {
            *best = Some((r, m));
        }
        None
    };
    let mut found = None;
    for (i, b) in basis.iter().enumerate() {
        found = consider(b.clone(), RankOneSource::Basis(i), &mut best);
        if found.is_some() {
            break;
        }
    }
    if found.is_none() {
        for t in 0..(k * k).min(PRODUCT_SCAN_CAP) {
            let (i, j) = (t / k, t % k);
            found = consider(basis[i].mul(&basis[j]), RankOneSource::Product(i, j), &mut best);
            if found.is_some() {
                break;
            }
        }
    }
    if found.is_none() {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for t in 0..SINGULAR_SEARCH_BUDGET {
            found = consider(a.random_element(&mut rng), RankOneSource::Random(t), &mut best);
            if found.is_some() {
                break;
            }
        }
    }
    while found.is_none() {
        let Some((r, t)) = best.clone() else { break };
        let improved = basis.iter().map(|b| t.mul(b).mul(&t)).find(|m| !m.is_zero() && m.rank() < r);
        match improved {
            Some(m) => found = consider(m, RankOneSource::Descent, &mut best),
            None => break,
        }
    }
    ranks_seen.sort_unstable();
    match found {
        Some((element, source)) => Ok(RankOne { element, source, ranks_seen }),
        None => match best {
            Some((r, _)) => Err(Error::RankOneNotFound { min_rank: r }),
            None => Err(Error::HypothesisViolation("the algebra is zero".into())),
        },
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Idempotent {
    /// `E = c⁻¹·T·B`, a rank-one idempotent of the algebra.
    pub e: Matrix,
    /// Index of `B` in the algebra basis.
    pub b_index: usize,
    /// The central scalar with `T·B·T = c·T`.
    pub c: Scalar,
    /// Columns: a range vector of `E` followed by a kernel basis, so
    /// `P⁻¹·E·P = E₁₁`.
    pub p: Matrix,
}

/// From a rank-one `T`, a basis element `B` with `T·B·T = c·T` for a
/// nonzero central `c`, and the idempotent `E = c⁻¹·T·B`.
pub fn rank_one_idempotent(a: &AlgebraBasis, t: &Matrix) -> Result<Idempotent> {
    let d = a.domain();
    let n = a.n();
    if t.rank() != 1 {
        return Err(Error::InvalidInput("rank_one_idempotent needs a rank-one element".into()));
    }
    let (pi, pj) = (0..n * n)
        .map(|u| (u / n, u % n))
        .find(|&(i, j)| !d.is_zero(t.get(i, j)))
        .unwrap();
    let t_inv = d.inv(t.get(pi, pj)).unwrap();
    for (idx, b) in a.basis().iter().enumerate() {
        let tbt = t.mul(b).mul(t);
        if tbt.is_zero() {
            continue;
        }
        let c = d.mul(tbt.get(pi, pj), &t_inv);
        if d.is_zero(&c) || !d.is_central(&c) || t.scale(&c) != tbt {
            continue;
        }
        let e = t.mul(b).scale(&d.inv(&c).unwrap());
        debug_assert!(e.mul(&e) == e);
        let mut cols: Vec<Vector> = e.image().basis().to_vec();
        cols.extend(e.kernel().basis().iter().cloned());
        let p = Matrix::from_columns(d, n, &cols);
        return Ok(Idempotent { e, b_index: idx, c, p });
    }
    Err(Error::HypothesisViolation(
        "no basis element B with T·B·T a nonzero central multiple of T".into(),
    ))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixUnits {
    /// `P⁻¹·e_ij·P = E_ij` for every unit.
    pub p: Matrix,
    /// `e_ij` in the original coordinates, row-major; all lie in the algebra.
    pub units: Vec<Matrix>,
    pub idempotent: Idempotent,
    /// Inverse of the central Gram matrix `y·C_k·B_l·x` used to normalize
    /// the columns `B_l·E` against the rows `E·C_k`.
    pub normalization: Matrix,
    /// Basis of `P⁻¹·A·P`.
    pub conjugated_basis: Vec<Matrix>,
}

impl MatrixUnits {
    pub fn n(&self) -> usize {
        self.p.rows()
    }

    pub fn unit(&self, i: usize, j: usize) -> &Matrix {
        &self.units[i * self.n() + j]
    }
}

/// Builds `E_ij` inside the algebra from a rank-one idempotent `E = x·y`:
/// columns `B_l·E` whose vectors `B_l·x` form a basis, rows `E·C_k` whose
/// functionals `y·C_k` form a basis, and the central Gram matrix pairing
/// them.
pub fn construct_matrix_units(a: &AlgebraBasis, seed: u64) -> Result<MatrixUnits> {
    let d = a.domain().clone();
    let f = d.center();
    let n = a.n();
    let t = find_rank_one(a, seed)?.element;
    let idem = rank_one_idempotent(a, &t)?;
    let e = &idem.e;
    // E = x·y with x a column of E
    let j0 = (0..n).find(|&j| !vector::is_zero(&d, &e.column(j))).unwrap();
    let x = e.column(j0);
    let i0 = (0..n).find(|&i| !d.is_zero(&x[i])).unwrap();
    let xi_inv = d.inv(&x[i0]).unwrap();
    let y = Matrix::new(&d, 1, n, (0..n).map(|l| d.mul(&xi_inv, e.get(i0, l))).collect())?;
    debug_assert!(Matrix::from_columns(&d, n, core::slice::from_ref(&x)).mul(&y) == *e);

    let mut col_space = Subspace::zero(&d, n);
    let mut cols: Vec<Matrix> = Vec::new();
    let mut row_space = Subspace::zero(&d, n);
    let mut row_elems: Vec<Matrix> = Vec::new();
    for b in a.basis() {
        if cols.len() < n && col_space.insert(&b.mul_vec(&x)) {
            cols.push(b.mul(e));
        }
        if row_elems.len() < n {
            let w = y.mul(b);
            if row_space.insert(&w.conj_transpose().column(0)) {
                row_elems.push(e.mul(b));
            }
        }
    }
    if cols.len() < n || row_elems.len() < n {
        return Err(Error::HypothesisViolation(format!(
            "the algebra moves x through a space of dimension {} < {n}",
            cols.len().min(row_elems.len())
        )));
    }
    let xm = Matrix::from_columns(&d, n, core::slice::from_ref(&x));
    let mut gram = Matrix::zero(&f, n, n);
    for (k, g) in row_elems.iter().enumerate() {
        for (l, c) in cols.iter().enumerate() {
            let m = y.mul(g).mul(c).mul(&xm);
            let s = d.to_center(m.get(0, 0)).ok_or_else(|| {
                Error::HypothesisViolation(format!("pairing {} is not central", m.get(0, 0)))
            })?;
            gram.set(k, l, s);
        }
    }
    let normalization = gram.inverse().map_err(|_| Error::TheoremViolation("singular Gram matrix".into()))?;
    let normalized: Vec<Matrix> = (0..n)
        .map(|i| {
            cols.iter().enumerate().fold(Matrix::zero(&d, n, n), |acc, (l, c)| {
                acc.add(&c.scale(&d.embed_center(normalization.get(l, i))))
            })
        })
        .collect();
    let units: Vec<Matrix> = (0..n * n).map(|u| normalized[u / n].mul(&row_elems[u % n])).collect();
    let pcols: Vec<Vector> = normalized.iter().map(|fi| fi.mul_vec(&x)).collect();
    let p = Matrix::from_columns(&d, n, &pcols);
    let p_inv = p.inverse().map_err(|_| Error::TheoremViolation("unit frame is singular".into()))?;
    let conjugated_basis: Vec<Matrix> = a.basis().iter().map(|b| p_inv.mul(b).mul(&p)).collect();
    let mu = MatrixUnits { p, units, idempotent: idem, normalization, conjugated_basis };
    verify_units(a, &mu, &p_inv)?;
    Ok(mu)
}

fn verify_units(a: &AlgebraBasis, mu: &MatrixUnits, p_inv: &Matrix) -> Result<()> {
    let d = a.domain();
    let n = a.n();
    let mut sum = Matrix::zero(d, n, n);
    for i in 0..n {
        for j in 0..n {
            let u = mu.unit(i, j);
            if !a.contains(u) {
                return Err(Error::TheoremViolation(format!("unit ({i},{j}) is outside the algebra")));
            }
            if p_inv.mul(u).mul(&mu.p) != Matrix::unit(d, n, i, j) {
                return Err(Error::TheoremViolation(format!("unit ({i},{j}) is not conjugate to E_ij")));
            }
            for k in 0..n {
                for l in 0..n {
                    let want = if j == k { mu.unit(i, l).clone() } else { Matrix::zero(d, n, n) };
                    if u.mul(mu.unit(k, l)) != want {
                        return Err(Error::TheoremViolation(format!("relation e{i}{j}·e{k}{l} fails")));
                    }
                }
            }
        }
        sum = sum.add(mu.unit(i, i));
    }
    if !sum.is_identity() {
        return Err(Error::TheoremViolation("diagonal units do not sum to I".into()));
    }
    if let Some(bad) = mu.conjugated_basis.iter().position(|m| m.to_center().is_none()) {
        return Err(Error::HypothesisViolation(format!(
            "conjugated basis element {bad} has entries outside the center"
        )));
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BurnsideReport {
    pub status: Status,
    pub n: usize,
    pub closure_dim: usize,
    /// `n²`, the dimension of `M_n(F)` over `F`.
    pub target_dim: usize,
    /// Triangularizability over the center of each closure basis element.
    pub hypotheses: Vec<SingleTriangularizability>,
    pub hypotheses_hold: bool,
    pub irreducibility: IrreducibilityVerdict,
    pub rank_one: Option<RankOne>,
    pub units: Option<MatrixUnits>,
    pub seed: u64,
}

/// Checks the hypotheses on every closure basis element, decides
/// irreducibility, and when both hold verifies `A = M_n(F)` (after a
/// similarity over the quaternions) through explicit matrix units.
pub fn burnside_certify(domain: &Domain, n: usize, gens: &[Matrix], unital: bool, seed: u64) -> Result<BurnsideReport> {
    check_generators(domain, n, gens)?;
    let a = AlgebraBasis::close(domain, n, gens, unital)?;
    let hypotheses =
        a.basis().iter().map(f_triangularizable_single).collect::<Result<Vec<_>>>()?;
    let hypotheses_hold = hypotheses.iter().all(|h| h.triangularizable);
    let members: Vec<Matrix> = if a.dim() == 0 { gens.to_vec() } else { a.basis().to_vec() };
    let irreducibility = is_irreducible(domain, n, &members, seed)?;
    let mut report = BurnsideReport {
        status: Status::Inapplicable,
        n,
        closure_dim: a.dim(),
        target_dim: n * n,
        hypotheses,
        hypotheses_hold,
        irreducibility,
        rank_one: None,
        units: None,
        seed,
    };
    if !(hypotheses_hold && report.irreducibility.is_irreducible()) {
        return Ok(report);
    }
    if a.dim() != n * n {
        return Err(Error::TheoremViolation(format!(
            "irreducible algebra of triangularizable matrices has dimension {} != {}",
            a.dim(),
            n * n
        )));
    }
    report.rank_one = Some(find_rank_one(&a, seed)?);
    report.units = Some(construct_matrix_units(&a, seed)?);
    report.status = Status::Certified;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::companion;
    use crate::scalars::Poly;
    use crate::Quaternion;

    fn units(d: &Domain, n: usize) -> Vec<Matrix> {
        (0..n * n).map(|t| Matrix::unit(d, n, t / n, t % n)).collect()
    }

    #[test]
    fn rank_one_search() {
        let f2 = Domain::Prime(2);
        let full = AlgebraBasis::span(&f2, 2, &units(&f2, 2)).unwrap();
        assert_eq!(find_rank_one(&full, 0).unwrap().element.rank(), 1);
        let q = Domain::Rational;
        let a = AlgebraBasis::close(&q, 2, &[Matrix::unit(&q, 2, 0, 1), Matrix::unit(&q, 2, 1, 0)], false).unwrap();
        assert_eq!(find_rank_one(&a, 0).unwrap().element.rank(), 1);
        let scalars = AlgebraBasis::span(&q, 2, &[Matrix::identity(&q, 2)]).unwrap();
        assert_eq!(find_rank_one(&scalars, 0), Err(Error::RankOneNotFound { min_rank: 2 }));
    }

    #[test]
    fn idempotent_examples() {
        let q = Domain::Rational;
        let full = AlgebraBasis::span(&q, 2, &units(&q, 2)).unwrap();
        let e12 = Matrix::unit(&q, 2, 0, 1);
        let idem = rank_one_idempotent(&full, &e12).unwrap();
        assert_eq!(idem.e, Matrix::unit(&q, 2, 0, 0));
        assert_eq!(idem.c, q.one());
        let e11 = Matrix::unit(&q, 2, 0, 0);
        let idem = rank_one_idempotent(&full, &e11).unwrap();
        assert_eq!((idem.e.clone(), idem.p.clone()), (e11, Matrix::identity(&q, 2)));
        let p_inv = idem.p.inverse().unwrap();
        assert_eq!(p_inv.mul(&idem.e).mul(&idem.p), Matrix::unit(&q, 2, 0, 0));
        let scalars = AlgebraBasis::span(&q, 2, &[Matrix::identity(&q, 2)]).unwrap();
        assert!(rank_one_idempotent(&scalars, &Matrix::identity(&q, 2)).is_err());
    }

    #[test]
    fn units_over_fields() {
        let f3 = Domain::Prime(3);
        let full = AlgebraBasis::span(&f3, 2, &units(&f3, 2)).unwrap();
        let mu = construct_matrix_units(&full, 0).unwrap();
        assert_eq!(AlgebraBasis::span(&f3, 2, &mu.units).unwrap().dim(), 4);
        let q = Domain::Rational;
        let one = AlgebraBasis::span(&q, 1, &[Matrix::from_i64(&q, 1, 1, &[5])]).unwrap();
        let mu = construct_matrix_units(&one, 0).unwrap();
        assert_eq!(mu.p, Matrix::identity(&q, 1));
        // a conjugated copy of M_3(Q)
        let p = Matrix::from_i64(&q, 3, 3, &[1, 2, 0, 0, 1, 3, 1, 0, 1]);
        let conj = AlgebraBasis::span(&q, 3, &units(&q, 3)).unwrap().conjugated(&p).unwrap();
        assert!(construct_matrix_units(&conj, 0).is_ok());
    }

    #[test]
    fn units_over_quaternions() {
        let h = Domain::Quaternion;
        let gens = [Matrix::unit(&h, 2, 0, 1), Matrix::unit(&h, 2, 1, 0)];
        let a = AlgebraBasis::close(&h, 2, &gens, false).unwrap();
        assert_eq!(a.dim(), 4);
        let mu = construct_matrix_units(&a, 0).unwrap();
        assert!(mu.conjugated_basis.iter().all(|m| m.to_center().is_some()));
        // a quaternion conjugate of the same algebra
        let s = |x: Quaternion| Scalar::Quat(x);
        let p = Matrix::diag(&h, &[s(Quaternion::from_ints(1, 1, 0, 0)), s(Quaternion::j())]);
        let b = a.conjugated(&p).unwrap();
        assert!(b.basis().iter().any(|m| m.to_center().is_none()));
        let mu = construct_matrix_units(&b, 0).unwrap();
        assert!(mu.conjugated_basis.iter().all(|m| m.to_center().is_some()));
    }

    #[test]
    fn burnside_examples() {
        let f2 = Domain::Prime(2);
        let r = burnside_certify(&f2, 2, &[Matrix::unit(&f2, 2, 0, 1), Matrix::unit(&f2, 2, 1, 0)], false, 0).unwrap();
        assert_eq!((r.status, r.closure_dim), (Status::Certified, 4));
        let q = Domain::Rational;
        let c = companion(&Poly::from_i64(&q, &[1, 0, 1])).unwrap();
        let r = burnside_certify(&q, 2, &[c], false, 0).unwrap();
        assert_eq!((r.status, r.hypotheses_hold, r.closure_dim), (Status::Inapplicable, false, 2));
        let r = burnside_certify(&q, 2, &[Matrix::unit(&q, 2, 0, 0)], false, 0).unwrap();
        assert_eq!(r.status, Status::Inapplicable);
        assert_eq!(r.irreducibility.witness().unwrap().dim(), 1);
    }
}
