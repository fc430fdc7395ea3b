use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::AlgebraBasis;
use crate::error::{Error, Result};
use crate::linalg::{companion, direct_sum, min_poly, Matrix};
use crate::module::{
    commutant, hyperinvariant_check, is_absolutely_irreducible, is_irreducible, AbsoluteIrreducibility, Hyperinvariance,
    IrreducibilityVerdict,
};
use crate::scalars::{find_irreducible_poly, is_k_closed, Domain, KClosedness, Poly};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub n: usize,
    pub k: usize,
    /// Irreducible of degree `k`.
    pub poly: Poly,
    /// `C ⊕ … ⊕ C` with `n/k` copies of the companion matrix of `poly`.
    pub block_sum: Matrix,
    /// The commutant of `block_sum`, a copy of `M_{n/k}(F[x]/(poly))`.
    pub algebra: AlgebraBasis,
    pub irreducibility: IrreducibilityVerdict,
    pub expected_dim: usize,
}

impl Counterexample {
    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }
}

/// The proper irreducible algebra `{C ⊕ … ⊕ C}'` built from an irreducible
/// polynomial of degree `k`, with its dimension `(n/k)²·k`, irreducibility
/// and the minimal polynomial of the block sum all checked.
pub fn counterexample_algebra(domain: &Domain, n: usize, k: usize) -> Result<Counterexample> {
    if !domain.is_field() {
        return Err(Error::NotAField(domain.descriptor()));
    }
    if k < 2 || n == 0 || !n.is_multiple_of(k) {
        return Err(Error::InvalidInput(format!("need 1 < k dividing n, got k={k}, n={n}")));
    }
    let poly = find_irreducible_poly(domain, k)?;
    let c = companion(&poly)?;
    let block_sum = direct_sum(domain, &vec![c; n / k])?;
    if min_poly(&block_sum) != poly {
        return Err(Error::TheoremViolation("block sum has the wrong minimal polynomial".into()));
    }
    let comm = commutant(domain, n, core::slice::from_ref(&block_sum))?;
    let algebra = AlgebraBasis::close(domain, n, comm.basis(), true)?;
    let m = n / k;
    let expected_dim = m * m * k;
    if algebra.dim() != expected_dim {
        return Err(Error::TheoremViolation(format!(
            "commutant has dimension {} instead of {expected_dim}",
            algebra.dim()
        )));
    }
    let irreducibility = is_irreducible(domain, n, algebra.basis(), 0)?;
    if !irreducibility.is_irreducible() {
        return Err(Error::TheoremViolation("counterexample algebra is reducible".into()));
    }
    Ok(Counterexample { n, k, poly, block_sum, algebra, irreducibility, expected_dim })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldAudit {
    pub n: usize,
    /// One entry per divisor `k > 1` of `n`.
    pub k_closedness: Vec<KClosedness>,
    /// Truth values of the five equivalent conditions, all computed.
    pub conditions: [bool; 5],
    /// Built from the smallest `k` at which closedness fails.
    pub counterexample: Option<Counterexample>,
    pub absolute: Option<AbsoluteIrreducibility>,
    /// Dimension of the commutant of the counterexample algebra.
    pub commutant_dim: Option<usize>,
    pub hyperinvariance: Option<Hyperinvariance>,
}

impl FieldAudit {
    pub fn consistent(&self) -> bool {
        self.conditions.iter().all(|&c| c == self.conditions[0])
    }
}

/// Evaluates the five conditions on `(F, n)`. When closedness fails for
/// some divisor, the counterexample algebra refutes the first four: it is
/// irreducible but proper, not absolutely irreducible, has a nonscalar
/// commutant, and its block sum generator has no nontrivial
/// hyperinvariant subspace.
pub fn burnside_field_audit(domain: &Domain, n: usize, seed: u64) -> Result<FieldAudit> {
    if !domain.is_field() {
        return Err(Error::NotAField(domain.descriptor()));
    }
    if n == 0 {
        return Err(Error::InvalidInput("n must be positive".into()));
    }
    let k_closedness = (2..=n).filter(|k| n.is_multiple_of(*k)).map(|k| is_k_closed(domain, k)).collect::<Result<Vec<_>>>()?;
    let closed = k_closedness.iter().all(|c| c.closed);
    let mut audit = FieldAudit {
        n,
        k_closedness,
        conditions: [closed; 5],
        counterexample: None,
        absolute: None,
        commutant_dim: None,
        hyperinvariance: None,
    };
    let Some(k) = audit.k_closedness.iter().find(|c| !c.closed).map(|c| c.k) else {
        // n = 1: every condition holds trivially
        return Ok(audit);
    };
    let cx = counterexample_algebra(domain, n, k)?;
    let basis = cx.algebra.basis().to_vec();
    let absolute = is_absolutely_irreducible(domain, n, &basis, seed)?;
    let commutant_dim = commutant(domain, n, &basis)?.dim();
    let hyper = hyperinvariant_check(&cx.block_sum, seed)?;
    audit.conditions = [
        !(cx.irreducibility.is_irreducible() && cx.dim() < n * n),
        !(absolute.irreducible && !absolute.absolutely_irreducible),
        commutant_dim <= 1,
        cx.block_sum.is_scalar() || hyper.has_nontrivial,
        closed,
    ];
    audit.counterexample = Some(cx);
    audit.absolute = Some(absolute);
    audit.commutant_dim = Some(commutant_dim);
    audit.hyperinvariance = Some(hyper);
    if !audit.consistent() {
        return Err(Error::TheoremViolation(format!("conditions disagree: {:?}", audit.conditions)));
    }
    Ok(audit)
}
