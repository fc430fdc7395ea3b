use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::Status;
use crate::algebra::{ideal_close, semigroup_close, AlgebraBasis, SemigroupSet};
use crate::error::{Error, Result};
use crate::linalg::{is_nilpotent, Matrix};
use crate::module::is_irreducible;
use crate::scalars::Domain;

pub const DEFAULT_TRIALS: usize = 100;

/// Redraws allowed when a random algebra element comes out zero.
const NONZERO_REDRAWS: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IdealCondition {
    /// `J·A·J` lies in the span of its nilpotent members.
    SandwichSpan,
    /// `A·J` lies in the span of its nilpotent members.
    RightSpan,
    /// `J·A` lies in the span of its nilpotent members.
    LeftSpan,
    /// `(J₁·A·J₂)ⁿ = 0` for all `J₁, J₂`.
    SandwichPower,
    /// `(A·J)ⁿ = 0` for all `J`.
    RightPower,
    /// `(J·A)ⁿ = 0` for all `J`.
    LeftPower,
}

impl IdealCondition {
    pub const ALL: [IdealCondition; 6] = [
        IdealCondition::SandwichSpan,
        IdealCondition::RightSpan,
        IdealCondition::LeftSpan,
        IdealCondition::SandwichPower,
        IdealCondition::RightPower,
        IdealCondition::LeftPower,
    ];

    pub fn label(&self) -> &'static str {
        match self {
            IdealCondition::SandwichSpan => "i",
            IdealCondition::RightSpan => "ii",
            IdealCondition::LeftSpan => "iii",
            IdealCondition::SandwichPower => "iv",
            IdealCondition::RightPower => "v",
            IdealCondition::LeftPower => "vi",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionCheck {
    pub condition: IdealCondition,
    pub holds: bool,
    /// An offending product when the condition fails: outside the nilpotent
    /// span, or with nonzero `n`-th power.
    pub witness: Option<Matrix>,
}

/// Evaluates all six conditions for one `A` against the ideal `J`.
pub fn evaluate_conditions(j: &SemigroupSet, a: &Matrix) -> Vec<ConditionCheck> {
    let js = j.elements();
    let sandwich: BTreeSet<Matrix> = js.iter().flat_map(|x| js.iter().map(move |y| x.mul(a).mul(y))).collect();
    let right: BTreeSet<Matrix> = js.iter().map(|x| a.mul(x)).collect();
    let left: BTreeSet<Matrix> = js.iter().map(|x| x.mul(a)).collect();
    let sets = [&sandwich, &right, &left];
    IdealCondition::ALL
        .iter()
        .enumerate()
        .map(|(idx, &condition)| {
            let set = sets[idx % 3];
            let witness = if idx < 3 { outside_nilpotent_span(j, set) } else { non_nilpotent(set) };
            ConditionCheck { condition, holds: witness.is_none(), witness }
        })
        .collect()
}

fn outside_nilpotent_span(j: &SemigroupSet, set: &BTreeSet<Matrix>) -> Option<Matrix> {
    let mut span = AlgebraBasis::zero(j.domain(), j.n());
    let full = span.full_dim();
    let mut rest = Vec::new();
    for m in set {
        if span.dim() < full && is_nilpotent(m).nilpotent {
            span.insert(m);
        } else {
            rest.push(m);
        }
    }
    rest.into_iter().find(|m| !span.contains(m)).cloned()
}

fn non_nilpotent(set: &BTreeSet<Matrix>) -> Option<Matrix> {
    set.iter().find(|m| !is_nilpotent(m).nilpotent).cloned()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealAudit {
    pub status: Status,
    pub semigroup_size: usize,
    pub ideal_size: usize,
    /// Dimension of the unital algebra generated by the semigroup.
    pub algebra_dim: usize,
    /// Every condition checked at `A = 0`; all hold.
    pub zero_checks: Vec<ConditionCheck>,
    /// Per condition, the number of random nonzero `A` that violate it.
    pub failures: [usize; 6],
    pub trials: usize,
    /// The conditions at the first sampled `A`, with witnesses.
    pub first_sample: Option<(Matrix, Vec<ConditionCheck>)>,
    pub seed: u64,
}

/// Closes `S` and the ideal `J`, checks `S` is irreducible, then confirms
/// that `A = 0` satisfies every condition while each sampled nonzero `A` in
/// the unital algebra generated by `S` violates every condition.
pub fn semigroup_ideal_audit(
    domain: &Domain,
    n: usize,
    s_gens: &[Matrix],
    j_gens: &[Matrix],
    trials: usize,
    cap: usize,
    seed: u64,
) -> Result<IdealAudit> {
    let s = semigroup_close(domain, n, s_gens, cap)?;
    if !is_irreducible(domain, n, s.elements(), seed)?.is_irreducible() {
        return Err(Error::NonIrreducibleSemigroup);
    }
    let j = ideal_close(&s, j_gens)?;
    if !j.is_nonzero() {
        return Err(Error::InvalidInput("the ideal is zero".into()));
    }
    let algebra = AlgebraBasis::close(domain, n, s.elements(), true)?;
    let zero_checks = evaluate_conditions(&j, &Matrix::zero(domain, n, n));
    if let Some(c) = zero_checks.iter().find(|c| !c.holds) {
        return Err(Error::TheoremViolation(format!("condition {} fails at A = 0", c.condition.label())));
    }
    let mut failures = [0usize; 6];
    let mut first_sample = None;
    for t in 0..trials {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(t as u64);
        let a = (0..NONZERO_REDRAWS)
            .map(|_| algebra.random_element(&mut rng))
            .find(|m| !m.is_zero())
            .ok_or_else(|| Error::Inconclusive("random algebra elements kept coming out zero".into()))?;
        let checks = evaluate_conditions(&j, &a);
        for (f, c) in failures.iter_mut().zip(&checks) {
            if c.holds {
                return Err(Error::TheoremViolation(format!(
                    "nonzero A satisfies condition {} on trial {t}",
                    c.condition.label()
                )));
            }
            *f += 1;
        }
        if first_sample.is_none() {
            first_sample = Some((a, checks));
        }
    }
    Ok(IdealAudit {
        status: Status::Certified,
        semigroup_size: s.len(),
        ideal_size: j.len(),
        algebra_dim: algebra.dim(),
        zero_checks,
        failures,
        trials,
        first_sample,
        seed,
    })
}
