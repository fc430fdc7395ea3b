//! Certifications: Burnside-type density, the field characterization with
//! its counterexample algebras, Wedderburn nilpotency and the semigroup
//! ideal audit.

mod burnside;
mod field;
mod ideal;
mod wedderburn;

pub use field::{burnside_field_audit, counterexample_algebra, Counterexample, FieldAudit};
pub use wedderburn::{
    wedderburn_matrix_verify, wedderburn_verify, WedderburnFailure, WedderburnMatrixReport, WedderburnReport,
    NILPOTENT_SEARCH_BUDGET,
};
pub use ideal::{
    evaluate_conditions, semigroup_ideal_audit, ConditionCheck, IdealAudit, IdealCondition, DEFAULT_TRIALS,
};
pub use burnside::{
    burnside_certify, construct_matrix_units, find_rank_one, rank_one_idempotent, BurnsideReport, Idempotent,
    MatrixUnits, RankOne, RankOneSource,
};

/// Outcome class shared by every certification.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Status {
    /// Hypotheses hold and the conclusion was verified exactly.
    Certified,
    /// A hypothesis fails, so the statement says nothing about the input.
    Inapplicable,
    /// The input is not of the kind the statement is about.
    RefutedHypothesis,
    /// A budget ran out or a sub-question could not be decided.
    Inconclusive,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Certified => "certified",
            Status::Inapplicable => "inapplicable",
            Status::RefutedHypothesis => "refuted-hypothesis",
            Status::Inconclusive => "inconclusive",
        }
    }
}
