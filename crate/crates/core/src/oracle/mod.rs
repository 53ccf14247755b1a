//! Brute-force checks over small prime fields, independent of the symbolic
//! certificates: every pair and triple of points is tried.

mod enumerate;
mod projective;
mod sweep;

use serde::Serialize;
use thiserror::Error;

use crate::curve::CurveError;
use crate::identities::Status;
use crate::reduce::ReductionCertificate;

pub use enumerate::{enumerate_points, enumerate_projective, DEFAULT_PRIME_CAP};
pub use projective::{
    dichotomy_sweep, equivariance_check, fixed_point_free_check, semi_associativity_check,
    well_defined_covering_check, CoveringReport, DichotomyReport,
};
pub use sweep::{
    affine_axiom_sweep, circle_agreement_check, exhaustive_axiom_check, jacobi_quartic_check,
    projective_axiom_sweep, AxiomCheck, AxiomSweepReport,
};

#[derive(Debug, Error)]
pub enum OracleError {
    #[error("p = {p} exceeds the enumeration cap {cap}")]
    CapExceeded { p: u64, cap: u64 },
    #[error(transparent)]
    Curve(#[from] CurveError),
}

/// Outcome of an exhaustive check of one property.
#[derive(Debug, Clone, Serialize)]
pub struct PropertyReport {
    pub name: &'static str,
    pub curve: String,
    pub examined: u64,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

impl PropertyReport {
    fn new(name: &'static str, curve: String, examined: u64, counterexample: Option<String>) -> Self {
        PropertyReport {
            name,
            curve,
            examined,
            status: Status::from_bool(counterexample.is_none()),
            counterexample,
        }
    }

    pub fn passed(&self) -> bool {
        self.status.is_pass()
    }
}

/// Checks the certificate identity at `trials` random points of the audit field.
pub fn random_eval_audit(cert: &ReductionCertificate, trials: usize, seed: u64) -> bool {
    cert.check_random(trials, seed)
}
