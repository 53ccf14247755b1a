//! Multivariate division producing checkable certificates, and a small
//! Buchberger engine.

mod certificate;
mod division;
mod groebner;

use thiserror::Error;

pub use certificate::{verify_certificate, ReductionCertificate, DEFAULT_AUDIT_TRIALS};
pub use division::{poly_reduce, reduces_to_zero};
pub use groebner::{buchberger, buchberger_tracked, reduce_in_ideal, buchberger_with_cap, GroebnerBasis, DEFAULT_PAIR_CAP};

#[derive(Debug, Error)]
pub enum ReduceError {
    #[error("Groebner computation exceeded the cap of {cap} S-pairs")]
    ResourceBound { cap: usize },
    #[error("malformed certificate JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("malformed polynomial in certificate: {0}")]
    Parse(#[from] crate::polyring::ParseError),
    #[error("malformed multiplier {0:?}")]
    BadMultiplier(String),
}
