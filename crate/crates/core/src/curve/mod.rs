//! Edwards curves over prime fields.
//!
//! Two groups are provided. For `x^2 + c*y^2 = 1 + d*x^2*y^2` with `c` a square
//! and `d` not a nonzero square the affine addition law is complete, and
//! [`AffineGroup`] uses it directly. For the t-form `x^2 + y^2 = 1 + t^2*x^2*y^2`
//! the curve is completed by gluing two affine charts along the points with
//! nonzero coordinates, and [`ProjectiveGroup`] adds with whichever law is
//! defined on the pair.

mod add;
mod params;
mod point;

use thiserror::Error;

use crate::field::FieldError;

pub use add::{
    add_delta0, add_delta1, affine_complete_add, delta0, delta1, dichotomy_case, proj_add, proj_add_checked,
    proj_add_routes, scalar_mul, AffineGroup, DichotomyResult, GroupLaw, ProjectiveGroup, Route,
};
pub use params::{AffineParams, EdwardsParams, ProjParams};
pub use point::{apply_symmetry, neg_point, on_curve, AffinePoint, ProjPoint, Symmetry};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CurveError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("{0} vanishes: the addition law is undefined on this pair")]
    DeltaVanishes(&'static str),
    #[error("affine addition is not complete for these parameters: {0}")]
    ParamsNotComplete(String),
    #[error("invalid curve parameters: {0}")]
    InvalidParams(String),
    #[error("tau is undefined at {0}: a coordinate is zero")]
    ZeroCoordinate(AffinePoint),
    #[error("{0} is not on the curve")]
    NotOnCurve(String),
    #[error("no addition rule applies to {0} and {1}")]
    Inconsistent(String, String),
    #[error("cannot parse point {0:?}: expected (x,y) or [(x,y),i]")]
    Parse(String),
}
