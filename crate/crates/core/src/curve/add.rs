use std::fmt;
use std::hash::Hash;

use serde::Serialize;

use super::params::{AffineParams, EdwardsParams, ProjParams};
use super::point::{neg_point, on_curve, AffinePoint, ProjPoint, Symmetry};
use super::CurveError;
use crate::field::FieldElement;

/// `delta0 = (1 - d*x1*x2*y1*y2)*(1 + d*x1*x2*y1*y2)`.
pub fn delta0<C: EdwardsParams>(params: &C, p: &AffinePoint, q: &AffinePoint) -> FieldElement {
    let one = params.field().one();
    let m = params.d() * p.x * q.x * p.y * q.y;
    (one - m) * (one + m)
}

/// `delta1 = (x2*y1 - x1*y2)*(x1*x2 + y1*y2)`.
pub fn delta1(p: &AffinePoint, q: &AffinePoint) -> FieldElement {
    (q.x * p.y - p.x * q.y) * (p.x * q.x + p.y * q.y)
}

fn delta(params: &ProjParams, ell: u8, p: &AffinePoint, q: &AffinePoint) -> FieldElement {
    if ell == 0 {
        delta0(params, p, q)
    } else {
        delta1(p, q)
    }
}

/// The base addition law
/// `((x1*x2 - c*y1*y2)/(1 - d*x1*x2*y1*y2), (x1*y2 + x2*y1)/(1 + d*x1*x2*y1*y2))`.
pub fn add_delta0<C: EdwardsParams>(params: &C, p: &AffinePoint, q: &AffinePoint) -> Result<AffinePoint, CurveError> {
    let one = params.field().one();
    let m = params.d() * p.x * q.x * p.y * q.y;
    let (dm, dp) = (one - m, one + m);
    if dm.is_zero() {
        return Err(CurveError::DeltaVanishes("delta-"));
    }
    if dp.is_zero() {
        return Err(CurveError::DeltaVanishes("delta+"));
    }
    let x = (p.x * q.x - params.c() * p.y * q.y).div(dm)?;
    let y = (p.x * q.y + q.x * p.y).div(dp)?;
    Ok(AffinePoint::new(x, y))
}

/// The second law on the t-form,
/// `((x1*y1 - x2*y2)/(x2*y1 - x1*y2), (x1*y1 + x2*y2)/(x1*x2 + y1*y2))`.
pub fn add_delta1(_params: &ProjParams, p: &AffinePoint, q: &AffinePoint) -> Result<AffinePoint, CurveError> {
    let dx = q.x * p.y - p.x * q.y;
    let dy = p.x * q.x + p.y * q.y;
    if dx.is_zero() {
        return Err(CurveError::DeltaVanishes("delta1x"));
    }
    if dy.is_zero() {
        return Err(CurveError::DeltaVanishes("delta1y"));
    }
    let x = (p.x * p.y - q.x * q.y).div(dx)?;
    let y = (p.x * p.y + q.x * q.y).div(dy)?;
    Ok(AffinePoint::new(x, y))
}

fn add_ell(params: &ProjParams, ell: u8, p: &AffinePoint, q: &AffinePoint) -> Result<AffinePoint, CurveError> {
    if ell == 0 {
        add_delta0(params, p, q)
    } else {
        add_delta1(params, p, q)
    }
}

/// The base law on a complete curve, where no denominator can vanish.
pub fn affine_complete_add(params: &AffineParams, p: &AffinePoint, q: &AffinePoint) -> Result<AffinePoint, CurveError> {
    params.require_complete()?;
    add_delta0(params, p, q)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum DichotomyResult {
    /// `delta_ell(P, Q) != 0`.
    Defined(u8),
    /// Both deltas vanish and `Q = g iota P` with `g` in `tau <rho>`.
    Symmetric(Symmetry),
}

impl fmt::Display for DichotomyResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DichotomyResult::Defined(ell) => write!(f, "delta{ell} != 0"),
            DichotomyResult::Symmetric(g) => write!(f, "Q = {g} iota P"),
        }
    }
}

/// Which case of the dichotomy a pair of t-form points falls in. Prefers
/// `delta0` when both laws are defined.
pub fn dichotomy_case(params: &ProjParams, p: &AffinePoint, q: &AffinePoint) -> Result<DichotomyResult, CurveError> {
    for ell in 0..2 {
        if !delta(params, ell, p, q).is_zero() {
            return Ok(DichotomyResult::Defined(ell));
        }
    }
    if p.is_regular() {
        let ip = neg_point(p);
        for k in 0..4 {
            let g = Symmetry::new(true, k);
            if g.apply_affine(params, &ip)? == *q {
                return Ok(DichotomyResult::Symmetric(g));
            }
        }
    }
    Err(CurveError::Inconsistent(p.to_string(), q.to_string()))
}

/// How a sum on the glued curve was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Route {
    /// `[P, i] + [Q, j] = [P +ell Q, i + j]`.
    Direct(u8),
    /// `[P, i] + [Q, j] = [P +ell tau Q, i + j + 1]`.
    Flipped(u8),
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Route::Direct(ell) => write!(f, "direct/{ell}"),
            Route::Flipped(ell) => write!(f, "flipped/{ell}"),
        }
    }
}

/// Every rule that applies to the given representatives, with its result in
/// canonical form.
pub fn proj_add_routes(params: &ProjParams, a: &ProjPoint, b: &ProjPoint) -> Vec<(Route, ProjPoint)> {
    let (p, q) = (&a.point, &b.point);
    let chart = a.chart ^ b.chart;
    let mut out = Vec::new();
    for ell in 0..2 {
        if !delta(params, ell, p, q).is_zero() {
            let s = add_ell(params, ell, p, q).expect("nonzero delta");
            out.push((Route::Direct(ell), ProjPoint::new(s, chart).canonical(params)));
        }
    }
    if let Ok(tq) = q.tau(params) {
        for ell in 0..2 {
            if !delta(params, ell, p, &tq).is_zero() {
                let s = add_ell(params, ell, p, &tq).expect("nonzero delta");
                out.push((Route::Flipped(ell), ProjPoint::new(s, chart ^ 1).canonical(params)));
            }
        }
    }
    out
}

/// Addition on the glued curve: the first applicable rule among
/// `direct/0, direct/1, flipped/0, flipped/1` on canonical representatives.
pub fn proj_add_checked(params: &ProjParams, a: &ProjPoint, b: &ProjPoint) -> Result<ProjPoint, CurveError> {
    let (a, b) = (a.canonical(params), b.canonical(params));
    let (p, q) = (&a.point, &b.point);
    let chart = a.chart ^ b.chart;
    for ell in 0..2 {
        if !delta(params, ell, p, q).is_zero() {
            return Ok(ProjPoint::new(add_ell(params, ell, p, q)?, chart).canonical(params));
        }
    }
    if let Ok(tq) = q.tau(params) {
        for ell in 0..2 {
            if !delta(params, ell, p, &tq).is_zero() {
                return Ok(ProjPoint::new(add_ell(params, ell, p, &tq)?, chart ^ 1).canonical(params));
            }
        }
    }
    Err(CurveError::Inconsistent(a.to_string(), b.to_string()))
}

/// Total addition on the glued curve.
///
/// # Panics
///
/// If no rule applies, which cannot happen for points on the curve.
pub fn proj_add(params: &ProjParams, a: &ProjPoint, b: &ProjPoint) -> ProjPoint {
    proj_add_checked(params, a, b).expect("some addition rule applies to every pair of curve points")
}

/// A finite abelian group of curve points.
pub trait GroupLaw: Sync {
    type Point: Copy + Eq + Hash + Ord + fmt::Display + Send + Sync;

    fn identity(&self) -> Self::Point;
    fn add(&self, a: &Self::Point, b: &Self::Point) -> Result<Self::Point, CurveError>;
    fn neg(&self, a: &Self::Point) -> Self::Point;
    /// The point lies on the curve and is in canonical form.
    fn contains(&self, a: &Self::Point) -> bool;
    fn describe(&self) -> String;
}

/// The affine curve with a complete addition law.
#[derive(Debug, Clone, Copy)]
pub struct AffineGroup {
    pub params: AffineParams,
}

impl AffineGroup {
    pub fn new(params: AffineParams) -> Result<Self, CurveError> {
        params.require_complete()?;
        Ok(AffineGroup { params })
    }
}

impl GroupLaw for AffineGroup {
    type Point = AffinePoint;

    fn identity(&self) -> AffinePoint {
        AffinePoint::identity(self.params.field)
    }
    fn add(&self, a: &AffinePoint, b: &AffinePoint) -> Result<AffinePoint, CurveError> {
        add_delta0(&self.params, a, b)
    }
    fn neg(&self, a: &AffinePoint) -> AffinePoint {
        neg_point(a)
    }
    fn contains(&self, a: &AffinePoint) -> bool {
        on_curve(&self.params, a)
    }
    fn describe(&self) -> String {
        format!("affine {}", self.params)
    }
}

/// The t-form curve glued from two charts.
#[derive(Debug, Clone, Copy)]
pub struct ProjectiveGroup {
    pub params: ProjParams,
}

impl ProjectiveGroup {
    pub fn new(params: ProjParams) -> Self {
        ProjectiveGroup { params }
    }
}

impl GroupLaw for ProjectiveGroup {
    type Point = ProjPoint;

    fn identity(&self) -> ProjPoint {
        ProjPoint::identity(self.params.field)
    }
    fn add(&self, a: &ProjPoint, b: &ProjPoint) -> Result<ProjPoint, CurveError> {
        proj_add_checked(&self.params, a, b)
    }
    fn neg(&self, a: &ProjPoint) -> ProjPoint {
        a.neg().canonical(&self.params)
    }
    fn contains(&self, a: &ProjPoint) -> bool {
        on_curve(&self.params, &a.point) && *a == a.canonical(&self.params)
    }
    fn describe(&self) -> String {
        format!("projective {}", self.params)
    }
}

/// `n * a` by double-and-add; negative `n` uses the inverse.
pub fn scalar_mul<G: GroupLaw>(group: &G, n: i64, a: &G::Point) -> Result<G::Point, CurveError> {
    let mut acc = group.identity();
    let mut base = if n < 0 { group.neg(a) } else { *a };
    let mut k = n.unsigned_abs();
    while k > 0 {
        if k & 1 == 1 {
            acc = group.add(&acc, &base)?;
        }
        base = group.add(&base, &base)?;
        k >>= 1;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(params: &impl EdwardsParams, x: i64, y: i64) -> AffinePoint {
        AffinePoint::from_ints(params.field(), x, y)
    }

    #[test]
    fn doubling_on_small_curve() {
        let params = AffineParams::from_ints(13, 1, 2).unwrap();
        let p = pt(&params, 4, 4);
        assert_eq!(add_delta0(&params, &p, &p).unwrap(), pt(&params, 0, 1));
        assert_eq!(add_delta0(&params, &p, &pt(&params, 1, 0)).unwrap(), p);
        assert_eq!(add_delta0(&params, &p, &neg_point(&p)).unwrap(), pt(&params, 1, 0));
    }

    #[test]
    fn circle_quarter_turn_doubles_to_minus_one() {
        let params = AffineParams::circle(13).unwrap();
        let i = pt(&params, 0, 1);
        assert_eq!(add_delta0(&params, &i, &i).unwrap(), pt(&params, -1, 0));
    }

    #[test]
    fn incomplete_params_are_refused() {
        let params = AffineParams::from_ints(13, 1, 4).unwrap();
        let p = pt(&params, 1, 0);
        assert!(matches!(affine_complete_add(&params, &p, &p), Err(CurveError::ParamsNotComplete(_))));
        assert!(AffineGroup::new(params).is_err());
    }

    #[test]
    fn second_law_undefined_on_diagonal_point() {
        // x^2 t = 1 with t = 4 mod 13: x = 7 since 49*4 = 196 = 1 mod 13
        let params = ProjParams::from_ints(13, 4).unwrap();
        let p = pt(&params, 7, 7);
        assert_eq!(add_delta1(&params, &p, &p), Err(CurveError::DeltaVanishes("delta1x")));
        assert_eq!(add_delta0(&params, &p, &p), Err(CurveError::DeltaVanishes("delta-")));
    }

    #[test]
    fn dichotomy_examples() {
        let params = ProjParams::from_ints(13, 2).unwrap();
        let f = params.field;
        let axis = pt(&params, 0, 1);
        for x in 1..13 {
            for y in 1..13 {
                let p = AffinePoint::from_ints(f, x, y);
                if !on_curve(&params, &p) {
                    continue;
                }
                assert_eq!(dichotomy_case(&params, &p, &axis).unwrap(), DichotomyResult::Defined(0));
                let q = neg_point(&p).tau(&params).unwrap();
                assert_eq!(dichotomy_case(&params, &p, &q).unwrap(), DichotomyResult::Symmetric(Symmetry::TAU));
            }
        }
    }

    #[test]
    fn scalar_multiples_match_repeated_addition() {
        let group = AffineGroup::new(AffineParams::from_ints(13, 1, 2).unwrap()).unwrap();
        let a = pt(&group.params, 4, 4);
        assert_eq!(scalar_mul(&group, 0, &a).unwrap(), group.identity());
        assert_eq!(scalar_mul(&group, 1, &a).unwrap(), a);
        let mut acc = group.identity();
        for _ in 0..7 {
            acc = group.add(&acc, &a).unwrap();
        }
        assert_eq!(scalar_mul(&group, 7, &a).unwrap(), acc);
        assert_eq!(scalar_mul(&group, -7, &a).unwrap(), group.neg(&acc));
    }
}
