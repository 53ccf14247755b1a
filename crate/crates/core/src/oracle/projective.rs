use rayon::prelude::*;
use serde::Serialize;

use super::enumerate::{enumerate_points, enumerate_projective};
use super::{OracleError, PropertyReport};
use crate::curve::{
    dichotomy_case, neg_point, proj_add, proj_add_routes, AffinePoint, DichotomyResult, ProjParams, ProjPoint, Route,
    Symmetry,
};
use crate::identities::Status;

fn curve_id(params: &ProjParams) -> String {
    format!("projective {params}")
}

#[derive(Debug, Clone, Serialize)]
pub struct CoveringReport {
    pub curve: String,
    pub status: Status,
    /// Pairs of canonical points.
    pub pairs: u64,
    /// Pairs of representatives, over both charts where possible.
    pub representative_pairs: u64,
    /// Representative pairs with no applicable rule.
    pub uncovered: u64,
    /// Representative pairs where two applicable rules disagree, or disagree
    /// with the canonical sum.
    pub disagreements: u64,
    /// Canonical pairs where only the chart-flipping rule applies.
    pub flipped_only: u64,
    /// Canonical pairs whose second point has a zero coordinate.
    pub axis_pairs: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

impl CoveringReport {
    pub fn passed(&self) -> bool {
        self.status.is_pass()
    }
}

#[derive(Default)]
struct CoveringTally {
    rep_pairs: u64,
    uncovered: u64,
    disagreements: u64,
    flipped_only: u64,
    axis_pairs: u64,
    counterexample: Option<String>,
}

impl CoveringTally {
    fn note(&mut self, msg: impl FnOnce() -> String) {
        if self.counterexample.is_none() {
            self.counterexample = Some(msg());
        }
    }

    fn merge(mut self, other: CoveringTally) -> CoveringTally {
        self.rep_pairs += other.rep_pairs;
        self.uncovered += other.uncovered;
        self.disagreements += other.disagreements;
        self.flipped_only += other.flipped_only;
        self.axis_pairs += other.axis_pairs;
        if self.counterexample.is_none() {
            self.counterexample = other.counterexample;
        }
        self
    }
}

/// `Q = tau rho^k iota P` for some `k`.
fn is_tau_rho_iota(params: &ProjParams, p: &AffinePoint, q: &AffinePoint) -> bool {
    p.is_regular()
        && (0..4).any(|k| Symmetry::new(true, k).apply_affine(params, &neg_point(p)).ok() == Some(*q))
}

/// For every pair of points and every choice of representatives, some rule
/// applies and all applicable rules give the same point.
pub fn well_defined_covering_check(params: &ProjParams, cap: u64) -> Result<CoveringReport, OracleError> {
    let points = enumerate_projective(params, cap)?;
    let tally = points
        .par_iter()
        .map(|a| {
            let mut t = CoveringTally::default();
            for b in &points {
                let sum = proj_add(params, a, b);
                let canon = proj_add_routes(params, a, b);
                if canon.iter().all(|(r, _)| matches!(r, Route::Flipped(_))) {
                    t.flipped_only += 1;
                    if !is_tau_rho_iota(params, &a.point, &b.point) {
                        t.note(|| format!("{a} + {b}: only the flipped rule applies, but Q is not tau rho^k iota P"));
                    }
                } else if a.point.is_regular() && b.point.is_regular() && is_tau_rho_iota(params, &a.point, &b.point) {
                    t.note(|| format!("{a} + {b}: a direct rule applies although Q = tau rho^k iota P"));
                }
                if !b.point.is_regular() {
                    t.axis_pairs += 1;
                    if !canon.iter().any(|(r, _)| *r == Route::Direct(0)) {
                        t.note(|| format!("{a} + {b}: the base law does not apply to an axis point"));
                    }
                }
                for ra in a.representatives(params) {
                    for rb in b.representatives(params) {
                        t.rep_pairs += 1;
                        let routes = proj_add_routes(params, &ra, &rb);
                        if routes.is_empty() {
                            t.uncovered += 1;
                            t.note(|| format!("{ra} + {rb}: no rule applies"));
                        }
                        if let Some((route, s)) = routes.iter().find(|(_, s)| *s != sum) {
                            t.disagreements += 1;
                            t.note(|| format!("{ra} + {rb}: rule {route} gives {s}, expected {sum}"));
                        }
                    }
                }
            }
            t
        })
        .reduce(CoveringTally::default, CoveringTally::merge);
    let ok = tally.uncovered == 0 && tally.disagreements == 0 && tally.counterexample.is_none();
    Ok(CoveringReport {
        curve: curve_id(params),
        status: Status::from_bool(ok),
        pairs: (points.len() * points.len()) as u64,
        representative_pairs: tally.rep_pairs,
        uncovered: tally.uncovered,
        disagreements: tally.disagreements,
        flipped_only: tally.flipped_only,
        axis_pairs: tally.axis_pairs,
        counterexample: tally.counterexample,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct DichotomyReport {
    pub curve: String,
    pub status: Status,
    pub pairs: u64,
    pub delta0: u64,
    pub delta1: u64,
    pub symmetric: u64,
    pub inconsistent: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

impl DichotomyReport {
    pub fn passed(&self) -> bool {
        self.status.is_pass()
    }
}

/// Classifies every pair of affine points and re-checks the claimed branch.
pub fn dichotomy_sweep(params: &ProjParams, cap: u64) -> Result<DichotomyReport, OracleError> {
    let points = enumerate_points(params, cap)?;
    let rows: Vec<([u64; 4], Option<String>)> = points
        .par_iter()
        .map(|p| {
            let mut counts = [0u64; 4];
            let mut bad = None;
            for q in &points {
                match dichotomy_case(params, p, q) {
                    Ok(DichotomyResult::Defined(ell)) => {
                        counts[ell as usize] += 1;
                        let ok = if ell == 0 {
                            crate::curve::add_delta0(params, p, q).is_ok()
                        } else {
                            crate::curve::add_delta1(params, p, q).is_ok()
                        };
                        if !ok && bad.is_none() {
                            bad = Some(format!("{p}, {q}: law {ell} claimed but undefined"));
                        }
                    }
                    Ok(DichotomyResult::Symmetric(g)) => {
                        counts[2] += 1;
                        let image = g.apply_affine(params, &neg_point(p)).ok();
                        if (image != Some(*q) || !g.tau) && bad.is_none() {
                            bad = Some(format!("{p}, {q}: claimed Q = {g} iota P"));
                        }
                    }
                    Err(e) => {
                        counts[3] += 1;
                        if bad.is_none() {
                            bad = Some(e.to_string());
                        }
                    }
                }
            }
            (counts, bad)
        })
        .collect();
    let mut total = [0u64; 4];
    let mut counterexample = None;
    for (c, bad) in rows {
        for k in 0..4 {
            total[k] += c[k];
        }
        counterexample = counterexample.or(bad);
    }
    Ok(DichotomyReport {
        curve: curve_id(params),
        status: Status::from_bool(counterexample.is_none()),
        pairs: (points.len() * points.len()) as u64,
        delta0: total[0],
        delta1: total[1],
        symmetric: total[2],
        inconsistent: total[3],
        counterexample,
    })
}

/// No symmetry other than the identity fixes a point with nonzero coordinates.
pub fn fixed_point_free_check(params: &ProjParams, cap: u64) -> Result<PropertyReport, OracleError> {
    let regular: Vec<AffinePoint> = enumerate_points(params, cap)?
        .into_iter()
        .filter(|p| p.is_regular())
        .collect();
    let bad = regular.iter().find_map(|p| {
        Symmetry::all()
            .filter(|g| !g.is_identity())
            .find(|g| g.apply_affine(params, p).ok() == Some(*p))
            .map(|g| format!("{g} fixes {p}"))
    });
    Ok(PropertyReport::new("fixed-point-free", curve_id(params), regular.len() as u64 * 7, bad))
}

/// `g(A + B) = (g A) + B` for the generators `g = rho, tau` and all pairs.
pub fn equivariance_check(params: &ProjParams, cap: u64) -> Result<PropertyReport, OracleError> {
    let points = enumerate_projective(params, cap)?;
    let bad = points.par_iter().find_map_first(|a| {
        for b in &points {
            for g in [Symmetry::RHO, Symmetry::TAU] {
                let lhs = g.apply(params, &proj_add(params, a, b));
                let rhs = proj_add(params, &g.apply(params, a), b);
                if lhs != rhs {
                    return Some(format!("{g}: {g}({a} + {b}) = {lhs} but {g}{a} + {b} = {rhs}"));
                }
            }
        }
        None
    });
    Ok(PropertyReport::new(
        "equivariance",
        curve_id(params),
        2 * (points.len() * points.len()) as u64,
        bad,
    ))
}

/// `([P,0] + [Q,0]) + [iota Q,0] = [P,0]` for all affine `P, Q`.
pub fn semi_associativity_check(params: &ProjParams, cap: u64) -> Result<PropertyReport, OracleError> {
    let points = enumerate_points(params, cap)?;
    let bad = points.par_iter().find_map_first(|p| {
        let a = ProjPoint::new(*p, 0).canonical(params);
        points.iter().find_map(|q| {
            let b = ProjPoint::new(*q, 0);
            let c = ProjPoint::new(neg_point(q), 0);
            let lhs = proj_add(params, &proj_add(params, &a, &b), &c);
            (lhs != a).then(|| format!("({a} + {b}) + {c} = {lhs}"))
        })
    });
    Ok(PropertyReport::new(
        "semi-associativity",
        curve_id(params),
        (points.len() * points.len()) as u64,
        bad,
    ))
}
