use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use super::enumerate::{enumerate_points, enumerate_projective};
use super::{OracleError, PropertyReport};
use crate::curve::{
    add_delta0, AffineGroup, AffineParams, AffinePoint, EdwardsParams, GroupLaw, ProjParams, ProjectiveGroup,
};
use crate::identities::Status;

#[derive(Debug, Clone, Serialize)]
pub struct AxiomCheck {
    pub name: &'static str,
    pub holds: bool,
    pub examined: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct AxiomSweepReport {
    pub curve: String,
    pub status: Status,
    pub affine_points: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub regular_points: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub projective_points: Option<usize>,
    pub pairs: u64,
    pub triples: u64,
    pub axioms: Vec<AxiomCheck>,
}

impl AxiomSweepReport {
    pub fn passed(&self) -> bool {
        self.status.is_pass()
    }

    pub fn axiom(&self, name: &str) -> Option<&AxiomCheck> {
        self.axioms.iter().find(|a| a.name == name)
    }
}

fn check(name: &'static str, examined: u64, counterexample: Option<String>) -> AxiomCheck {
    AxiomCheck {
        name,
        holds: counterexample.is_none(),
        examined,
        counterexample,
    }
}

/// Closure, identity, inverse and commutativity over all pairs of `points`,
/// associativity over all triples. `points` must be the whole group.
pub fn exhaustive_axiom_check<G: GroupLaw>(group: &G, points: &[G::Point]) -> AxiomSweepReport {
    let n = points.len();
    let index: HashMap<G::Point, usize> = points.iter().enumerate().map(|(i, p)| (*p, i)).collect();
    let p = |i: usize| points[i];

    // table[i][j] = index of points[i] + points[j], or None if the sum is
    // undefined, off the curve, or not in `points`.
    let table: Vec<Vec<Option<usize>>> = (0..n)
        .into_par_iter()
        .map(|i| {
            (0..n)
                .map(|j| {
                    group
                        .add(&p(i), &p(j))
                        .ok()
                        .filter(|s| group.contains(s))
                        .and_then(|s| index.get(&s).copied())
                })
                .collect()
        })
        .collect();

    let pairs = (n * n) as u64;
    let mut axioms = Vec::new();

    let closure = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .find(|&(i, j)| table[i][j].is_none())
        .map(|(i, j)| {
            let got = match group.add(&p(i), &p(j)) {
                Ok(s) => format!("{s}, which is not a curve point"),
                Err(e) => e.to_string(),
            };
            format!("{} + {} gives {got}", p(i), p(j))
        });
    axioms.push(check("closure", pairs, closure.clone()));

    let id = group.identity();
    let identity = match index.get(&id) {
        None => Some(format!("identity {id} is not among the points")),
        Some(&e) => (0..n)
            .find(|&i| table[i][e] != Some(i) || table[e][i] != Some(i))
            .map(|i| format!("{} + {id} != {}", p(i), p(i))),
    };
    axioms.push(check("identity", n as u64, identity));

    let inverse = (0..n)
        .find(|&i| {
            let neg = group.neg(&p(i));
            match (index.get(&neg), index.get(&id)) {
                (Some(&k), Some(&e)) => table[i][k] != Some(e),
                _ => true,
            }
        })
        .map(|i| format!("{} + {} is not the identity", p(i), group.neg(&p(i))));
    axioms.push(check("inverse", n as u64, inverse));

    let comm = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .find(|&(i, j)| table[i][j] != table[j][i])
        .map(|(i, j)| format!("{} + {} differs from {} + {}", p(i), p(j), p(j), p(i)));
    axioms.push(check("commutativity", pairs, comm));

    let triples = (n * n * n) as u64;
    let assoc = if closure.is_some() {
        Some("not examined: the law is not closed".to_string())
    } else {
        (0..n)
            .into_par_iter()
            .find_map_first(|i| {
                for j in 0..n {
                    let ij = table[i][j].expect("closed");
                    for k in 0..n {
                        let l = table[ij][k].expect("closed");
                        let r = table[i][table[j][k].expect("closed")].expect("closed");
                        if l != r {
                            return Some(format!(
                                "({} + {}) + {} = {} but {} + ({} + {}) = {}",
                                p(i), p(j), p(k), p(l), p(i), p(j), p(k), p(r)
                            ));
                        }
                    }
                }
                None
            })
    };
    axioms.push(check("associativity", triples, assoc));

    let ok = axioms.iter().all(|a| a.holds);
    AxiomSweepReport {
        curve: group.describe(),
        status: Status::from_bool(ok),
        affine_points: n,
        regular_points: None,
        projective_points: None,
        pairs,
        triples,
        axioms,
    }
}

/// Full sweep of the complete affine group.
pub fn affine_axiom_sweep(params: &AffineParams, cap: u64) -> Result<AxiomSweepReport, OracleError> {
    let group = AffineGroup::new(*params)?;
    let points = enumerate_points(params, cap)?;
    Ok(exhaustive_axiom_check(&group, &points))
}

/// Full sweep of the glued t-form curve.
pub fn projective_axiom_sweep(params: &ProjParams, cap: u64) -> Result<AxiomSweepReport, OracleError> {
    let group = ProjectiveGroup::new(*params);
    let affine = enumerate_points(params, cap)?;
    let points = enumerate_projective(params, cap)?;
    let mut report = exhaustive_axiom_check(&group, &points);
    report.affine_points = affine.len();
    report.regular_points = Some(affine.iter().filter(|p| p.is_regular()).count());
    report.projective_points = Some(points.len());
    Ok(report)
}

/// Every affine point satisfies `w^2 = (1 - d*y^2)*(1 - c*y^2)` for `w = x*(1 - d*y^2)`.
pub fn jacobi_quartic_check<C: EdwardsParams>(params: &C, curve: String, cap: u64) -> Result<PropertyReport, OracleError> {
    let points = enumerate_points(params, cap)?;
    let one = params.field().one();
    let bad = points.iter().find(|pt| {
        let y2 = pt.y * pt.y;
        let w = pt.x * (one - params.d() * y2);
        w * w != (one - params.d() * y2) * (one - params.c() * y2)
    });
    Ok(PropertyReport::new(
        "jacobi-quartic",
        curve,
        points.len() as u64,
        bad.map(|p| format!("{p} does not map onto the quartic")),
    ))
}

/// On `c = 1, d = 0` the law is `(x1*x2 - y1*y2, x1*y2 + x2*y1)` for all pairs.
pub fn circle_agreement_check(p: u64, cap: u64) -> Result<PropertyReport, OracleError> {
    let params = AffineParams::circle(p)?;
    let points = enumerate_points(&params, cap)?;
    let bad = points
        .iter()
        .flat_map(|a| points.iter().map(move |b| (a, b)))
        .find(|(a, b)| {
            let want = AffinePoint::new(a.x * b.x - a.y * b.y, a.x * b.y + b.x * a.y);
            add_delta0(&params, a, b).ok() != Some(want)
        })
        .map(|(a, b)| format!("{a} + {b} disagrees with the rotation formula"));
    Ok(PropertyReport::new(
        "circle-agreement",
        format!("affine {params}"),
        (points.len() * points.len()) as u64,
        bad,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::{proj_add_checked, CurveError, ProjPoint};
    use crate::oracle::DEFAULT_PRIME_CAP;

    #[test]
    fn small_complete_curve_passes() {
        let params = AffineParams::from_ints(13, 1, 2).unwrap();
        let report = affine_axiom_sweep(&params, DEFAULT_PRIME_CAP).unwrap();
        assert!(report.passed(), "{report:?}");
        assert_eq!(report.triples, (report.affine_points as u64).pow(3));
    }

    #[test]
    fn t_form_curve_passes() {
        let params = ProjParams::from_ints(13, 2).unwrap();
        let report = projective_axiom_sweep(&params, DEFAULT_PRIME_CAP).unwrap();
        assert!(report.passed(), "{report:?}");
        assert_eq!(report.affine_points, report.regular_points.unwrap() + 4);
    }

    /// Glued addition without the rule that moves `Q` to the other chart.
    struct NoFallback(ProjParams);

    impl GroupLaw for NoFallback {
        type Point = ProjPoint;
        fn identity(&self) -> ProjPoint {
            ProjPoint::identity(self.0.field)
        }
        fn add(&self, a: &ProjPoint, b: &ProjPoint) -> Result<ProjPoint, CurveError> {
            let (a, b) = (a.canonical(&self.0), b.canonical(&self.0));
            let s = add_delta0(&self.0, &a.point, &b.point)
                .or_else(|_| crate::curve::add_delta1(&self.0, &a.point, &b.point))?;
            Ok(ProjPoint::new(s, a.chart ^ b.chart).canonical(&self.0))
        }
        fn neg(&self, a: &ProjPoint) -> ProjPoint {
            a.neg()
        }
        fn contains(&self, a: &ProjPoint) -> bool {
            crate::curve::on_curve(&self.0, &a.point)
        }
        fn describe(&self) -> String {
            "broken".into()
        }
    }

    #[test]
    fn missing_fallback_is_caught() {
        let params = ProjParams::from_ints(13, 2).unwrap();
        let points = enumerate_projective(&params, DEFAULT_PRIME_CAP).unwrap();
        let report = exhaustive_axiom_check(&NoFallback(params), &points);
        assert!(!report.passed());
        let closure = report.axiom("closure").unwrap();
        assert!(!closure.holds);
        assert!(closure.counterexample.as_ref().unwrap().contains("vanishes"));
        // the real law handles the same pair
        assert!(points.iter().all(|a| points.iter().all(|b| proj_add_checked(&params, a, b).is_ok())));
    }

    #[test]
    fn circle_matches_rotation_formula() {
        assert!(circle_agreement_check(13, DEFAULT_PRIME_CAP).unwrap().passed());
    }
}
