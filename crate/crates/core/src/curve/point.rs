use std::fmt;

use serde::{Serialize, Serializer};

use super::params::{EdwardsParams, ProjParams};
use super::CurveError;
use crate::field::{FieldElement, PrimeField};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffinePoint {
    pub x: FieldElement,
    pub y: FieldElement,
}

impl AffinePoint {
    pub fn new(x: FieldElement, y: FieldElement) -> Self {
        AffinePoint { x, y }
    }

    pub fn from_ints(field: PrimeField, x: i64, y: i64) -> Self {
        AffinePoint::new(field.from_i64(x), field.from_i64(y))
    }

    pub fn identity(field: PrimeField) -> Self {
        AffinePoint::new(field.one(), field.zero())
    }

    /// Both coordinates nonzero, so that `tau` is defined.
    pub fn is_regular(&self) -> bool {
        !self.x.is_zero() && !self.y.is_zero()
    }

    /// `rho(x, y) = (-y, x)`.
    pub fn rho(&self) -> Self {
        AffinePoint::new(-self.y, self.x)
    }

    /// `tau(x, y) = (1/(t*x), 1/(t*y))`.
    pub fn tau(&self, params: &ProjParams) -> Result<Self, CurveError> {
        if !self.is_regular() {
            return Err(CurveError::ZeroCoordinate(*self));
        }
        let t = params.t;
        Ok(AffinePoint::new((t * self.x).inv()?, (t * self.y).inv()?))
    }

    /// Parses `(x,y)` with decimal, possibly negative, coordinates.
    pub fn parse(field: PrimeField, src: &str) -> Result<Self, CurveError> {
        let err = || CurveError::Parse(src.to_string());
        let inner = src
            .trim()
            .strip_prefix('(')
            .and_then(|s| s.strip_suffix(')'))
            .ok_or_else(err)?;
        let (x, y) = inner.split_once(',').ok_or_else(err)?;
        let coord = |s: &str| s.trim().parse::<i64>().map(|v| field.from_i64(v)).map_err(|_| err());
        Ok(AffinePoint::new(coord(x)?, coord(y)?))
    }
}

impl fmt::Display for AffinePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

impl Serialize for AffinePoint {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// `e(P) = 0`.
pub fn on_curve<C: EdwardsParams>(params: &C, p: &AffinePoint) -> bool {
    let (x2, y2) = (p.x * p.x, p.y * p.y);
    let one = params.field().one();
    (x2 + params.c() * y2 - one - params.d() * x2 * y2).is_zero()
}

/// `iota(x, y) = (x, -y)`.
pub fn neg_point(p: &AffinePoint) -> AffinePoint {
    AffinePoint::new(p.x, -p.y)
}

/// A point `[P, chart]` of the glued curve. Points with both coordinates
/// nonzero are kept on chart 0 after [`ProjPoint::canonical`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjPoint {
    pub point: AffinePoint,
    pub chart: u8,
}

impl ProjPoint {
    pub fn new(point: AffinePoint, chart: u8) -> Self {
        ProjPoint { point, chart: chart & 1 }
    }

    pub fn identity(field: PrimeField) -> Self {
        ProjPoint::new(AffinePoint::identity(field), 0)
    }

    /// Rewrites `[P, 1]` as `[tau P, 0]` when `P` has nonzero coordinates.
    pub fn canonical(&self, params: &ProjParams) -> Self {
        if self.chart == 1 && self.point.is_regular() {
            let p = self.point.tau(params).expect("regular point");
            ProjPoint::new(p, 0)
        } else {
            *self
        }
    }

    /// All representatives: the point itself, and `[tau P, i + 1]` when defined.
    pub fn representatives(&self, params: &ProjParams) -> Vec<ProjPoint> {
        let mut out = vec![*self];
        if let Ok(p) = self.point.tau(params) {
            out.push(ProjPoint::new(p, self.chart ^ 1));
        }
        out
    }

    /// Same point of the glued curve.
    pub fn same(&self, other: &ProjPoint, params: &ProjParams) -> bool {
        self.canonical(params) == other.canonical(params)
    }

    pub fn neg(&self) -> Self {
        ProjPoint::new(neg_point(&self.point), self.chart)
    }

    /// Parses `[(x,y),i]`; a bare `(x,y)` is taken on chart 0.
    pub fn parse(field: PrimeField, src: &str) -> Result<Self, CurveError> {
        let err = || CurveError::Parse(src.to_string());
        let s = src.trim();
        let Some(inner) = s.strip_prefix('[') else {
            return Ok(ProjPoint::new(AffinePoint::parse(field, s)?, 0));
        };
        let inner = inner.strip_suffix(']').ok_or_else(err)?;
        let (pt, chart) = inner.rsplit_once(',').ok_or_else(err)?;
        let chart: u8 = match chart.trim() {
            "0" => 0,
            "1" => 1,
            _ => return Err(err()),
        };
        Ok(ProjPoint::new(AffinePoint::parse(field, pt)?, chart))
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.point, self.chart)
    }
}

impl Serialize for ProjPoint {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// An element `tau^a rho^k` of the order-8 group generated by `rho` and `tau`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Symmetry {
    pub rot: u8,
    pub tau: bool,
}

impl Symmetry {
    pub const IDENTITY: Symmetry = Symmetry { rot: 0, tau: false };
    pub const RHO: Symmetry = Symmetry { rot: 1, tau: false };
    pub const TAU: Symmetry = Symmetry { rot: 0, tau: true };

    pub fn new(tau: bool, rot: u8) -> Self {
        Symmetry { rot: rot % 4, tau }
    }

    pub fn all() -> impl Iterator<Item = Symmetry> {
        (0..8u8).map(|i| Symmetry::new(i >= 4, i % 4))
    }

    pub fn is_identity(&self) -> bool {
        *self == Symmetry::IDENTITY
    }

    /// `self` after `other`; the group is abelian.
    pub fn compose(&self, other: &Symmetry) -> Symmetry {
        Symmetry::new(self.tau ^ other.tau, self.rot + other.rot)
    }

    pub fn inverse(&self) -> Symmetry {
        Symmetry::new(self.tau, 4 - self.rot)
    }

    pub fn apply_affine(&self, params: &ProjParams, p: &AffinePoint) -> Result<AffinePoint, CurveError> {
        let r = (0..self.rot).fold(*p, |q, _| q.rho());
        if self.tau {
            r.tau(params)
        } else {
            Ok(r)
        }
    }

    /// Action on the glued curve: `rho[P, i] = [rho P, i]`, `tau[P, i] = [P, i + 1]`.
    pub fn apply(&self, params: &ProjParams, a: &ProjPoint) -> ProjPoint {
        let r = (0..self.rot).fold(a.point, |q, _| q.rho());
        ProjPoint::new(r, a.chart ^ self.tau as u8).canonical(params)
    }
}

impl fmt::Display for Symmetry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.tau, self.rot) {
            (false, 0) => write!(f, "1"),
            (true, 0) => write!(f, "tau"),
            (false, 1) => write!(f, "rho"),
            (true, 1) => write!(f, "tau rho"),
            (false, k) => write!(f, "rho^{k}"),
            (true, k) => write!(f, "tau rho^{k}"),
        }
    }
}

pub fn apply_symmetry(params: &ProjParams, g: &Symmetry, a: &ProjPoint) -> ProjPoint {
    g.apply(params, a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::AffineParams;

    #[test]
    fn membership_examples() {
        let params = AffineParams::from_ints(13, 1, 2).unwrap();
        let f = params.field;
        assert!(on_curve(&params, &AffinePoint::from_ints(f, 1, 0)));
        assert!(!on_curve(&params, &AffinePoint::from_ints(f, 0, 0)));
        assert!(on_curve(&params, &AffinePoint::from_ints(f, 4, 4)));
    }

    #[test]
    fn parse_round_trip() {
        let f = PrimeField::new(13).unwrap();
        let p = AffinePoint::parse(f, " ( -1 , 4 )").unwrap();
        assert_eq!(p, AffinePoint::from_ints(f, 12, 4));
        assert_eq!(p.to_string(), "(12,4)");
        let q = ProjPoint::parse(f, "[(3,5),1]").unwrap();
        assert_eq!(q.chart, 1);
        assert_eq!(ProjPoint::parse(f, &q.to_string()).unwrap(), q);
        assert!(AffinePoint::parse(f, "(1;2)").is_err());
        assert!(ProjPoint::parse(f, "[(1,2),2]").is_err());
    }

    #[test]
    fn symmetry_relations() {
        let params = ProjParams::from_ints(13, 2).unwrap();
        let f = params.field;
        let a = ProjPoint::new(AffinePoint::from_ints(f, 3, 7), 0);
        let rho4 = (0..4).fold(a, |b, _| Symmetry::RHO.apply(&params, &b));
        assert_eq!(rho4, a);
        let tau2 = Symmetry::TAU.apply(&params, &Symmetry::TAU.apply(&params, &a));
        assert_eq!(tau2, a);
        let id = ProjPoint::identity(f);
        assert_eq!(Symmetry::TAU.apply(&params, &id), ProjPoint::new(id.point, 1));
        for g in Symmetry::all() {
            for h in Symmetry::all() {
                let gh = g.apply(&params, &h.apply(&params, &a));
                assert_eq!(gh, g.compose(&h).apply(&params, &a));
            }
            assert!(g.compose(&g.inverse()).is_identity());
        }
    }
}
