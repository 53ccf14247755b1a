use super::OracleError;
use crate::curve::{on_curve, AffinePoint, EdwardsParams, ProjParams, ProjPoint};

/// Largest modulus accepted by the O(p^2) scans unless a cap is given.
pub const DEFAULT_PRIME_CAP: u64 = 1000;

fn check_cap(p: u64, cap: u64) -> Result<(), OracleError> {
    if p > cap {
        Err(OracleError::CapExceeded { p, cap })
    } else {
        Ok(())
    }
}

/// Every affine point, in increasing `(x, y)` order.
pub fn enumerate_points<C: EdwardsParams>(params: &C, cap: u64) -> Result<Vec<AffinePoint>, OracleError> {
    let field = params.field();
    check_cap(field.modulus(), cap)?;
    let mut out = Vec::new();
    for x in field.elements() {
        for y in field.elements() {
            let p = AffinePoint::new(x, y);
            if on_curve(params, &p) {
                out.push(p);
            }
        }
    }
    Ok(out)
}

/// Canonical points of the glued curve: chart 0 for every affine point, plus
/// chart 1 for the four points with a zero coordinate.
pub fn enumerate_projective(params: &ProjParams, cap: u64) -> Result<Vec<ProjPoint>, OracleError> {
    let affine = enumerate_points(params, cap)?;
    let mut out: Vec<ProjPoint> = affine.iter().map(|p| ProjPoint::new(*p, 0)).collect();
    out.extend(affine.iter().filter(|p| !p.is_regular()).map(|p| ProjPoint::new(*p, 1)));
    Ok(out)
}
