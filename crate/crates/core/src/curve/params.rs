use std::fmt;

use serde::Serialize;

use super::CurveError;
use crate::field::{FieldElement, PrimeField};

/// Coefficients of `x^2 + c*y^2 - 1 - d*x^2*y^2` over a prime field.
pub trait EdwardsParams {
    fn field(&self) -> PrimeField;
    fn c(&self) -> FieldElement;
    fn d(&self) -> FieldElement;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AffineParams {
    pub field: PrimeField,
    pub c: FieldElement,
    pub d: FieldElement,
    /// `c` is a square and `d` is not a nonzero square.
    pub complete: bool,
}

impl AffineParams {
    pub fn new(field: PrimeField, c: FieldElement, d: FieldElement) -> Self {
        AffineParams {
            field,
            c,
            d,
            complete: c.is_square() && !d.is_nonzero_square(),
        }
    }

    pub fn from_ints(p: u64, c: i64, d: i64) -> Result<Self, CurveError> {
        let field = PrimeField::new(p)?;
        Ok(AffineParams::new(field, field.from_i64(c), field.from_i64(d)))
    }

    /// The circle `x^2 + y^2 = 1`.
    pub fn circle(p: u64) -> Result<Self, CurveError> {
        AffineParams::from_ints(p, 1, 0)
    }

    /// Why the parameters fail completeness, if they do.
    pub fn incompleteness(&self) -> Option<String> {
        let p = self.field.modulus();
        if !self.c.is_square() {
            Some(format!("c = {} is not a square mod {p}", self.c))
        } else if self.d.is_nonzero_square() {
            Some(format!("d = {} is a nonzero square mod {p}, so some sums have a vanishing denominator", self.d))
        } else {
            None
        }
    }

    pub fn require_complete(&self) -> Result<(), CurveError> {
        match self.incompleteness() {
            Some(why) => Err(CurveError::ParamsNotComplete(why)),
            None => Ok(()),
        }
    }
}

impl EdwardsParams for AffineParams {
    fn field(&self) -> PrimeField {
        self.field
    }
    fn c(&self) -> FieldElement {
        self.c
    }
    fn d(&self) -> FieldElement {
        self.d
    }
}

impl fmt::Display for AffineParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p={} c={} d={}", self.field.modulus(), self.c, self.d)
    }
}

/// The t-form `x^2 + y^2 = 1 + t^2*x^2*y^2`, with `t != 0` and `t^2 != 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ProjParams {
    pub field: PrimeField,
    pub t: FieldElement,
}

impl ProjParams {
    pub fn new(field: PrimeField, t: FieldElement) -> Result<Self, CurveError> {
        let p = field.modulus();
        if t.is_zero() {
            return Err(CurveError::InvalidParams(format!("t is zero mod {p}")));
        }
        if (t * t).is_one() {
            return Err(CurveError::InvalidParams(format!(
                "t^2 = 1 mod {p}: the curve degenerates into lines"
            )));
        }
        Ok(ProjParams { field, t })
    }

    pub fn from_ints(p: u64, t: i64) -> Result<Self, CurveError> {
        let field = PrimeField::new(p)?;
        ProjParams::new(field, field.from_i64(t))
    }
}

impl EdwardsParams for ProjParams {
    fn field(&self) -> PrimeField {
        self.field
    }
    fn c(&self) -> FieldElement {
        self.field.one()
    }
    fn d(&self) -> FieldElement {
        self.t * self.t
    }
}

impl fmt::Display for ProjParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p={} t={}", self.field.modulus(), self.t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn completeness_follows_quadratic_character() {
        assert!(AffineParams::from_ints(13, 1, 2).unwrap().complete);
        assert!(AffineParams::from_ints(13, 1, 0).unwrap().complete);
        let bad = AffineParams::from_ints(13, 1, 4).unwrap();
        assert!(!bad.complete);
        assert!(bad.incompleteness().unwrap().contains("nonzero square"));
        assert!(!AffineParams::from_ints(13, 2, 2).unwrap().complete);
    }

    #[test]
    fn degenerate_t_is_rejected() {
        assert!(ProjParams::from_ints(13, 0).is_err());
        assert!(ProjParams::from_ints(13, 1).is_err());
        assert!(ProjParams::from_ints(13, -1).is_err());
        assert!(ProjParams::from_ints(13, 2).is_ok());
        assert!(ProjParams::from_ints(4, 2).is_err());
    }
}
