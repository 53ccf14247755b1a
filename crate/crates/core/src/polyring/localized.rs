//! Fractions whose denominators are products of designated polynomials.
//!
//! A [`LocalizedElement`] is `num * prod(f_i ^ -k_i)`. Factors are kept
//! unexpanded; a negative exponent stands for a factor that has been moved to
//! the numerator by an inversion and has not yet been cancelled. Expansion
//! happens only when a numerator or denominator polynomial is requested.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use super::monomial::Ring;
use super::polynomial::{Polynomial, RingValue};
use crate::field::{FieldElement, PrimeField};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LocalizedError {
    #[error("cannot invert {0}: numerator is the zero polynomial")]
    ZeroDenominator(String),
    #[error("denominator factor {0} vanishes at this point")]
    DenominatorVanishes(String),
}

/// A named polynomial that has been declared invertible.
#[derive(Debug)]
pub struct Factor {
    name: String,
    poly: Polynomial,
}

impl Factor {
    pub fn new(name: impl Into<String>, poly: Polynomial) -> Arc<Factor> {
        assert!(!poly.is_zero(), "the zero polynomial cannot be inverted");
        Arc::new(Factor {
            name: name.into(),
            poly,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn poly(&self) -> &Polynomial {
        &self.poly
    }

    fn same(a: &Arc<Factor>, b: &Arc<Factor>) -> bool {
        Arc::ptr_eq(a, b) || a.poly == b.poly
    }
}

#[derive(Clone)]
pub struct LocalizedElement {
    num: Polynomial,
    factors: Vec<(Arc<Factor>, i32)>,
}

fn bump(factors: &mut Vec<(Arc<Factor>, i32)>, f: &Arc<Factor>, by: i32) {
    if let Some(slot) = factors.iter_mut().find(|(g, _)| Factor::same(g, f)) {
        slot.1 += by;
    } else {
        factors.push((f.clone(), by));
    }
    factors.retain(|(_, e)| *e != 0);
}

impl LocalizedElement {
    pub fn from_poly(p: Polynomial) -> Self {
        LocalizedElement {
            num: p,
            factors: Vec::new(),
        }
    }

    pub fn zero(ring: &Arc<Ring>) -> Self {
        Self::from_poly(Polynomial::zero(ring))
    }

    pub fn one(ring: &Arc<Ring>) -> Self {
        Self::from_poly(Polynomial::one(ring))
    }

    /// `num / prod(f ^ k)`.
    pub fn fraction(num: Polynomial, den: &[(Arc<Factor>, u32)]) -> Self {
        let mut factors = Vec::new();
        for (f, k) in den {
            assert!(f.poly.ring() == num.ring() || **f.poly.ring() == **num.ring());
            bump(&mut factors, f, *k as i32);
        }
        LocalizedElement { num, factors }
    }

    /// `1 / f`.
    pub fn inverse_of(f: &Arc<Factor>) -> Self {
        Self::fraction(Polynomial::one(f.poly.ring()), &[(f.clone(), 1)])
    }

    pub fn ring(&self) -> &Arc<Ring> {
        self.num.ring()
    }

    /// Numerator with every pending numerator factor multiplied in.
    pub fn numerator(&self) -> Polynomial {
        let mut n = self.num.clone();
        for (f, e) in &self.factors {
            if *e < 0 {
                n = &n * &f.poly.pow((-*e) as u32);
            }
        }
        n
    }

    /// Denominator factors with their (positive) exponents.
    pub fn denominator_exponents(&self) -> Vec<(Arc<Factor>, u32)> {
        self.factors
            .iter()
            .filter(|(_, e)| *e > 0)
            .map(|(f, e)| (f.clone(), *e as u32))
            .collect()
    }

    /// Expanded denominator product.
    pub fn denominator(&self) -> Polynomial {
        self.factors
            .iter()
            .filter(|(_, e)| *e > 0)
            .fold(Polynomial::one(self.ring()), |acc, (f, e)| &acc * &f.poly.pow(*e as u32))
    }

    pub fn clear_denominators(&self) -> (Polynomial, Polynomial) {
        (self.numerator(), self.denominator())
    }

    /// Expands numerator factors so that all exponents are positive.
    fn normalized(&self) -> (Polynomial, Vec<(Arc<Factor>, i32)>) {
        (
            self.numerator(),
            self.factors.iter().filter(|(_, e)| *e > 0).cloned().collect(),
        )
    }

    fn combine(&self, other: &Self, subtract: bool) -> Self {
        let (a, sa) = self.normalized();
        let (b, sb) = other.normalized();
        let mut lcd: Vec<(Arc<Factor>, i32)> = sa.clone();
        for (f, e) in &sb {
            match lcd.iter_mut().find(|(g, _)| Factor::same(g, f)) {
                Some(slot) => slot.1 = slot.1.max(*e),
                None => lcd.push((f.clone(), *e)),
            }
        }
        let lift = |n: Polynomial, s: &[(Arc<Factor>, i32)]| {
            lcd.iter().fold(n, |acc, (f, e)| {
                let have = s
                    .iter()
                    .find(|(g, _)| Factor::same(g, f))
                    .map_or(0, |x| x.1);
                if *e > have {
                    &acc * &f.poly.pow((*e - have) as u32)
                } else {
                    acc
                }
            })
        };
        let a = lift(a, &sa);
        let b = lift(b, &sb);
        let num = if subtract { &a - &b } else { &a + &b };
        LocalizedElement { num, factors: lcd }
    }

    /// Multiplicative inverse, declaring the numerator as a new factor named
    /// `name`.
    pub fn invert(&self, name: &str) -> Result<Self, LocalizedError> {
        let mut factors: Vec<(Arc<Factor>, i32)> =
            self.factors.iter().map(|(f, e)| (f.clone(), -e)).collect();
        let ring = self.ring().clone();
        let n = &self.num;
        let mut sign = BigInt::one();
        match n.as_constant() {
            Some(c) if c.is_zero() => return Err(LocalizedError::ZeroDenominator(name.into())),
            Some(c) if c.abs().is_one() => sign = c,
            _ => {
                let mut poly = n.clone();
                if n.leading_coeff().is_some_and(|c| c.is_negative()) {
                    poly = -&poly;
                    sign = -sign;
                }
                bump(&mut factors, &Factor::new(name, poly), 1);
            }
        }
        Ok(LocalizedElement {
            num: Polynomial::constant(&ring, sign),
            factors,
        })
    }

    /// `self / other`, where the numerator of `other` is declared invertible.
    pub fn div(&self, other: &Self, name: &str) -> Result<Self, LocalizedError> {
        Ok(self * &other.invert(name)?)
    }

    /// Equality as fractions: `a/s = b/u` iff `a*u - b*s = 0`.
    pub fn equals(&self, other: &Self) -> bool {
        (self - other).num.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The element as a polynomial when the denominator divides the
    /// numerator exactly.
    pub fn try_into_polynomial(&self) -> Option<Polynomial> {
        let (n, s) = self.normalized();
        if s.is_empty() {
            return Some(n);
        }
        n.exact_div(&self.denominator())
    }

    /// Evaluation at a field point; every denominator factor must be a unit.
    pub fn eval_at(&self, values: &[FieldElement]) -> Result<FieldElement, LocalizedError> {
        let field = values[0].field();
        let mut acc = self.num.eval_in(field, values);
        for (f, e) in &self.factors {
            let v = f.poly.eval_in(field, values);
            if *e > 0 {
                let inv = v
                    .inv()
                    .map_err(|_| LocalizedError::DenominatorVanishes(f.name.clone()))?;
                acc = acc * inv.pow(*e as u64);
            } else {
                acc = acc * v.pow((-*e) as u64);
            }
        }
        Ok(acc)
    }

    pub fn eval_hom(
        &self,
        assignment: &[(&str, FieldElement)],
        field: PrimeField,
    ) -> Result<FieldElement, LocalizedError> {
        let ring = self.ring();
        let values: Vec<FieldElement> = ring
            .variables()
            .iter()
            .map(|name| {
                assignment
                    .iter()
                    .find(|(n, _)| n == name)
                    .map_or(field.zero(), |(_, v)| *v)
            })
            .collect();
        for name in self.num.support().into_iter().chain(
            self.factors.iter().flat_map(|(f, _)| f.poly.support()),
        ) {
            assert!(
                assignment.iter().any(|(n, _)| *n == name),
                "no value assigned to variable {name}"
            );
        }
        let mut acc = self.num.eval_in(field, &values);
        for (f, e) in &self.factors {
            let v = f.poly.eval_in(field, &values);
            if *e > 0 {
                let inv = v
                    .inv()
                    .map_err(|_| LocalizedError::DenominatorVanishes(f.name.clone()))?;
                acc = acc * inv.pow(*e as u64);
            } else {
                acc = acc * v.pow((-*e) as u64);
            }
        }
        Ok(acc)
    }

    /// Applies a polynomial substitution to numerator and every factor.
    pub fn substitute(
        &self,
        target: &Arc<Ring>,
        map: &[(&str, &Polynomial)],
    ) -> Result<Self, LocalizedError> {
        let mut num = self.num.substitute(target, map);
        let mut factors = Vec::new();
        for (f, e) in &self.factors {
            let image = f.poly.substitute(target, map);
            match image.as_constant() {
                Some(c) if c.is_zero() => {
                    return Err(LocalizedError::DenominatorVanishes(f.name.clone()))
                }
                Some(c) if c.is_one() => {}
                Some(c) if (-&c).is_one() => {
                    if e % 2 != 0 {
                        num = -&num;
                    }
                }
                _ => bump(&mut factors, &Factor::new(f.name.clone(), image), *e),
            }
        }
        Ok(LocalizedElement { num, factors })
    }

    /// Evaluates `p` with variables replaced by fractions. Variables absent
    /// from `map` map to themselves.
    pub fn eval_polynomial(p: &Polynomial, map: &[(&str, &LocalizedElement)]) -> LocalizedElement {
        let ring = p.ring();
        let images: Vec<LocalizedElement> = ring
            .variables()
            .iter()
            .map(|name| match map.iter().find(|(n, _)| n == name) {
                Some((_, v)) => (*v).clone(),
                None => LocalizedElement::from_poly(Polynomial::var(ring, name)),
            })
            .collect();
        p.eval_generic(&images, &LocalizedElement::one(ring))
            .unwrap_or_else(|| LocalizedElement::zero(ring))
    }
}

impl RingValue for LocalizedElement {
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn add_ref(&self, other: &Self) -> Self {
        self.combine(other, false)
    }
    fn scaled(&self, c: &BigInt) -> Self {
        LocalizedElement {
            num: self.num.scale(c),
            factors: self.factors.clone(),
        }
    }
}

impl std::ops::Add for &LocalizedElement {
    type Output = LocalizedElement;
    fn add(self, rhs: &LocalizedElement) -> LocalizedElement {
        self.combine(rhs, false)
    }
}

impl std::ops::Sub for &LocalizedElement {
    type Output = LocalizedElement;
    fn sub(self, rhs: &LocalizedElement) -> LocalizedElement {
        self.combine(rhs, true)
    }
}

impl std::ops::Mul for &LocalizedElement {
    type Output = LocalizedElement;
    fn mul(self, rhs: &LocalizedElement) -> LocalizedElement {
        let mut factors = self.factors.clone();
        for (f, e) in &rhs.factors {
            bump(&mut factors, f, *e);
        }
        LocalizedElement {
            num: &self.num * &rhs.num,
            factors,
        }
    }
}

impl std::ops::Neg for &LocalizedElement {
    type Output = LocalizedElement;
    fn neg(self) -> LocalizedElement {
        LocalizedElement {
            num: -&self.num,
            factors: self.factors.clone(),
        }
    }
}

impl fmt::Debug for LocalizedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.num)?;
        for (g, e) in &self.factors {
            write!(f, " * [{}]^{}", g.name, -e)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::OrderKind;

    fn ring() -> Arc<Ring> {
        Ring::new(&["x1", "x2", "y1", "y2", "c", "d"], OrderKind::Lex)
    }

    fn p(r: &Arc<Ring>, s: &str) -> Polynomial {
        Polynomial::parse(r, s).unwrap()
    }

    #[test]
    fn cancellation_and_zero() {
        let r = ring();
        let dx = Factor::new("dx", p(&r, "1 - d*x1*x2*y1*y2"));
        let a = LocalizedElement::fraction(p(&r, "x1*x2 - c*y1*y2"), &[(dx.clone(), 1)]);
        let diff = &a - &a;
        assert!(diff.is_zero());
        let back = &a * &LocalizedElement::from_poly(dx.poly().clone());
        assert!(back.equals(&LocalizedElement::from_poly(p(&r, "x1*x2 - c*y1*y2"))));
        assert_eq!(back.try_into_polynomial(), Some(p(&r, "x1*x2 - c*y1*y2")));
    }

    #[test]
    fn inversion_cancels_factors() {
        let r = ring();
        let f = Factor::new("f", p(&r, "x1 + 1"));
        let a = LocalizedElement::fraction(p(&r, "y1 - 3"), &[(f.clone(), 2)]);
        let inv = a.invert("g").unwrap();
        let prod = &a * &inv;
        assert!(prod.equals(&LocalizedElement::one(&r)));
        // f cancels; only the freshly declared numerator factor remains
        let den = prod.denominator_exponents();
        assert_eq!(den.len(), 1);
        assert_eq!(den[0].0.name(), "g");
        assert!(LocalizedElement::zero(&r).invert("z").is_err());
    }

    #[test]
    fn evaluation_and_vanishing() {
        let r = ring();
        let f = PrimeField::new(13).unwrap();
        let delta = Factor::new("delta", p(&r, "1 - d^2*x1^2*x2^2*y1^2*y2^2"));
        let a = LocalizedElement::inverse_of(&delta);
        let asg = |d: i64| {
            vec![
                ("x1", f.from_i64(2)),
                ("x2", f.from_i64(3)),
                ("y1", f.from_i64(5)),
                ("y2", f.from_i64(7)),
                ("c", f.from_i64(1)),
                ("d", f.from_i64(d)),
            ]
        };
        assert_eq!(a.eval_hom(&asg(0), f).unwrap(), f.one());
        // d*x1*x2*y1*y2 = 210*d, and 210 = 2 mod 13, so d = 7 gives 14 = 1
        assert_eq!(
            a.eval_hom(&asg(7), f),
            Err(LocalizedError::DenominatorVanishes("delta".into()))
        );
    }
}
