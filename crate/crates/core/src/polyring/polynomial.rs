use std::cmp::Ordering;
use std::collections::HashMap;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::monomial::{Monomial, Ring};
use crate::field::{FieldElement, PrimeField};

/// Sparse polynomial with integer coefficients.
///
/// Terms are kept sorted in decreasing order under the ring's monomial order
/// and never carry a zero coefficient, so structural equality is equality of
/// polynomials.
#[derive(Clone)]
pub struct Polynomial {
    ring: Arc<Ring>,
    terms: Vec<(Monomial, BigInt)>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring)
            && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl std::hash::Hash for Polynomial {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

/// Values that a polynomial can be evaluated into.
pub trait RingValue: Clone {
    fn mul_ref(&self, other: &Self) -> Self;
    fn add_ref(&self, other: &Self) -> Self;
    fn scaled(&self, c: &BigInt) -> Self;
}

impl Polynomial {
    pub fn zero(ring: &Arc<Ring>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(ring: &Arc<Ring>) -> Self {
        Self::constant(ring, 1)
    }

    pub fn constant(ring: &Arc<Ring>, c: impl Into<BigInt>) -> Self {
        Self::term(ring, Monomial::one(), c)
    }

    pub fn term(ring: &Arc<Ring>, m: Monomial, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let terms = if c.is_zero() { vec![] } else { vec![(m, c)] };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// The variable `name`. Panics if the ring does not contain it.
    pub fn var(ring: &Arc<Ring>, name: &str) -> Self {
        let i = ring
            .index_of(name)
            .unwrap_or_else(|| panic!("variable {name} not in ring {:?}", ring.variables()));
        Self::term(ring, Monomial::var(i), 1)
    }

    /// Builds a polynomial from arbitrary terms, combining duplicates.
    pub fn from_terms(ring: &Arc<Ring>, terms: impl IntoIterator<Item = (Monomial, BigInt)>) -> Self {
        let mut acc: HashMap<Monomial, BigInt> = HashMap::new();
        for (m, c) in terms {
            *acc.entry(m).or_default() += c;
        }
        Self::from_map(ring, acc)
    }

    fn from_map(ring: &Arc<Ring>, acc: HashMap<Monomial, BigInt>) -> Self {
        let mut terms: Vec<(Monomial, BigInt)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| ring.cmp(&b.0, &a.0));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Trusts the caller that `terms` are sorted, distinct and nonzero.
    pub(crate) fn from_sorted_terms(ring: &Arc<Ring>, terms: Vec<(Monomial, BigInt)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| ring.cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, BigInt)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, BigInt)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    /// The constant value, if this polynomial is constant.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.as_slice() {
            [] => Some(BigInt::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn leading_term(&self) -> Option<&(Monomial, BigInt)> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<Monomial> {
        self.terms.first().map(|t| t.0)
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.terms.first().map(|t| &t.1)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
    }

    /// Names of the variables that actually occur.
    pub fn support(&self) -> Vec<&str> {
        let vars = self.ring.variables();
        (0..vars.len())
            .filter(|&i| self.terms.iter().any(|(m, _)| m.exp(i) > 0))
            .map(|i| vars[i].as_str())
            .collect()
    }

    /// Nonnegative gcd of all coefficients.
    pub fn content(&self) -> BigInt {
        self.terms
            .iter()
            .fold(BigInt::zero(), |g, (_, c)| g.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive(&self) -> Polynomial {
        let mut g = self.content();
        if g.is_zero() {
            return self.clone();
        }
        if self.terms[0].1.is_negative() {
            g = -g;
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (*m, c / &g)).collect(),
        }
    }

    fn check_ring(&self, other: &Polynomial) {
        assert!(
            Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring,
            "polynomials from different rings: {:?} vs {:?}",
            self.ring.order(),
            other.ring.order()
        );
    }

    fn merge(&self, other: &Polynomial, negate_other: bool) -> Polynomial {
        self.check_ring(other);
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        let sign = |c: &BigInt| if negate_other { -c } else { c.clone() };
        while i < a.len() && j < b.len() {
            match self.ring.cmp(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((b[j].0, sign(&b[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_other { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| (*m, sign(c))));
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    pub fn scale(&self, c: &BigInt) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect(),
        }
    }

    /// Multiplies by the single term `c * m`; the order is preserved.
    pub fn mul_term(&self, m: &Monomial, c: &BigInt) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(t, x)| (t.mul(m), x * c)).collect(),
        }
    }

    fn mul_poly(&self, other: &Polynomial) -> Polynomial {
        self.check_ring(other);
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        if other.terms.len() == 1 {
            return self.mul_term(&other.terms[0].0, &other.terms[0].1);
        }
        if self.terms.len() == 1 {
            return other.mul_term(&self.terms[0].0, &self.terms[0].1);
        }
        let mut acc: HashMap<Monomial, BigInt> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let e = acc.entry(ma.mul(mb)).or_default();
                *e += ca * cb;
            }
        }
        Self::from_map(&self.ring, acc)
    }

    pub fn pow(&self, n: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`
    /// over the integers.
    pub fn exact_div(&self, d: &Polynomial) -> Option<Polynomial> {
        self.check_ring(d);
        let (lm, lc) = d.leading_term()?.clone();
        let mut rest = self.clone();
        let mut quotient = Vec::new();
        while let Some((m, c)) = rest.leading_term().cloned() {
            let qm = lm.quotient_of(&m)?;
            let (qc, r) = c.div_rem(&lc);
            if !r.is_zero() {
                return None;
            }
            rest = &rest - &d.mul_term(&qm, &qc);
            quotient.push((qm, qc));
        }
        Some(Polynomial::from_sorted_terms(&self.ring, quotient))
    }

    /// Evaluates into any commutative ring. `images[i]` is the value of the
    /// `i`-th ring variable and `one` the unit of the target.
    pub fn eval_generic<T: RingValue>(&self, images: &[T], one: &T) -> Option<T> {
        assert_eq!(images.len(), self.ring.nvars());
        let mut powers: Vec<Vec<T>> = vec![vec![one.clone()]; images.len()];
        let mut sum: Option<T> = None;
        for (m, c) in &self.terms {
            let mut term: Option<T> = None;
            for (i, image) in images.iter().enumerate() {
                let e = m.exp(i) as usize;
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e {
                    let next = powers[i].last().unwrap().mul_ref(image);
                    powers[i].push(next);
                }
                term = Some(match term {
                    None => powers[i][e].clone(),
                    Some(t) => t.mul_ref(&powers[i][e]),
                });
            }
            let term = term.unwrap_or_else(|| one.clone()).scaled(c);
            sum = Some(match sum {
                None => term,
                Some(s) => s.add_ref(&term),
            });
        }
        sum
    }

    /// Ring homomorphism into `target`. Each variable of this ring maps to the
    /// image in `map`, or to the variable of the same name in `target`.
    pub fn substitute(&self, target: &Arc<Ring>, map: &[(&str, &Polynomial)]) -> Polynomial {
        let images: Vec<Polynomial> = self
            .ring
            .variables()
            .iter()
            .map(|name| match map.iter().find(|(n, _)| n == name) {
                Some((_, p)) => {
                    assert!(Arc::ptr_eq(p.ring(), target) || **p.ring() == **target);
                    (*p).clone()
                }
                None => match target.index_of(name) {
                    Some(_) => Polynomial::var(target, name),
                    // unused variables may be absent from the target
                    None => Polynomial::zero(target),
                },
            })
            .collect();
        for (i, name) in self.ring.variables().iter().enumerate() {
            if target.index_of(name).is_none() && !map.iter().any(|(n, _)| n == name) {
                assert!(
                    self.terms.iter().all(|(m, _)| m.exp(i) == 0),
                    "substitution leaves variable {name} without an image"
                );
            }
        }
        self.substitute_images(target, &images)
    }

    fn substitute_images(&self, target: &Arc<Ring>, images: &[Polynomial]) -> Polynomial {
        let mut powers: Vec<Vec<Polynomial>> = vec![vec![Polynomial::one(target)]; images.len()];
        let mut acc: HashMap<Monomial, BigInt> = HashMap::new();
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(target, c.clone());
            for (i, image) in images.iter().enumerate() {
                let e = m.exp(i) as usize;
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e {
                    let next = powers[i].last().unwrap() * image;
                    powers[i].push(next);
                }
                term = &term * &powers[i][e];
            }
            for (tm, tc) in term.terms {
                *acc.entry(tm).or_default() += tc;
            }
        }
        Polynomial::from_map(target, acc)
    }

    /// Re-expresses this polynomial in another ring by variable name.
    pub fn to_ring(&self, target: &Arc<Ring>) -> Polynomial {
        if Arc::ptr_eq(&self.ring, target) {
            return self.clone();
        }
        let map: Vec<Option<usize>> = self
            .ring
            .variables()
            .iter()
            .map(|v| target.index_of(v))
            .collect();
        let terms = self.terms.iter().map(|(m, c)| {
            let mut exps = [0u8; super::monomial::MAX_VARS];
            for (i, slot) in map.iter().enumerate() {
                let e = m.exp(i);
                if e == 0 {
                    continue;
                }
                let j = slot.unwrap_or_else(|| {
                    panic!("variable {} missing from target ring", self.ring.variables()[i])
                });
                exps[j] = e;
            }
            (Monomial::from_exponents(&exps), c.clone())
        });
        if self.ring.variables() == target.variables() && self.ring.kind() == target.kind() {
            return Polynomial::from_sorted_terms(target, terms.collect());
        }
        Polynomial::from_terms(target, terms)
    }

    /// Evaluation at a point given by one field element per ring variable.
    pub fn eval_at(&self, values: &[FieldElement]) -> FieldElement {
        assert_eq!(values.len(), self.ring.nvars());
        let field = values
            .first()
            .map(|v| v.field())
            .expect("ring has at least one variable");
        self.eval_in(field, values)
    }

    pub(crate) fn eval_in(&self, field: PrimeField, values: &[FieldElement]) -> FieldElement {
        let mut powers: Vec<Vec<FieldElement>> = vec![vec![field.one()]; values.len()];
        let mut sum = field.zero();
        for (m, c) in &self.terms {
            let mut t = field.from_bigint(c);
            for (i, v) in values.iter().enumerate() {
                let e = m.exp(i) as usize;
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e {
                    let next = *powers[i].last().unwrap() * *v;
                    powers[i].push(next);
                }
                t = t * powers[i][e];
            }
            sum = sum + t;
        }
        sum
    }

    /// Evaluation under an assignment by variable name. Unassigned variables
    /// that do not occur are ignored.
    pub fn eval_hom(&self, assignment: &[(&str, FieldElement)], field: PrimeField) -> FieldElement {
        let values = self.assignment_values(assignment, field);
        self.eval_in(field, &values)
    }

    pub(crate) fn assignment_values(&self, assignment: &[(&str, FieldElement)], field: PrimeField) -> Vec<FieldElement> {
        let support = self.support();
        self.ring
            .variables()
            .iter()
            .map(|name| match assignment.iter().find(|(n, _)| n == name) {
                Some((_, v)) => {
                    assert_eq!(v.modulus(), field.modulus());
                    *v
                }
                None => {
                    assert!(
                        !support.contains(&name.as_str()),
                        "no value assigned to variable {name}"
                    );
                    field.zero()
                }
            })
            .collect()
    }
}

impl RingValue for Polynomial {
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn scaled(&self, c: &BigInt) -> Self {
        self.scale(c)
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.merge(rhs, false)
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.merge(rhs, true)
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.mul_poly(rhs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
        impl<'a> $tr<Polynomial> for &'a Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
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
    fn additive_identities() {
        let r = ring();
        let e1 = p(&r, "x1^2 + c*y1^2 - 1 - d*x1^2*y1^2");
        assert!((&e1 + &(-&e1)).is_zero());
        let x = Polynomial::var(&r, "x1");
        assert_eq!(&x + &x, p(&r, "2*x1"));
        assert_eq!(&e1 + &Polynomial::one(&r), p(&r, "x1^2 + c*y1^2 - d*x1^2*y1^2"));
    }

    #[test]
    fn delta_product() {
        let r = ring();
        let dm = p(&r, "1 - d*x1*y1*x2*y2");
        let dp = p(&r, "1 + d*x1*y1*x2*y2");
        assert_eq!(&dm * &dp, p(&r, "1 - d^2*x1^2*y1^2*x2^2*y2^2"));
        assert!((&dm * &Polynomial::zero(&r)).is_zero());
        let x = Polynomial::var(&r, "x1");
        let one = Polynomial::one(&r);
        assert_eq!(&(&x + &one) * &(&x - &one), p(&r, "x1^2 - 1"));
    }

    #[test]
    fn substitution() {
        let r = ring();
        let dm = p(&r, "1 - d*x1*y1*x2*y2");
        let dp = p(&r, "1 + d*x1*y1*x2*y2");
        let delta = &dm * &dp;
        let x1 = Polynomial::var(&r, "x1");
        let y1 = Polynomial::var(&r, "y1");
        let d11 = delta.substitute(&r, &[("x2", &x1), ("y2", &y1)]);
        assert_eq!(d11, p(&r, "(1 - d*x1^2*y1^2)*(1 + d*x1^2*y1^2)"));
        assert_eq!(delta.substitute(&r, &[]), delta);
    }

    #[test]
    fn exact_division() {
        let r = ring();
        let a = p(&r, "x1^2 - y1^2");
        let b = p(&r, "x1 - y1");
        assert_eq!(a.exact_div(&b), Some(p(&r, "x1 + y1")));
        assert_eq!(p(&r, "x1^2 + 1").exact_div(&b), None);
        assert_eq!(p(&r, "3*x1").exact_div(&p(&r, "2*x1")), None);
    }

    #[test]
    fn primitive_part() {
        let r = ring();
        let a = p(&r, "-6*x1 + 4*y1");
        assert_eq!(a.content(), BigInt::from(2));
        assert_eq!(a.primitive(), p(&r, "3*x1 - 2*y1"));
    }

    #[test]
    fn ring_change_keeps_canonical_form() {
        let r = ring();
        let g = r.with_kind(OrderKind::Grevlex);
        let a = p(&r, "x1^2 + x2*y1*y2 - d");
        let b = a.to_ring(&g);
        assert_eq!(b.leading_monomial(), p(&g, "x2*y1*y2").leading_monomial());
        assert_eq!(b.to_ring(&r), a);
    }
}
