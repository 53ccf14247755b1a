//! Prime-field arithmetic for odd primes below 2^63.
//!
//! Elements carry their modulus so that they can be passed around without a
//! separate field handle. Mixing elements of different fields is a logic error
//! and panics.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::Serialize;
use thiserror::Error;

/// Prime used for random-evaluation audits of polynomial certificates.
///
/// This is the largest prime below 2^62, so any product of two reduced
/// residues fits comfortably in a `u128`.
pub const AUDIT_PRIME: u64 = (1u64 << 62) - 57;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("modulus {0} is not prime")]
    NotPrime(u64),
    #[error("modulus {0} is even: characteristic two is not supported")]
    EvenCharacteristic(u64),
    #[error("modulus {0} is too large (must be below 2^63)")]
    TooLarge(u64),
    #[error("division by zero")]
    DivisionByZero,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, FieldError> {
        if p == 2 {
            return Err(FieldError::EvenCharacteristic(p));
        }
        if p >= 1u64 << 63 {
            return Err(FieldError::TooLarge(p));
        }
        if !primal_check::miller_rabin(p) {
            return Err(FieldError::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    /// The audit field used by certificate checks.
    pub fn audit() -> Self {
        PrimeField { p: AUDIT_PRIME }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement { value: 0, p: self.p }
    }

    pub fn one(&self) -> FieldElement {
        FieldElement { value: 1, p: self.p }
    }

    pub fn from_u64(&self, v: u64) -> FieldElement {
        FieldElement {
            value: v % self.p,
            p: self.p,
        }
    }

    pub fn from_i64(&self, v: i64) -> FieldElement {
        let r = (v as i128).rem_euclid(self.p as i128);
        FieldElement {
            value: r as u64,
            p: self.p,
        }
    }

    pub fn from_bigint(&self, v: &BigInt) -> FieldElement {
        let r = v.mod_floor(&BigInt::from(self.p));
        FieldElement {
            value: r.to_u64().expect("residue fits in u64"),
            p: self.p,
        }
    }

    /// All elements `0, 1, ..., p-1` in increasing order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.p).map(move |v| FieldElement { value: v, p: self.p })
    }
}

impl fmt::Display for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.p)
    }
}

/// A canonical residue in `[0, p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement {
    value: u64,
    p: u64,
}

impl FieldElement {
    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn field(&self) -> PrimeField {
        PrimeField { p: self.p }
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    pub fn is_one(&self) -> bool {
        self.value == 1
    }

    pub fn pow(&self, mut e: u64) -> FieldElement {
        let mut base = *self;
        let mut acc = self.field().one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse via the extended Euclidean algorithm.
    pub fn inv(&self) -> Result<FieldElement, FieldError> {
        if self.value == 0 {
            return Err(FieldError::DivisionByZero);
        }
        let (mut r0, mut r1) = (self.p as i128, self.value as i128);
        let (mut s0, mut s1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (s0, s1) = (s1, s0 - q * s1);
        }
        debug_assert_eq!(r0, 1);
        Ok(FieldElement {
            value: s0.rem_euclid(self.p as i128) as u64,
            p: self.p,
        })
    }

    pub fn div(&self, rhs: FieldElement) -> Result<FieldElement, FieldError> {
        Ok(*self * rhs.inv()?)
    }

    /// Euler's criterion. Zero counts as a square.
    pub fn is_square(&self) -> bool {
        self.value == 0 || self.pow((self.p - 1) / 2).is_one()
    }

    /// Membership in the group of nonzero squares.
    pub fn is_nonzero_square(&self) -> bool {
        self.value != 0 && self.is_square()
    }

    fn check_same(&self, other: &FieldElement) {
        assert_eq!(
            self.p, other.p,
            "field elements from different fields ({} vs {})",
            self.p, other.p
        );
    }
}

impl Add for FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: FieldElement) -> FieldElement {
        self.check_same(&rhs);
        let s = self.value as u128 + rhs.value as u128;
        FieldElement {
            value: (s % self.p as u128) as u64,
            p: self.p,
        }
    }
}

impl Sub for FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: FieldElement) -> FieldElement {
        self.check_same(&rhs);
        let v = if self.value >= rhs.value {
            self.value - rhs.value
        } else {
            self.p - (rhs.value - self.value)
        };
        FieldElement { value: v, p: self.p }
    }
}

impl Mul for FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: FieldElement) -> FieldElement {
        self.check_same(&rhs);
        let m = self.value as u128 * rhs.value as u128;
        FieldElement {
            value: (m % self.p as u128) as u64,
            p: self.p,
        }
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        if self.value == 0 {
            self
        } else {
            FieldElement {
                value: self.p - self.value,
                p: self.p,
            }
        }
    }
}

impl Serialize for FieldElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_u64(self.value)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f13() -> PrimeField {
        PrimeField::new(13).unwrap()
    }

    #[test]
    fn small_arithmetic() {
        let f = f13();
        assert_eq!((f.from_u64(7) + f.from_u64(8)).value(), 2);
        assert_eq!((f.from_u64(4) * f.from_u64(4)).value(), 3);
        let a = f.from_u64(9);
        assert!((a - a).is_zero());
        assert_eq!(f.from_i64(-1).value(), 12);
    }

    #[test]
    fn inverses() {
        let f = f13();
        assert_eq!(f.one().inv().unwrap(), f.one());
        assert_eq!(f.from_u64(5).inv().unwrap().value(), 8);
        assert_eq!(f.zero().inv(), Err(FieldError::DivisionByZero));
    }

    #[test]
    fn squares_mod_13() {
        let f = f13();
        assert!(f.from_u64(4).is_square());
        assert!(!f.from_u64(2).is_square());
        assert!(f.zero().is_square());
        assert!(!f.zero().is_nonzero_square());
        let squares: Vec<u64> = f
            .elements()
            .filter(|a| a.is_square())
            .map(|a| a.value())
            .collect();
        assert_eq!(squares, vec![0, 1, 3, 4, 9, 10, 12]);
    }

    #[test]
    fn rejects_bad_moduli() {
        assert_eq!(PrimeField::new(2), Err(FieldError::EvenCharacteristic(2)));
        assert_eq!(PrimeField::new(15), Err(FieldError::NotPrime(15)));
        assert_eq!(PrimeField::new(1), Err(FieldError::NotPrime(1)));
        assert!(PrimeField::new(AUDIT_PRIME).is_ok());
        const { assert!(AUDIT_PRIME >= 1u64 << 60) };
    }

    #[test]
    fn euler_criterion_matches_enumeration() {
        for p in (3..=101u64).filter(|&p| PrimeField::new(p).is_ok()) {
            let f = PrimeField::new(p).unwrap();
            let mut table = vec![false; p as usize];
            for b in f.elements() {
                table[(b * b).value() as usize] = true;
            }
            for a in f.elements() {
                assert_eq!(a.is_square(), table[a.value() as usize], "p={p} a={a}");
            }
        }
    }

    #[test]
    fn inverse_matches_fermat() {
        for p in [3u64, 13, 101, 65_537] {
            let f = PrimeField::new(p).unwrap();
            for v in 1..p.min(500) {
                let a = f.from_u64(v);
                assert_eq!(a.inv().unwrap(), a.pow(p - 2));
            }
        }
    }

    proptest! {
        #[test]
        fn audit_field_axioms(a in any::<u64>(), b in any::<u64>(), c in any::<u64>()) {
            let f = PrimeField::audit();
            let (a, b, c) = (f.from_u64(a), f.from_u64(b), f.from_u64(c));
            prop_assert_eq!((a + b) * c, a * c + b * c);
            prop_assert_eq!(a - b + b, a);
            prop_assert_eq!(a + (-a), f.zero());
            if !a.is_zero() {
                prop_assert_eq!(a * a.inv().unwrap(), f.one());
            }
        }
    }
}
