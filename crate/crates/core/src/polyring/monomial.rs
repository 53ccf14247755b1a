use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

/// Upper bound on the number of variables in one ring.
pub const MAX_VARS: usize = 16;

/// Exponent vector indexed by variable position in the owning ring.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial([u8; MAX_VARS]);

impl Monomial {
    pub fn one() -> Self {
        Monomial([0; MAX_VARS])
    }

    pub fn var(index: usize) -> Self {
        Self::var_pow(index, 1)
    }

    pub fn var_pow(index: usize, exp: u8) -> Self {
        let mut m = [0; MAX_VARS];
        m[index] = exp;
        Monomial(m)
    }

    pub fn from_exponents(exps: &[u8]) -> Self {
        assert!(exps.len() <= MAX_VARS);
        let mut m = [0; MAX_VARS];
        m[..exps.len()].copy_from_slice(exps);
        Monomial(m)
    }

    pub fn exponents(&self) -> &[u8; MAX_VARS] {
        &self.0
    }

    pub fn exp(&self, index: usize) -> u8 {
        self.0[index]
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut m = [0; MAX_VARS];
        for (i, slot) in m.iter_mut().enumerate() {
            *slot = self.0[i]
                .checked_add(other.0[i])
                .expect("monomial exponent overflow");
        }
        Monomial(m)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        let mut m = [0; MAX_VARS];
        for (i, slot) in m.iter_mut().enumerate() {
            *slot = other.0[i].checked_sub(self.0[i])?;
        }
        Some(Monomial(m))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut m = [0; MAX_VARS];
        for (i, slot) in m.iter_mut().enumerate() {
            *slot = self.0[i].max(other.0[i]);
        }
        Monomial(m)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0
            .iter()
            .zip(other.0.iter())
            .all(|(&a, &b)| a == 0 || b == 0)
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let last = self.0.iter().rposition(|&e| e != 0).map_or(0, |i| i + 1);
        write!(f, "{:?}", &self.0[..last])
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderKind {
    Lex,
    Grevlex,
}

impl OrderKind {
    /// Compare exponent vectors. Index 0 is the most significant variable.
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            OrderKind::Lex => a.0.cmp(&b.0),
            OrderKind::Grevlex => a.degree().cmp(&b.degree()).then_with(|| {
                for i in (0..MAX_VARS).rev() {
                    match a.0[i].cmp(&b.0[i]) {
                        Ordering::Equal => continue,
                        other => return other.reverse(),
                    }
                }
                Ordering::Equal
            }),
        }
    }
}

/// A monomial order: a kind plus the variable sequence, most significant first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MonomialOrder {
    pub kind: OrderKind,
    pub variables: Vec<String>,
}

impl MonomialOrder {
    pub fn lex<S: AsRef<str>>(vars: &[S]) -> Self {
        MonomialOrder {
            kind: OrderKind::Lex,
            variables: vars.iter().map(|v| v.as_ref().to_string()).collect(),
        }
    }

    pub fn grevlex<S: AsRef<str>>(vars: &[S]) -> Self {
        MonomialOrder {
            kind: OrderKind::Grevlex,
            variables: vars.iter().map(|v| v.as_ref().to_string()).collect(),
        }
    }
}

/// The variable universe of a polynomial ring over the integers, together
/// with the monomial order used for its canonical term ordering.
#[derive(Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    order: MonomialOrder,
}

impl Ring {
    pub fn new<S: AsRef<str>>(vars: &[S], kind: OrderKind) -> Arc<Ring> {
        Self::from_order(MonomialOrder {
            kind,
            variables: vars.iter().map(|v| v.as_ref().to_string()).collect(),
        })
    }

    pub fn from_order(order: MonomialOrder) -> Arc<Ring> {
        assert!(
            order.variables.len() <= MAX_VARS,
            "at most {MAX_VARS} variables are supported"
        );
        for (i, v) in order.variables.iter().enumerate() {
            assert!(
                !order.variables[..i].contains(v),
                "duplicate variable name {v}"
            );
            assert!(
                v.chars().next().is_some_and(|c| c.is_alphabetic())
                    && v.chars().all(|c| c.is_alphanumeric() || c == '_'),
                "invalid variable name {v:?}"
            );
        }
        Arc::new(Ring { order })
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn kind(&self) -> OrderKind {
        self.order.kind
    }

    pub fn variables(&self) -> &[String] {
        &self.order.variables
    }

    pub fn nvars(&self) -> usize {
        self.order.variables.len()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.order.variables.iter().position(|v| v == name)
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.kind.cmp(a, b)
    }

    /// Same variables under a different order kind.
    pub fn with_kind(&self, kind: OrderKind) -> Arc<Ring> {
        Ring::from_order(MonomialOrder {
            kind,
            variables: self.order.variables.clone(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lex_and_grevlex() {
        let a = Monomial::from_exponents(&[1, 0, 3]);
        let b = Monomial::from_exponents(&[0, 5, 0]);
        assert_eq!(OrderKind::Lex.cmp(&a, &b), Ordering::Greater);
        assert_eq!(OrderKind::Grevlex.cmp(&a, &b), Ordering::Less);
        // grevlex tie-break on the last variable: x*y^2 > x^2*z for x>y>z
        let c = Monomial::from_exponents(&[1, 2, 0]);
        let d = Monomial::from_exponents(&[2, 0, 1]);
        assert_eq!(OrderKind::Grevlex.cmp(&c, &d), Ordering::Greater);
    }

    #[test]
    fn orders_are_multiplicative() {
        let ms: Vec<Monomial> = (0..27u8)
            .map(|i| Monomial::from_exponents(&[i % 3, (i / 3) % 3, i / 9]))
            .collect();
        for kind in [OrderKind::Lex, OrderKind::Grevlex] {
            for u in &ms {
                for v in &ms {
                    for w in &ms {
                        assert_eq!(kind.cmp(u, v), kind.cmp(&u.mul(w), &v.mul(w)));
                    }
                }
            }
        }
    }

    #[test]
    fn divisibility() {
        let a = Monomial::from_exponents(&[1, 2]);
        let b = Monomial::from_exponents(&[2, 2, 1]);
        assert!(a.divides(&b));
        assert_eq!(a.quotient_of(&b), Some(Monomial::from_exponents(&[1, 0, 1])));
        assert_eq!(b.quotient_of(&a), None);
        assert!(!a.is_coprime(&b));
        assert!(Monomial::var(0).is_coprime(&Monomial::var(1)));
    }
}
