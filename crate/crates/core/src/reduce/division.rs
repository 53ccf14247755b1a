use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::certificate::ReductionCertificate;
use crate::polyring::{Monomial, MonomialOrder, OrderKind, Polynomial, Ring};

/// Monomial keyed by a fixed order kind, so a `BTreeMap` iterates in
/// monomial order.
#[derive(Clone, Copy, PartialEq, Eq)]
struct Key {
    kind: OrderKind,
    m: Monomial,
}

impl Ord for Key {
    fn cmp(&self, other: &Self) -> Ordering {
        self.kind.cmp(&self.m, &other.m)
    }
}

impl PartialOrd for Key {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub(crate) struct Division {
    pub quotients: Vec<Polynomial>,
    pub remainder: Polynomial,
    pub multiplier: BigInt,
}

/// Naive multivariate division with remainder. At each step the leading term
/// of the running dividend is cancelled by the first divisor (in list order)
/// whose leading monomial divides it, or moved to the remainder.
///
/// Division is over the integers. When a divisor's leading coefficient does
/// not divide the current one, every partial result is scaled by the missing
/// factor; the accumulated scaling is returned as `multiplier`, so that
/// `multiplier * dividend = sum(quotients[i] * divisors[i]) + remainder`.
pub(crate) fn divide(dividend: &Polynomial, divisors: &[Polynomial]) -> Division {
    let ring = dividend.ring().clone();
    let kind = ring.kind();
    let mut work: BTreeMap<Key, BigInt> = dividend
        .terms()
        .iter()
        .map(|(m, c)| (Key { kind, m: *m }, c.clone()))
        .collect();
    let mut quotients: Vec<Vec<(Monomial, BigInt)>> = vec![Vec::new(); divisors.len()];
    let mut remainder: Vec<(Monomial, BigInt)> = Vec::new();
    let mut multiplier = BigInt::one();

    let leads: Vec<Option<(Monomial, BigInt)>> =
        divisors.iter().map(|g| g.leading_term().cloned()).collect();

    while let Some((key, mut c)) = work.pop_last() {
        let m = key.m;
        let hit = leads.iter().enumerate().find_map(|(i, lt)| {
            let (gm, gc) = lt.as_ref()?;
            gm.quotient_of(&m).map(|qm| (i, qm, gc))
        });
        let Some((i, qm, gc)) = hit else {
            remainder.push((m, c));
            continue;
        };
        if !c.is_multiple_of(gc) {
            let k = (gc / c.gcd(gc)).abs();
            for v in work.values_mut() {
                *v *= &k;
            }
            for (_, v) in remainder.iter_mut() {
                *v *= &k;
            }
            for q in quotients.iter_mut() {
                for (_, v) in q.iter_mut() {
                    *v *= &k;
                }
            }
            multiplier *= &k;
            c *= &k;
        }
        let qc = &c / gc;
        for (tm, tc) in &divisors[i].terms()[1..] {
            let key = Key {
                kind,
                m: tm.mul(&qm),
            };
            let delta = &qc * tc;
            match work.entry(key) {
                Entry::Occupied(mut o) => {
                    *o.get_mut() -= delta;
                    if o.get().is_zero() {
                        o.remove();
                    }
                }
                Entry::Vacant(v) => {
                    v.insert(-delta);
                }
            }
        }
        quotients[i].push((qm, qc));
    }

    Division {
        quotients: quotients
            .into_iter()
            .map(|q| Polynomial::from_sorted_terms(&ring, q))
            .collect(),
        remainder: Polynomial::from_sorted_terms(&ring, remainder),
        multiplier,
    }
}

pub(crate) fn ring_for(order: &MonomialOrder, hint: &Arc<Ring>) -> Arc<Ring> {
    if hint.order() == order {
        hint.clone()
    } else {
        Ring::from_order(order.clone())
    }
}

/// Divides `r` by `divisors` under `order` and packages the result as a
/// certificate. Inputs are moved into the ring of `order` by variable name.
pub fn poly_reduce(r: &Polynomial, divisors: &[Polynomial], order: &MonomialOrder) -> ReductionCertificate {
    assert!(!divisors.is_empty(), "division needs at least one divisor");
    let ring = ring_for(order, r.ring());
    let dividend = r.to_ring(&ring);
    let divisors: Vec<Polynomial> = divisors.iter().map(|g| g.to_ring(&ring)).collect();
    let div = divide(&dividend, &divisors);
    ReductionCertificate {
        dividend,
        divisors,
        quotients: div.quotients,
        remainder: div.remainder,
        multiplier: div.multiplier,
        order: order.clone(),
    }
}

/// Whether `r` has zero remainder modulo `divisors`; the certificate is
/// returned either way.
pub fn reduces_to_zero(
    r: &Polynomial,
    divisors: &[Polynomial],
    order: &MonomialOrder,
) -> (bool, ReductionCertificate) {
    let cert = poly_reduce(r, divisors, order);
    (cert.remainder.is_zero(), cert)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn setup() -> (Arc<Ring>, MonomialOrder) {
        let r = Ring::new(&["x1", "x2", "y1", "y2", "c", "d"], OrderKind::Lex);
        let o = r.order().clone();
        (r, o)
    }

    fn p(r: &Arc<Ring>, s: &str) -> Polynomial {
        Polynomial::parse(r, s).unwrap()
    }

    #[test]
    fn self_division() {
        let (r, o) = setup();
        let e1 = p(&r, "x1^2 + c*y1^2 - 1 - d*x1^2*y1^2");
        let cert = poly_reduce(&e1, std::slice::from_ref(&e1), &o);
        assert_eq!(cert.quotients, vec![Polynomial::one(&r)]);
        assert!(cert.remainder.is_zero());
        assert!(cert.verify());
    }

    #[test]
    fn monomial_division() {
        let (r, o) = setup();
        let cert = poly_reduce(&p(&r, "x1*y1"), &[p(&r, "x1")], &o);
        assert_eq!(cert.quotients, vec![p(&r, "y1")]);
        assert!(cert.remainder.is_zero());
    }

    #[test]
    fn nonzero_remainder() {
        let (r, o) = setup();
        let e1 = p(&r, "x1^2 + c*y1^2 - 1 - d*x1^2*y1^2");
        let (zero, cert) = reduces_to_zero(&(&e1 + &Polynomial::one(&r)), std::slice::from_ref(&e1), &o);
        assert!(!zero);
        assert_eq!(cert.remainder, Polynomial::one(&r));
        assert!(cert.verify());
        assert!(cert.remainder_is_reduced());
        let (zero, _) = reduces_to_zero(&Polynomial::zero(&r), &[e1], &o);
        assert!(zero);
    }

    #[test]
    fn non_unit_leading_coefficient_uses_multiplier() {
        let (r, o) = setup();
        let cert = poly_reduce(&p(&r, "x1 + 1"), &[p(&r, "2*x1 - 4")], &o);
        assert_eq!(cert.multiplier, BigInt::from(2));
        assert_eq!(cert.remainder, p(&r, "6"));
        assert!(cert.verify());
    }

    #[test]
    fn grevlex_order_is_honoured() {
        let (r, _) = setup();
        let g = MonomialOrder::grevlex(r.variables());
        let cert = poly_reduce(&p(&r, "x1 + y2^3"), &[p(&r, "y2^3 - x1")], &g);
        // under grevlex y2^3 leads, so the whole thing reduces to 2*x1
        assert_eq!(cert.remainder.to_string(), "2*x1");
        assert_eq!(cert.order.kind, OrderKind::Grevlex);
        assert!(cert.verify());
    }
}
