use std::sync::Arc;

use num_bigint::BigInt;
use proptest::prelude::*;

use edwards_proof::polyring::{Monomial, OrderKind, Polynomial, Ring};
use edwards_proof::reduce::{buchberger, poly_reduce, reduce_in_ideal, verify_certificate};

fn ring(kind: OrderKind) -> Arc<Ring> {
    Ring::new(&["x", "y", "z"], kind)
}

fn poly(ring: Arc<Ring>, max_terms: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(((0u8..3, 0u8..3, 0u8..3), -9i64..10), 0..max_terms).prop_map(move |terms| {
        Polynomial::from_terms(
            &ring,
            terms
                .into_iter()
                .map(|((a, b, c), k)| (Monomial::from_exponents(&[a, b, c]), BigInt::from(k))),
        )
    })
}

fn kinds() -> impl Strategy<Value = OrderKind> {
    prop_oneof![Just(OrderKind::Lex), Just(OrderKind::Grevlex)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn division_certificates_verify(
        (f, g, h) in kinds().prop_flat_map(|k| (poly(ring(k), 6), poly(ring(k), 4), poly(ring(k), 4)))
    ) {
        let gs: Vec<_> = [g, h].into_iter().filter(|p| !p.is_zero()).collect();
        prop_assume!(!gs.is_empty());
        let cert = poly_reduce(&f, &gs, f.ring().order());
        prop_assert!(verify_certificate(&cert));
        prop_assert!(cert.remainder_is_reduced());
    }

    #[test]
    fn ideal_members_reduce_to_zero(
        (a, b, g, h) in kinds().prop_flat_map(|k| (poly(ring(k), 3), poly(ring(k), 3), poly(ring(k), 3), poly(ring(k), 3)))
    ) {
        prop_assume!(!g.is_zero() && !h.is_zero());
        let f = &(&a * &g) + &(&b * &h);
        let gs = [g, h];
        let cert = reduce_in_ideal(&f, &gs, f.ring().order()).unwrap();
        prop_assert!(cert.check_exact());
        prop_assert!(cert.is_zero_remainder());
        prop_assert_eq!(&cert.divisors[..], &gs[..]);
        let basis = buchberger(&gs, f.ring().order()).unwrap();
        prop_assert!(basis.is_groebner());
        prop_assert!(basis.reduces_to_zero(&f).0);
    }
}
