use proptest::prelude::*;

use edwards_proof::curve::{
    on_curve, proj_add, scalar_mul, AffineGroup, AffineParams, AffinePoint, GroupLaw, ProjParams, ProjPoint,
    ProjectiveGroup, Symmetry,
};
use edwards_proof::oracle::{enumerate_points, enumerate_projective, DEFAULT_PRIME_CAP};

fn affine() -> (AffineGroup, Vec<AffinePoint>) {
    let params = AffineParams::from_ints(61, 1, 2).unwrap();
    let pts = enumerate_points(&params, DEFAULT_PRIME_CAP).unwrap();
    (AffineGroup::new(params).unwrap(), pts)
}

fn projective() -> (ProjParams, Vec<ProjPoint>) {
    let params = ProjParams::from_ints(101, 7).unwrap();
    let pts = enumerate_projective(&params, DEFAULT_PRIME_CAP).unwrap();
    (params, pts)
}

proptest! {
    #[test]
    fn affine_law_is_an_abelian_group(i in any::<prop::sample::Index>(), j in any::<prop::sample::Index>(), k in any::<prop::sample::Index>()) {
        let (g, pts) = affine();
        let (a, b, c) = (*i.get(&pts), *j.get(&pts), *k.get(&pts));
        let ab = g.add(&a, &b).unwrap();
        prop_assert!(on_curve(&g.params, &ab));
        prop_assert_eq!(ab, g.add(&b, &a).unwrap());
        prop_assert_eq!(g.add(&ab, &c).unwrap(), g.add(&a, &g.add(&b, &c).unwrap()).unwrap());
        prop_assert_eq!(g.add(&a, &g.neg(&a)).unwrap(), g.identity());
    }

    #[test]
    fn scalar_mul_is_a_homomorphism(i in any::<prop::sample::Index>(), m in -50i64..50, n in -50i64..50) {
        let (g, pts) = affine();
        let a = *i.get(&pts);
        let lhs = scalar_mul(&g, m + n, &a).unwrap();
        let rhs = g.add(&scalar_mul(&g, m, &a).unwrap(), &scalar_mul(&g, n, &a).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn glued_law_is_an_abelian_group(i in any::<prop::sample::Index>(), j in any::<prop::sample::Index>(), k in any::<prop::sample::Index>()) {
        let (params, pts) = projective();
        let (a, b, c) = (*i.get(&pts), *j.get(&pts), *k.get(&pts));
        let ab = proj_add(&params, &a, &b);
        prop_assert!(on_curve(&params, &ab.point));
        prop_assert_eq!(ab, ab.canonical(&params));
        prop_assert_eq!(ab, proj_add(&params, &b, &a));
        prop_assert_eq!(proj_add(&params, &ab, &c), proj_add(&params, &a, &proj_add(&params, &b, &c)));
        let g = ProjectiveGroup::new(params);
        prop_assert_eq!(proj_add(&params, &a, &g.neg(&a)), g.identity());
    }

    #[test]
    fn sums_do_not_depend_on_representatives(i in any::<prop::sample::Index>(), j in any::<prop::sample::Index>()) {
        let (params, pts) = projective();
        let (a, b) = (*i.get(&pts), *j.get(&pts));
        let sum = proj_add(&params, &a, &b);
        for ra in a.representatives(&params) {
            for rb in b.representatives(&params) {
                prop_assert_eq!(proj_add(&params, &ra, &rb), sum);
            }
        }
    }

    #[test]
    fn symmetries_commute_with_addition(i in any::<prop::sample::Index>(), j in any::<prop::sample::Index>(), tau in any::<bool>(), rot in 0u8..4) {
        let (params, pts) = projective();
        let (a, b) = (*i.get(&pts), *j.get(&pts));
        let g = Symmetry::new(tau, rot);
        prop_assert_eq!(g.apply(&params, &proj_add(&params, &a, &b)), proj_add(&params, &g.apply(&params, &a), &b));
    }

    #[test]
    fn points_print_and_parse(x in -1000i64..1000, y in -1000i64..1000, chart in 0u8..2) {
        let (params, _) = projective();
        let p = ProjPoint::new(AffinePoint::from_ints(params.field, x, y), chart);
        prop_assert_eq!(ProjPoint::parse(params.field, &p.to_string()).unwrap(), p);
    }
}
