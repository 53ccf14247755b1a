//! The symbolic addition laws, evaluated at points of small curves, agree with
//! the field arithmetic of the curve module.

use edwards_proof::curve::{add_delta0, add_delta1, AffineParams, EdwardsParams, ProjParams};
use edwards_proof::field::{FieldElement, PrimeField};
use edwards_proof::identities::{build_symbols, Form};
use edwards_proof::oracle::{enumerate_points, DEFAULT_PRIME_CAP};
use edwards_proof::polyring::LocalizedElement;

fn eval(f: PrimeField, e: &LocalizedElement, vals: &[(&str, FieldElement)]) -> Option<FieldElement> {
    e.eval_hom(vals, f).ok()
}

#[test]
fn base_law_matches_cd_form() {
    let s = build_symbols(Form::Cd);
    let sum = s.law0.apply(&s.point(1), &s.point(2)).unwrap();
    let params = AffineParams::from_ints(17, 1, 3).unwrap();
    let f = params.field;
    let pts = enumerate_points(&params, DEFAULT_PRIME_CAP).unwrap();
    for a in &pts {
        for b in &pts {
            let vals = [
                ("x1", a.x), ("y1", a.y), ("x2", b.x), ("y2", b.y), ("c", params.c()), ("d", params.d()),
            ];
            let num = add_delta0(&params, a, b).unwrap();
            assert_eq!(eval(f, &sum.x, &vals), Some(num.x));
            assert_eq!(eval(f, &sum.y, &vals), Some(num.y));
        }
    }
}

#[test]
fn both_laws_match_t_form() {
    let s = build_symbols(Form::T);
    let (z1, z2) = (s.point(1), s.point(2));
    let sums = [s.law0.apply(&z1, &z2).unwrap(), s.law1.apply(&z1, &z2).unwrap()];
    let params = ProjParams::from_ints(13, 2).unwrap();
    let f = params.field;
    let pts = enumerate_points(&params, DEFAULT_PRIME_CAP).unwrap();
    let mut compared = 0;
    for a in &pts {
        for b in &pts {
            let vals = [("x1", a.x), ("y1", a.y), ("x2", b.x), ("y2", b.y), ("t", params.t)];
            let numeric = [add_delta0(&params, a, b).ok(), add_delta1(&params, a, b).ok()];
            for (sym, num) in sums.iter().zip(numeric) {
                let got = eval(f, &sym.x, &vals).zip(eval(f, &sym.y, &vals));
                assert_eq!(got, num.map(|p| (p.x, p.y)));
                compared += num.is_some() as usize;
            }
        }
    }
    assert!(compared > pts.len() * pts.len());
}

#[test]
fn associativity_certificate_vanishes_on_curve_points() {
    use edwards_proof::identities::check_entry;

    let entry = check_entry("generic-associativity").unwrap();
    let certs: Vec<_> = entry.certificates.iter().map(|c| &c.certificate).collect();
    assert_eq!(certs.len(), 2);
    let params = AffineParams::from_ints(13, 1, 2).unwrap();
    let f = params.field;
    let pts = enumerate_points(&params, DEFAULT_PRIME_CAP).unwrap();
    for a in &pts {
        for b in &pts {
            for c in &pts {
                let vals = [
                    ("x1", a.x), ("y1", a.y), ("x2", b.x), ("y2", b.y), ("x3", c.x), ("y3", c.y),
                    ("c", params.c()), ("d", params.d()),
                ];
                for cert in &certs {
                    // every divisor vanishes on the curve, so the cleared numerator does too
                    assert!(cert.divisors.iter().all(|e| e.eval_hom(&vals, f).is_zero()));
                    assert!(cert.remainder.eval_hom(&vals, f).is_zero());
                    assert!(cert.dividend.eval_hom(&vals, f).is_zero());
                }
                let ab = add_delta0(&params, &add_delta0(&params, a, b).unwrap(), c).unwrap();
                let bc = add_delta0(&params, a, &add_delta0(&params, b, c).unwrap()).unwrap();
                assert_eq!(ab, bc);
            }
        }
    }
}
