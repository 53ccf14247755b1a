//! The t-form curve glued from two charts, its symmetries, and the rules
//! that apply to a pair of points.

use edwards_proof::curve::{
    dichotomy_case, neg_point, proj_add, proj_add_routes, ProjParams, ProjPoint, Symmetry,
};
use edwards_proof::oracle::{enumerate_projective, DEFAULT_PRIME_CAP};

fn main() {
    let params = ProjParams::from_ints(13, 2).unwrap();
    let points = enumerate_projective(&params, DEFAULT_PRIME_CAP).unwrap();
    println!("{params}: {} points", points.len());
    for p in &points {
        print!("{p} ");
    }
    println!();

    let a = points.iter().find(|p| p.point.is_regular()).copied().unwrap();
    // tau iota P makes both affine laws undefined
    let q = neg_point(&a.point).tau(&params).unwrap();
    let b = ProjPoint::new(q, 0);
    println!("dichotomy for ({}, {}): {}", a.point, q, dichotomy_case(&params, &a.point, &q).unwrap());
    for (route, sum) in proj_add_routes(&params, &a, &b) {
        println!("  {route}: {sum}");
    }
    println!("{a} + {b} = {}", proj_add(&params, &a, &b));

    for g in Symmetry::all() {
        println!("{g:>10}: {}", g.apply(&params, &a));
    }
}
