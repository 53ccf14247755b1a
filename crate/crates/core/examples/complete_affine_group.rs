//! The complete affine group on x^2 + y^2 = 1 + 2 x^2 y^2 over F_13.

use edwards_proof::curve::{affine_complete_add, scalar_mul, AffineGroup, AffineParams, AffinePoint, GroupLaw};
use edwards_proof::oracle::{enumerate_points, DEFAULT_PRIME_CAP};

fn main() {
    let params = AffineParams::from_ints(13, 1, 2).unwrap();
    println!("{params}, complete: {}", params.complete);
    let points = enumerate_points(&params, DEFAULT_PRIME_CAP).unwrap();
    println!("{} points", points.len());

    let p = AffinePoint::from_ints(params.field, 4, 4);
    println!("{p} + {p} = {}", affine_complete_add(&params, &p, &p).unwrap());

    let group = AffineGroup::new(params).unwrap();
    for n in 0..=8 {
        println!("{n} * {p} = {}", scalar_mul(&group, n, &p).unwrap());
    }
    println!("-{p} = {}", group.neg(&p));

    let square_d = AffineParams::from_ints(13, 1, 4).unwrap();
    println!("d = 4: {}", AffineGroup::new(square_d).unwrap_err());
}
