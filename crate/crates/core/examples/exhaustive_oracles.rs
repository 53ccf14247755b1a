//! Exhaustive group-axiom sweeps and the checks specific to the glued curve.

use edwards_proof::curve::{AffineParams, ProjParams};
use edwards_proof::oracle::{
    affine_axiom_sweep, dichotomy_sweep, equivariance_check, fixed_point_free_check, projective_axiom_sweep,
    semi_associativity_check, well_defined_covering_check, DEFAULT_PRIME_CAP,
};

fn main() {
    let affine = AffineParams::from_ints(17, 1, 3).unwrap();
    let sweep = affine_axiom_sweep(&affine, DEFAULT_PRIME_CAP).unwrap();
    println!("{}", serde_json::to_string_pretty(&sweep).unwrap());

    let params = ProjParams::from_ints(17, 2).unwrap();
    let sweep = projective_axiom_sweep(&params, DEFAULT_PRIME_CAP).unwrap();
    println!("{}: {}", sweep.curve, sweep.status.as_str());
    let cover = well_defined_covering_check(&params, DEFAULT_PRIME_CAP).unwrap();
    println!(
        "covering: {} over {} representative pairs, {} flipped-only",
        cover.status.as_str(),
        cover.representative_pairs,
        cover.flipped_only
    );
    let d = dichotomy_sweep(&params, DEFAULT_PRIME_CAP).unwrap();
    println!(
        "dichotomy: delta0 {}, delta1 {}, symmetric {}, inconsistent {}",
        d.delta0, d.delta1, d.symmetric, d.inconsistent
    );
    for r in [
        fixed_point_free_check(&params, DEFAULT_PRIME_CAP).unwrap(),
        equivariance_check(&params, DEFAULT_PRIME_CAP).unwrap(),
        semi_associativity_check(&params, DEFAULT_PRIME_CAP).unwrap(),
    ] {
        println!("{}: {} ({} cases)", r.name, r.status.as_str(), r.examined);
    }
}
