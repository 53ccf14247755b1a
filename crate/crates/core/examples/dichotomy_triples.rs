//! The two candidate triples for the dichotomy, reduced modulo the Groebner
//! bases for each sign.

use edwards_proof::identities::{build_symbols, dichotomy_generators, dichotomy_resolution, Form};

fn main() {
    let s = build_symbols(Form::T);
    for sign in ['+', '-'] {
        println!("S{sign} generators:");
        for g in dichotomy_generators(&s, sign).unwrap() {
            println!("  {g}");
        }
    }
    for (row, certs) in dichotomy_resolution(&s).unwrap() {
        println!("S{} {:<9} {:?} -> reduces {:?}", row.sign, row.triple, row.polynomials, row.reduces);
        for c in certs.iter().filter(|c| !c.is_zero_remainder()) {
            println!("    remainder of {}: {}", c.dividend, c.remainder);
        }
    }
}
