//! Buchberger's algorithm, and ideal membership certified over the original
//! generators even when they are not a Groebner basis.

use edwards_proof::polyring::{OrderKind, Polynomial, Ring};
use edwards_proof::reduce::{buchberger, poly_reduce, reduce_in_ideal};

fn main() {
    let ring = Ring::new(&["x", "y"], OrderKind::Lex);
    let p = |s: &str| Polynomial::parse(&ring, s).unwrap();
    let gens = [p("x*y - 1"), p("y^2 - 1")];
    let target = p("x - y");

    let plain = poly_reduce(&target, &gens, ring.order());
    println!("plain division remainder: {}", plain.remainder);

    let basis = buchberger(&gens, ring.order()).unwrap();
    for g in basis.generators() {
        println!("basis element: {g}");
    }
    println!("is Groebner: {}", basis.is_groebner());

    let cert = reduce_in_ideal(&target, &gens, ring.order()).unwrap();
    println!("lifted remainder: {}, multiplier {}", cert.remainder, cert.multiplier);
    for (q, g) in cert.quotients.iter().zip(&cert.divisors) {
        println!("  ({q}) * ({g})");
    }
    println!("verifies: {}", cert.verify());
}
