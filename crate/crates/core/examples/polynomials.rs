//! Sparse integer polynomials: parsing, arithmetic, substitution, and
//! fractions with named denominators.

use edwards_proof::polyring::{LocalizedElement, OrderKind, Polynomial, Ring};

fn main() {
    let ring = Ring::new(&["x", "y", "c", "d"], OrderKind::Lex);
    let e = Polynomial::parse(&ring, "x^2 + c*y^2 - 1 - d*x^2*y^2").unwrap();
    println!("e = {e}");
    let (m, c) = e.leading_term().unwrap();
    println!("leading term: {}", Polynomial::term(&ring, *m, c.clone()));

    let one = Polynomial::one(&ring);
    let zero = Polynomial::zero(&ring);
    let circle = e.substitute(&ring, &[("c", &one), ("d", &zero)]);
    println!("e at c = 1, d = 0: {circle}");

    let sq = (&Polynomial::var(&ring, "x") + &one).pow(3);
    println!("(x + 1)^3 = {sq}");

    // x / (1 - d*x*y) + 1, kept as a fraction
    let den = LocalizedElement::from_poly(Polynomial::parse(&ring, "1 - d*x*y").unwrap());
    let x = LocalizedElement::from_poly(Polynomial::var(&ring, "x"));
    let frac = &x.div(&den, "delta").unwrap() + &LocalizedElement::one(&ring);
    println!("numerator {}, denominator {}", frac.numerator(), frac.denominator());
}
