//! Multivariate division producing a certificate that can be checked, saved
//! and reloaded without redoing the division.

use edwards_proof::polyring::{OrderKind, Polynomial, Ring};
use edwards_proof::reduce::{poly_reduce, ReductionCertificate};

fn main() {
    let ring = Ring::new(&["x1", "y1", "x2", "y2", "c", "d"], OrderKind::Lex);
    let p = |s: &str| Polynomial::parse(&ring, s).unwrap();
    let e1 = p("x1^2 + c*y1^2 - 1 - d*x1^2*y1^2");
    let e2 = p("x2^2 + c*y2^2 - 1 - d*x2^2*y2^2");
    let f = &(&p("x2*y2 + 3") * &e1) + &(&(&p("c - x1") * &e2) + &p("y1*y2"));

    let cert = poly_reduce(&f, &[e1, e2], ring.order());
    println!("remainder: {}", cert.remainder);
    println!("multiplier: {}", cert.multiplier);
    println!("exact check: {}", cert.check_exact());
    println!("100 random evaluations: {}", cert.check_random(100, 0));

    let json = cert.to_json();
    let back = ReductionCertificate::from_json(&json).unwrap();
    println!("reloaded digest matches: {}", back.digest() == cert.digest());

    let mut broken = back.clone();
    broken.remainder = &broken.remainder + &Polynomial::one(&ring);
    println!("tampered certificate verifies: {}", broken.verify());
}
