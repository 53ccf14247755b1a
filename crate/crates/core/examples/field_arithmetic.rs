//! Prime-field arithmetic and the quadratic character used to validate curve
//! parameters.

use edwards_proof::field::PrimeField;

fn main() {
    let f = PrimeField::new(13).unwrap();
    let (a, b) = (f.from_u64(7), f.from_u64(8));
    println!("7 + 8 = {} in {f}", a + b);
    println!("4 * 4 = {}", f.from_u64(4) * f.from_u64(4));
    println!("1/5 = {}", f.from_u64(5).inv().unwrap());

    let squares: Vec<_> = f.elements().filter(|x| x.is_square()).map(|x| x.value()).collect();
    println!("squares mod 13: {squares:?}");
    for d in [0, 2, 4] {
        let d = f.from_u64(d);
        println!("d = {d}: nonzero square? {}", d.is_nonzero_square());
    }
    println!("inverting zero: {:?}", f.zero().inv());
}
