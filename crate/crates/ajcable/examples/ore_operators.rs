//! Quantum-torus operators: the relation LM = t²ML, operator action on
//! sequences, and the ε map.
//!
//! ```sh
//! cargo run --example ore_operators
//! ```

use ajcable::oretorus::{ConstSequence, OreOp, SequenceOracle};
use ajcable::ring::Poly;

struct Geometric;
impl SequenceOracle for Geometric {
    fn eval(&self, n: u32) -> Poly {
        Poly::t_pow(2 * n as i64)
    }
}

fn main() {
    // normal ordering: L·M = t²·M·L
    let l = OreOp::l();
    let m = OreOp::from_l_poly(&Poly::m());
    println!("L*M = {}", l.ore_mul(&m));
    println!("M*L = {}", m.ore_mul(&l));

    // L - 1 annihilates constants; L - t² annihilates t^{2n}
    let l_minus_1 = OreOp::from_l_poly(&(&Poly::l() - &Poly::one()));
    println!(
        "(L - 1) kills the constant sequence: {}",
        l_minus_1.annihilates(&ConstSequence(Poly::one()), 1..=10)
    );
    let l_minus_t2 = OreOp::from_l_poly(&(&Poly::l() - &Poly::t_pow(2)));
    println!(
        "(L - t^2) kills t^(2n): {}",
        l_minus_t2.annihilates(&Geometric, 1..=10)
    );

    // ε collapses the relation: images multiply commutatively
    let a = OreOp::from_l_poly(&(&Poly::mono(1, 3, 2, 1) + &Poly::one()));
    let b = OreOp::from_l_poly(&(&Poly::mono(1, 1, -1, 0) + &Poly::l_pow(2)));
    let lhs = a.ore_mul(&b).epsilon();
    let rhs = &a.epsilon() * &b.epsilon();
    println!("epsilon is multiplicative: {}", lhs == rhs);
}
