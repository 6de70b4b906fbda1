//! Fit the minimal homogeneous recurrence of the figure-eight colored
//! Jones function and verify its ε-image against the A-polynomial, the
//! full AJ-style end-to-end chain.
//!
//! ```sh
//! cargo run --release --example fit_figure_eight
//! ```

use ajcable::annihilator::{solve_odd_annihilator, CoeffFamily};
use ajcable::knotdb::parse_polynomial;
use ajcable::oretorus::{fit_minimal_recurrence, ColoredJonesOracle, FixtureKnot, OddSubsequence};
use ajcable::ring::{m_essentially_equal, Poly};

fn main() {
    let oracle = ColoredJonesOracle::new(FixtureKnot::FigureEight);
    println!("fitting (L-degree upward, M-bound doubling)...");
    let alpha = fit_minimal_recurrence(&oracle, 3, 16).expect("annihilator found");
    println!("found recurrence of L-degree {:?}", alpha.l_degree());

    let aprime = parse_polynomial("M^4*L^2 - M^8*L + M^6*L + 2*M^4*L + M^2*L - L + M^4").unwrap();
    let expected = &(&Poly::l() - &Poly::one()) * &aprime;
    println!(
        "epsilon image is M-essentially (L-1)*A'(4_1): {}",
        m_essentially_equal(&alpha.epsilon(), &expected).unwrap()
    );

    let family = CoeffFamily::from_operator(&alpha).unwrap();
    let result = solve_odd_annihilator(&family).unwrap();
    let odd = OddSubsequence(&oracle);
    println!(
        "beta annihilates J(2n+1) for n = 1..4: {}",
        result.beta.annihilates(&odd, 1..=4)
    );
}
