//! Colored Jones fixtures from the skein oracle, with the n = 2 values
//! cross-checked against the raw bracket state sum.
//!
//! ```sh
//! cargo run --release --example colored_jones
//! ```

use ajcable::oretorus::{colored_jones_fixture, jones_via_pd_bracket, FixtureKnot};

fn main() {
    for knot in [FixtureKnot::Trefoil, FixtureKnot::FigureEight] {
        println!("{knot:?}:");
        for n in 1..=4u32 {
            let j = colored_jones_fixture(knot, n).unwrap();
            println!("  J({n}) = {j}");
        }
        let classical = jones_via_pd_bracket(knot);
        let fixture = colored_jones_fixture(knot, 2).unwrap();
        println!("  n=2 matches the raw bracket: {}", classical == fixture);
    }
}
