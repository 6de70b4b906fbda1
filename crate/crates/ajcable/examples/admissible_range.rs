//! The admissible cabling window from crossing counts.
//!
//! ```sh
//! cargo run --example admissible_range
//! ```

use ajcable::cabling::admissible_r;

fn main() {
    let window = admissible_r(4, 2);
    println!("{}", window.describe());
    for r in [-9, -7, 15, 16, 17, 19] {
        println!("r = {r:>3}: {}", window.test(r));
    }
}
