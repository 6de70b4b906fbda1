//! Compute the cable A-polynomial of the (17,2)-cable of 6_2 via the
//! quadratic resultant and the F_r factor.
//!
//! ```sh
//! cargo run --release --example cable_apolynomial
//! ```

use ajcable::cabling::{admissible_r, cable_apolynomial};
use ajcable::knotdb::bundled_db;

fn main() {
    let db = bundled_db();
    let record = db.get("6_2").unwrap();
    let full = record.full_apolynomial();
    let window = admissible_r(record.eta_plus, record.eta_minus);
    println!("admissible window: {}", window.describe());

    for r in [17i64, -9] {
        let cable = cable_apolynomial(&full, r).unwrap();
        println!(
            "r = {r} (admissible: {}): deg_L(A_C) = {}, {} terms",
            window.test(r),
            cable.l_degree().unwrap(),
            cable.num_terms()
        );
    }

    // the degree always grows by exactly one
    let base = full.l_degree().unwrap();
    let cable = cable_apolynomial(&full, 17).unwrap();
    assert_eq!(cable.l_degree(), Some(base + 1));
}
