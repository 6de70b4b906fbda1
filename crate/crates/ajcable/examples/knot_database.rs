//! Parse a knot record from text, validate it, and reconstruct the full
//! A-polynomial.
//!
//! ```sh
//! cargo run --example knot_database
//! ```

use ajcable::knotdb::{parse_db, validate_record};

const SAMPLE: &str = "\
# figure-eight knot
name = 4_1
p = 5
m = 3
eta_plus = 2
eta_minus = 2
attest_AJ = true
aprime = M^4*L^2 - M^8*L + M^6*L + 2*M^4*L + M^2*L - L + M^4
";

fn main() {
    let db = parse_db(SAMPLE).unwrap();
    let record = db.get("4_1").unwrap();
    let diag = validate_record(record);
    println!("record: {} = b({},{})", record.name, record.p, record.m);
    println!(
        "deg_L(A') = {:?}, expected {}: {}",
        diag.actual_degree, diag.expected_degree, diag.degree_ok
    );
    println!("even M powers: {}", diag.even_m_powers_ok);
    println!("full A-polynomial: {}", record.full_apolynomial());
}
