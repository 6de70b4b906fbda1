//! Run every hypothesis check on the bundled 6_2 record and print the
//! JSON report.
//!
//! ```sh
//! cargo run --release --example verify_6_2
//! ```

use ajcable::cli::verify_record;
use ajcable::knotdb::bundled_db;

fn main() {
    let db = bundled_db();
    let record = db.get("6_2").expect("bundled record");
    let report = verify_record(record);
    println!("{}", serde_json::to_string_pretty(&report).unwrap());
}
