//! Solve the odd-subsequence annihilator system for 6_2 in the t = -1
//! shadow and print the identity diagnostics.
//!
//! ```sh
//! cargo run --release --example annihilator_6_2
//! ```

use ajcable::annihilator::{check_determinant_identities, solve_odd_annihilator, CoeffFamily};
use ajcable::knotdb::bundled_db;

fn main() {
    let db = bundled_db();
    let record = db.get("6_2").unwrap();
    let family = CoeffFamily::from_apoly(&record.full_apolynomial())
        .unwrap()
        .shadow();
    let result = solve_odd_annihilator(&family).unwrap();

    println!("d = {}", family.d());
    println!("beta has L-degree {:?}", result.beta.l_degree());
    println!("det(N) M-degree range: {:?}", result.det_n.m_range());
    println!("det(X) factorization holds: {}", result.identities.det_x_factorization);
    println!("residual identically zero:  {}", result.identities.residual_ok);
    println!("det N(-1,M) nonzero:        {}", result.identities.det_n_at_minus1_nonzero);

    let rep = check_determinant_identities(&family, &result).unwrap();
    println!("cofactor identity unit: {}", rep.cofactor_unit);
    println!("convolution identity unit: {}", rep.convolution_unit);
    println!("Q_d convention sign: {}", rep.qd_convention_sign);
}
