//! The two resultant routes: the closed form for Res_λ(P(λ), λ² - L) and
//! the Sylvester determinant, agreeing up to sign.
//!
//! ```sh
//! cargo run --example resultants
//! ```

use ajcable::cabling::{resultant_quadratic, sylvester_matrix, sylvester_resultant};
use ajcable::knotdb::parse_polynomial;
use ajcable::ring::Poly;

fn main() {
    // a generic degree-2 input: P_2²L² + (2P_0P_2 - P_1²)L + P_0²
    let p = parse_polynomial("M^2*L^2 + 3*M*L + 1 - M^4").unwrap();
    let closed = resultant_quadratic(&p);
    println!("closed form: {closed}");

    let gc = vec![-&Poly::l(), Poly::zero(), Poly::one()];
    let oracle = sylvester_matrix(&p.l_coefficients(), &gc)
        .unwrap()
        .det_bareiss()
        .unwrap();
    println!("sylvester agrees up to sign: {}", closed == oracle || closed == -&oracle);

    // plain resultants of univariate polynomials in L
    let f = parse_polynomial("L^2 - 1").unwrap();
    let g = parse_polynomial("L - 2").unwrap();
    println!("Res(L^2 - 1, L - 2) = {}", sylvester_resultant(&f, &g).unwrap());
}
