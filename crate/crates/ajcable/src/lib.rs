//! Exact symbolic machinery for the cable A-polynomial verification
//! pipeline on two-bridge knots: sparse Laurent polynomial arithmetic,
//! fraction-free determinants, the odd-subsequence annihilator
//! construction, Sylvester and closed-form resultants, quantum-torus
//! operators with skein-computed colored Jones fixtures, a knot-record
//! database format, and a batch verification driver.
//!
//! Start with the runnable examples (`cargo run --example verify_6_2`) or
//! the CLI (`cargo run --bin ajcable -- verify --db crates/ajcable/data/knots.kdb`).

pub mod annihilator;
pub mod cabling;
pub mod cli;
pub mod knotdb;
pub mod matrix;
pub mod oretorus;
pub mod ring;

pub use annihilator::{solve_odd_annihilator, AnnihilatorResult, CoeffFamily};
pub use cabling::{admissible_r, cable_apolynomial, f_r, resultant_quadratic, sylvester_resultant};
pub use knotdb::{parse_db, parse_polynomial, KnotDatabase, KnotRecord};
pub use matrix::PolyMatrix;
pub use oretorus::{colored_jones_fixture, fit_recurrence, OreOp, SequenceOracle};
pub use ring::{m_essentially_equal, unit_equal, Poly, Unit};
