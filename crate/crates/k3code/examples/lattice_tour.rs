//! From a code to the Néron–Severi lattice: the overlattice of the node
//! lattice, its determinant −2^(2σ), evenness, type I, and the
//! discriminant form.
//!
//! Run with: cargo run --release --example lattice_tour

use k3code::lattice::{
    disc_and_signature, discriminant_form, index_over_node_lattice, is_even, is_type_i,
    lattice_from_code,
};
use k3code::report;
use k3code::samples;
use k3code::splitcode::span_code;

fn main() {
    // The smallest code: {0, Z} alone, giving the maximal Artin invariant.
    let trivial = span_code(21, &[(1 << 21) - 1]);
    let l = lattice_from_code(&trivial).unwrap();
    let (det, sign) = disc_and_signature(&l);
    println!("trivial code {{0, Z}}:");
    println!("  det = {det} (sign {sign}), sigma = {}", l.sigma());
    println!("  index over node lattice = {}", index_over_node_lattice(&l));
    let df = discriminant_form(&l).unwrap();
    println!("  discriminant group order = 2^{}", df.order_log2());
    // q-values of two sample classes, in halves mod 2Z.
    let wt8: u32 = 0xFF;
    let wt5: u32 = 0b11111 | (1 << 21);
    println!("  q(weight-8 class)/2 = {}/2", df.q_num(wt8));
    println!("  q(weight-5 lift)/2  = {}/2", df.q_num(wt5));

    // A geometric code: the sigma-4 sextic.
    let g = report::parse_input_poly(samples::SIGMA4, None).unwrap();
    let outcome = report::analyze(&g).unwrap();
    let l = &outcome.lattice;
    let (det, _) = disc_and_signature(l);
    println!("sigma-4 sextic:");
    println!("  det = {det}, even = {}, type I = {}", is_even(l), is_type_i(l));
    println!("  Gram diagonal: {:?}", (0..22).map(|i| l.gram()[i][i]).collect::<Vec<_>>());
}
