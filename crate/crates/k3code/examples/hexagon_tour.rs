//! A generative family of sextics: products of the six sides of a hexagon
//! inscribed in the smooth conic X0² = X1·X2.  By Pascal's theorem the
//! opposite-side intersections are collinear, and the code of the sextic
//! picks up the six sides, the Pascal line, and at least four smooth
//! conics — forcing Artin invariant ≤ 5.
//!
//! Run with: cargo run --release --example hexagon_tour

use k3code::gf2::canonical_field;
use k3code::hexagon::{analyze_hexagon, deterministic_params};
use k3code::report::word_bits;

fn main() {
    for m in [5u32, 7] {
        let k = canonical_field(m).unwrap();
        let params = deterministic_params(&k, 0);
        let hx = analyze_hexagon(&k, params).unwrap();
        println!("hexagon over F_2^{m}:");
        println!(
            "  vertices at parameters {:?}",
            params.iter().map(|&t| k.render(t)).collect::<Vec<_>>()
        );
        println!(
            "  locus field degree {}, {} collinear triples",
            hx.locus.field().degree(),
            hx.locus.collinear_triples().len()
        );
        println!(
            "  splitting: {} lines / {} conics / {} pencils",
            hx.analysis.split.lines.len(),
            hx.analysis.split.conics.len(),
            hx.analysis.split.pencils.len()
        );
        println!("  Pascal line word: {}", word_bits(hx.pascal_word, hx.locus.n()));
        println!("  sigma = {}", hx.analysis.code.sigma());
    }
}
