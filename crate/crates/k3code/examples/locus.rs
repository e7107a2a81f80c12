//! Computing the singular locus Z(dG) of a sextic double plane: the 21
//! points, their common field, the Frobenius orbits and the collinear
//! triples.
//!
//! Run with: cargo run --example locus

use k3code::gf2::canonical_field;
use k3code::poly3::parse_poly;
use k3code::samples;
use k3code::zlocus::compute_zlocus;

fn main() {
    let f2 = canonical_field(1).unwrap();

    for (name, text) in [
        ("classical sextic", samples::dolgachev_kondo(&f2).unwrap().to_string()),
        ("sigma-4 sextic", samples::SIGMA4.to_string()),
        ("sigma-10 sextic", samples::SIGMA10.to_string()),
    ] {
        let g = parse_poly(&text, &f2).unwrap();
        let z = compute_zlocus(&g).unwrap();
        println!("{name}:");
        println!("  points:           {}", z.n());
        println!(
            "  common field:     F_2^{} (mod {})",
            z.field().degree(),
            z.field().def_poly()
        );
        println!("  orbit sizes:      {:?}", z.orbit_sizes());
        println!("  collinear triples: {}", z.collinear_triples().len());
        let p = &z.points()[0];
        println!(
            "  first point:      [{}, {}, {}]",
            z.field().render(p.coords[0]),
            z.field().render(p.coords[1]),
            z.field().render(p.coords[2])
        );
    }

    // A form whose differential cuts out a curve is rejected.
    let bad = parse_poly("X0^6", &f2).unwrap();
    println!("X0^6 -> {:?}", compute_zlocus(&bad).err().unwrap());
}
