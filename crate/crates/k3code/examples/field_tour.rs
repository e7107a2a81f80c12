//! Tour of the exact field layer: constructing F_{2^m} from an explicit
//! modulus, arithmetic, Frobenius, embeddings between compatible fields,
//! and univariate factorization.
//!
//! Run with: cargo run --example field_tour

use k3code::gf2::{
    canonical_field, embedding_create, factor_univariate, field_create, roots_in, FPoly, GF2Poly,
};

fn main() {
    // F₄ from its only irreducible quadratic.
    let f4 = field_create("t^2+t+1".parse().unwrap()).unwrap();
    let a = f4.gen();
    println!("F_4 = F_2[t]/({})", f4.def_poly());
    println!("  a * a     = {}", f4.render(f4.mul(a, a)));
    println!("  a^3       = {}", f4.render(f4.pow(a, 3)));

    // A bigger field over a named modulus.
    let p: GF2Poly = "t^14+t^13+t^12+t^8+t^5+t^4+t^3+t^2+1".parse().unwrap();
    let f14 = field_create(p).unwrap();
    let b = f14.gen();
    println!("F_2^14 accepted: modulus {}", f14.def_poly());
    println!("  a^14 = {}", f14.render(f14.pow(b, 14)));

    // Deterministic embedding F₄ ↪ F_2^14 (degree 2 divides 14).
    let emb = embedding_create(&f4, &f14).unwrap();
    println!(
        "  F_4 generator embeds as {}",
        f14.render(emb.image_of_generator())
    );

    // Factorization over F₂ and root finding in an extension.
    let f2 = canonical_field(1).unwrap();
    let x4x = FPoly::from_gf2(&f2, &"t^4+t".parse().unwrap());
    println!("factors of x^4 + x over F_2:");
    for (g, e) in factor_univariate(&x4x) {
        println!("  ({g:?})^{e}");
    }
    let quad = FPoly::from_gf2(&f2, &"t^2+t+1".parse().unwrap());
    let e24 = embedding_create(&f2, &f4).unwrap();
    let roots = roots_in(&quad, &e24);
    println!(
        "roots of x^2+x+1 in F_4: {:?}",
        roots.iter().map(|&r| f4.render(r)).collect::<Vec<_>>()
    );
}
