//! Property tests: algebraic laws of the field layer and the polynomial
//! layer on randomized inputs.

use proptest::prelude::*;

use k3code::gf2::{canonical_field, factor_univariate, FFElem, FieldCtx, FPoly};
use k3code::poly3::{bar_reduce, equiv_mod_squares, parse_poly, partial, HomPoly3};

fn field(m: u32) -> FieldCtx {
    canonical_field(m).unwrap()
}

fn elem(m: u32) -> impl Strategy<Value = u64> {
    let mask = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
    any::<u64>().prop_map(move |b| b & mask)
}

proptest! {
    #[test]
    fn frobenius_is_additive_and_inverses_work(a in elem(13), b in elem(13)) {
        let k = field(13);
        let (a, b) = (k.elem_from_bits(a), k.elem_from_bits(b));
        prop_assert_eq!(k.sqr(k.add(a, b)), k.add(k.sqr(a), k.sqr(b)));
        prop_assert_eq!(k.frobenius_iter(a, 13), a);
        if !a.is_zero() {
            prop_assert_eq!(k.mul(a, k.inverse(a).unwrap()), FFElem::ONE);
        }
    }

    #[test]
    fn factorization_reproduces_input(coeffs in proptest::collection::vec(elem(6), 2..9)) {
        let k = field(6);
        let f = FPoly::from_coeffs(&k, coeffs.iter().map(|&b| k.elem_from_bits(b)).collect());
        prop_assume!(!f.is_zero());
        let fac = factor_univariate(&f);
        let mut prod = FPoly::constant(&k, f.leading());
        for (g, e) in &fac {
            // Each factor passes an independent irreducibility check.
            prop_assert!(g.is_irreducible());
            for _ in 0..*e {
                prod = prod.mul(g);
            }
        }
        prop_assert_eq!(prod, f);
    }

    #[test]
    fn partial_kills_squares(bits in any::<u64>()) {
        let k = field(2);
        let h = random_cubic(&k, bits);
        let sq = h.mul(&h);
        for axis in 0..3 {
            prop_assert!(partial(&sq, axis).is_zero());
        }
    }

    #[test]
    fn bar_reduce_is_idempotent_and_square_blind(bits in any::<u64>(), bits2 in any::<u64>()) {
        let k = field(2);
        let g = random_sextic(&k, bits);
        let b1 = bar_reduce(&g).0;
        prop_assert_eq!(bar_reduce(&b1).0.clone(), b1.clone());
        // Adding a square never changes the reduction.
        let h = random_cubic(&k, bits2);
        let gs = g.add(&h.mul(&h));
        prop_assert_eq!(bar_reduce(&gs).0, b1);
    }

    #[test]
    fn equivalence_mod_squares_is_an_equivalence(bits in any::<u64>(), s in 1u64..4) {
        let k = field(2);
        let g = random_sextic(&k, bits);
        prop_assume!(!bar_reduce(&g).0.is_zero());
        // Reflexive.
        prop_assert_eq!(equiv_mod_squares(&g, &g), Some(FFElem::ONE));
        // Scaling is recovered and symmetric.
        let c = k.elem_from_bits(s & 0b11);
        prop_assume!(!c.is_zero());
        let gc = g.scale(c);
        let found = equiv_mod_squares(&gc, &g).unwrap();
        prop_assert_eq!(found, c);
        let back = equiv_mod_squares(&g, &gc).unwrap();
        prop_assert_eq!(k.mul(found, back), FFElem::ONE);
    }
}

fn random_cubic(k: &FieldCtx, bits: u64) -> HomPoly3 {
    let monomials = k3code::splitcode::CUBIC_MONOMIALS;
    let mask = if k.degree() == 64 {
        u64::MAX
    } else {
        (1u64 << k.degree()) - 1
    };
    let terms: Vec<_> = monomials
        .iter()
        .enumerate()
        .map(|(i, &e)| (e, k.elem_from_bits((bits >> (3 * i)) & 0b111 & mask)))
        .collect();
    HomPoly3::from_terms(k, 3, &terms).unwrap()
}

fn random_sextic(k: &FieldCtx, bits: u64) -> HomPoly3 {
    // A handful of degree-6 monomials toggled by the seed.
    let monos = [
        (6, 0, 0),
        (5, 1, 0),
        (4, 1, 1),
        (3, 3, 0),
        (3, 2, 1),
        (2, 2, 2),
        (1, 4, 1),
        (1, 1, 4),
        (0, 5, 1),
        (0, 3, 3),
        (1, 2, 3),
        (2, 4, 0),
    ];
    let terms: Vec<_> = monos
        .iter()
        .enumerate()
        .filter(|(i, _)| bits >> i & 1 == 1)
        .map(|(_, &(a, b, c))| ((a, b, c), FFElem::ONE))
        .collect();
    HomPoly3::from_terms(k, 6, &terms).unwrap()
}

#[test]
fn parse_format_roundtrip_on_gallery() {
    let k = canonical_field(1).unwrap();
    for text in [
        k3code::samples::SIGMA4,
        k3code::samples::SIGMA10,
        k3code::samples::SIGMA7,
        k3code::samples::SIGMA4_TWIN,
        k3code::samples::SIGMA2,
        k3code::samples::SIGMA3,
    ] {
        let g = parse_poly(text, &k).unwrap();
        let round = parse_poly(&g.to_string(), &k).unwrap();
        assert_eq!(g, round);
    }
}
