//! Catalog checks on the sample gallery: Frobenius orbit structure of the
//! splitting-curve words and the separation of look-alike codes.

use k3code::gf2::canonical_field;
use k3code::poly3::parse_poly;
use k3code::samples;
use k3code::splitcode::{self, Word};
use k3code::zlocus::compute_zlocus;

#[test]
fn twin_sigma4_word_orbits() {
    // Seven lines in orbits {1,1,1,4} and seven conics in orbits {1,2,4}.
    let k = canonical_field(1).unwrap();
    let g = parse_poly(samples::SIGMA4_TWIN, &k).unwrap();
    let z = compute_zlocus(&g).unwrap();
    let a = splitcode::analyze_locus(&z).unwrap();
    let lines: Vec<Word> = a.split.lines.iter().map(|l| l.word).collect();
    let conics: Vec<Word> = a.split.conics.iter().map(|c| c.word).collect();
    assert_eq!(
        splitcode::orbit_sizes(&splitcode::word_orbits(&lines, z.frobenius_perm())),
        vec![1, 1, 1, 4]
    );
    assert_eq!(
        splitcode::orbit_sizes(&splitcode::word_orbits(&conics, z.frobenius_perm())),
        vec![1, 2, 4]
    );
}

#[test]
fn classical_sextic_line_orbits() {
    // The 21 rational lines of the F₄ plane under squaring: the 7 lines of
    // the F₂ subplane are fixed, the rest pair up (brute-force ground
    // truth on the dual plane).
    let k = canonical_field(1).unwrap();
    let g = samples::dolgachev_kondo(&k).unwrap();
    let z = compute_zlocus(&g).unwrap();
    let a = splitcode::analyze_locus(&z).unwrap();
    let lines: Vec<Word> = a.split.lines.iter().map(|l| l.word).collect();
    let sizes = splitcode::orbit_sizes(&splitcode::word_orbits(&lines, z.frobenius_perm()));
    assert_eq!(sizes, vec![1, 1, 1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 2, 2]);
}

#[test]
fn sigma4_twins_are_separated_by_the_finer_invariants() {
    let k = canonical_field(1).unwrap();
    let mut tuples = Vec::new();
    for text in [samples::SIGMA4, samples::SIGMA4_TWIN] {
        let g = parse_poly(text, &k).unwrap();
        let z = compute_zlocus(&g).unwrap();
        let a = splitcode::analyze_locus(&z).unwrap();
        tuples.push(a.invariants);
    }
    let (a, b) = (tuples[0], tuples[1]);
    assert_eq!((a.sigma, a.l, a.q, a.e), (b.sigma, b.l, b.q, b.e));
    assert_ne!(a.tuple(), b.tuple());
}
