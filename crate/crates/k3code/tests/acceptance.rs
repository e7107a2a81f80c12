//! Acceptance suite: one test per criterion, each printing a PASS line with
//! its elapsed time (visible with `--nocapture`).  Every expected value is
//! pinned here; nothing is deferred to later calibration.

use std::time::Instant;

use num::BigInt;

use k3code::census::{self, run_census};
use k3code::gf2::{canonical_field, embedding_create, field_create, FFElem, FieldCtx};
use k3code::hexagon;
use k3code::lattice::{disc_and_signature, index_over_node_lattice, is_even, is_type_i, lattice_from_code};
use k3code::poly3::{equiv_mod_squares, parse_poly, partial, HomPoly3};
use k3code::splitcode::{self, weight, Analysis, Word, ADMISSIBLE_WEIGHTS};
use k3code::zlocus::{compute_zlocus, cross, dot, ProjPoint, ZLocus};
use k3code::{samples, Result};

const WT: [u32; 8] = [0, 5, 8, 9, 12, 13, 16, 21];

fn pass(criterion: &str, t: Instant, detail: &str) {
    println!("criterion {criterion}: PASS ({:.2?}) {detail}", t.elapsed());
}

fn analyze_text(text: &str) -> (ZLocus, Analysis) {
    let k = canonical_field(1).unwrap();
    let g = parse_poly(text, &k).unwrap();
    let z = compute_zlocus(&g).unwrap();
    let a = splitcode::analyze_locus(&z).unwrap();
    (z, a)
}

/// Rebuilds an explicitly labeled point list inside the locus, returning
/// `labels[published index] = locus index`.
///
/// `seeds` gives (published index, coordinates as element texts over the
/// stated modulus); each seed is followed by `orbit_len − 1` Frobenius
/// images at consecutive labels.
fn published_labels(
    z: &ZLocus,
    modulus: &str,
    seeds: &[(usize, [&str; 3], usize)],
) -> Vec<usize> {
    let label_field = field_create(modulus.parse().unwrap()).unwrap();
    let emb = embedding_create(&label_field, z.field()).unwrap();
    let mut labels = vec![usize::MAX; z.n()];
    for &(start, coords, orbit_len) in seeds {
        let mut p = [FFElem::ZERO; 3];
        for (i, text) in coords.iter().enumerate() {
            p[i] = emb.apply(label_field.parse_elem(text).unwrap());
        }
        for step in 0..orbit_len {
            let pt = ProjPoint::new(z.field(), p).unwrap();
            let idx = z
                .index_of(&pt)
                .unwrap_or_else(|| panic!("published point {} not in locus", start + step));
            labels[start + step] = idx;
            for c in &mut p {
                *c = z.field().frobenius(*c);
            }
        }
    }
    assert!(labels.iter().all(|&i| i != usize::MAX));
    labels
}

fn word_from_labels(labels: &[usize], indices: &[usize]) -> Word {
    indices
        .iter()
        .fold(0, |m, &i| m | (1 << labels[i]))
}

fn word_image(w: Word, perm: &[usize]) -> Word {
    let mut out = 0;
    let mut rest = w;
    while rest != 0 {
        let i = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        out |= 1 << perm[i];
    }
    out
}

fn check_lattice(a: &Analysis) {
    let l = lattice_from_code(&a.code).unwrap();
    let (det, _) = disc_and_signature(&l);
    let sigma = a.code.sigma();
    assert_eq!(det, -(BigInt::from(1) << (2usize * sigma as usize)));
    assert!(is_even(&l));
    assert!(is_type_i(&l));
    assert_eq!(
        index_over_node_lattice(&l),
        BigInt::from(1) << a.code.dim()
    );
}

#[test]
fn criterion_01_classical_sextic() {
    let t = Instant::now();
    let (z, a) = analyze_text("X0^4*X1*X2 + X0*X1^4*X2 + X0*X1*X2^4");
    assert_eq!(z.n(), 21);
    // The locus is the full F₄-rational plane: 21 points over F₄.
    assert_eq!(z.field().degree(), 2);
    assert_eq!(a.split.lines.len(), 21);
    assert_eq!(a.code.sigma(), 1);
    let l = lattice_from_code(&a.code).unwrap();
    let (det, _) = disc_and_signature(&l);
    assert_eq!(det, BigInt::from(-4));
    assert!(is_even(&l));
    assert!(is_type_i(&l));
    assert!(t.elapsed().as_secs() < 10);
    pass("01", t, "classical sextic: 21 points, 21 lines, sigma 1, det -4");
}

#[test]
fn criterion_02_sigma4_lines_and_conics() {
    let t = Instant::now();
    let (z, a) = analyze_text(samples::SIGMA4);
    assert_eq!(z.orbit_sizes(), vec![7, 14]);
    assert_eq!(a.split.lines.len(), 7);
    assert_eq!(a.split.conics.len(), 7);
    assert_eq!(a.code.sigma(), 4);
    // Published labels: a 7-orbit from P0 and a 14-orbit from P7.
    let labels = published_labels(
        &z,
        samples::DEGREE14_MODULUS,
        &[
            (
                0,
                [
                    "a^13+a^11+a^10+a^9+a^7+a^4+a^3+a^2",
                    "a^12+a^11+a^9+a^5+a^3+a^2+a",
                    "1",
                ],
                7,
            ),
            (
                7,
                [
                    "a^12+a^11+a^10+a^7+a^6+a^5+a^4+a",
                    "a^13+a^11+a^9+a^5+a^4+a^3+a^2+a",
                    "1",
                ],
                14,
            ),
        ],
    );
    let line_word = word_from_labels(&labels, &[0, 1, 3, 7, 14]);
    assert!(a.split.lines.iter().any(|l| l.word == line_word));
    let conic_word = word_from_labels(&labels, &[7, 8, 9, 11, 14, 15, 16, 18]);
    assert!(a.split.conics.iter().any(|c| c.word == conic_word));
    assert!(t.elapsed().as_secs() < 30);
    pass("02", t, "sigma-4 sextic: orbit {7,14}, quoted line and conic words found");
}

#[test]
fn criterion_03_sigma10_empty_census() {
    let t = Instant::now();
    let (z, a) = analyze_text(samples::SIGMA10);
    assert_eq!(z.orbit_sizes(), vec![1, 20]);
    assert!(z.collinear_triples().is_empty());
    assert_eq!(a.split.lines.len(), 0);
    assert_eq!(a.split.conics.len(), 0);
    assert_eq!(a.split.pencils.len(), 0);
    assert_eq!(a.code.sigma(), 10);
    let l = lattice_from_code(&a.code).unwrap();
    let (det, _) = disc_and_signature(&l);
    assert_eq!(det, -(BigInt::from(1) << 20usize));
    assert!(t.elapsed().as_secs() < 30);
    pass("03", t, "sigma-10 sextic: no splitting curves, |disc| = 2^20");
}

#[test]
fn criterion_04_sigma7_pencils_orbit() {
    let t = Instant::now();
    let (z, a) = analyze_text(samples::SIGMA7);
    assert_eq!(a.split.pencils.len(), 7);
    assert_eq!(a.code.sigma(), 7);
    let labels = published_labels(
        &z,
        samples::DEGREE14_MODULUS,
        &[
            (
                0,
                [
                    "a^13+a^12+a^10+a^9+a^8+a^3+a^2",
                    "a^13+a^8+a^2",
                    "1",
                ],
                14,
            ),
            (
                14,
                [
                    "a^13+a^12+a^11+a^10+a^9+a^8+a^7+a^6+a^2",
                    "a^10+a^9+a^7+a^4",
                    "1",
                ],
                7,
            ),
        ],
    );
    // The 7 base loci are the Frobenius orbit of one 9-point set.
    let base = word_from_labels(&labels, &[0, 1, 3, 7, 8, 10, 14, 18, 19]);
    let mut orbit = std::collections::BTreeSet::new();
    let mut w = base;
    for _ in 0..7 {
        orbit.insert(w);
        w = word_image(w, z.frobenius_perm());
    }
    assert_eq!(w, base, "the 9-set returns to itself after 7 steps");
    let found: std::collections::BTreeSet<Word> =
        a.split.pencils.iter().map(|p| p.word).collect();
    assert_eq!(found, orbit);
    assert!(t.elapsed().as_secs() < 60);
    pass("04", t, "sigma-7 sextic: 7 pencils forming one Frobenius orbit of the quoted 9-set");
}

#[test]
fn criterion_05_sigma2_small_field() {
    let t = Instant::now();
    let (z, a) = analyze_text(samples::SIGMA2);
    assert_eq!(z.field().degree(), 4);
    assert_eq!(a.code.sigma(), 2);
    assert!(t.elapsed().as_secs() < 10);
    pass("05", t, "sigma-2 sextic: all points F_2^4-rational");
}

#[test]
fn criterion_06_sigma3_configuration() {
    let t = Instant::now();
    let (z, a) = analyze_text(samples::SIGMA3);
    assert_eq!(a.code.sigma(), 3);
    // Exactly 3 weight-5 words forming one Frobenius orbit.
    let line_words: Vec<Word> = a.split.lines.iter().map(|l| l.word).collect();
    assert_eq!(line_words.len(), 3);
    let line_orbits = splitcode::word_orbits(&line_words, z.frobenius_perm());
    assert_eq!(splitcode::orbit_sizes(&line_orbits), vec![3]);
    // 45 irreducible weight-8 words with the stated orbit size multiset.
    let conic_words: Vec<Word> = a.split.conics.iter().map(|c| c.word).collect();
    assert_eq!(conic_words.len(), 45);
    let conic_orbits = splitcode::word_orbits(&conic_words, z.frobenius_perm());
    let mut expected = vec![1, 6, 6, 2, 2, 6, 6, 3, 6, 6, 1];
    expected.sort();
    assert_eq!(splitcode::orbit_sizes(&conic_orbits), expected);
    // No irreducible weight-9 words.
    assert_eq!(a.split.pencils.len(), 0);
    // The quoted 9-set carries a pencil (nullity 2) that fails the
    // product test.
    let labels = published_labels(
        &z,
        samples::DEGREE6_MODULUS,
        &[
            (0, ["a^5+a^3+a+1", "a^3+a^2+a+1", "1"], 6),
            (6, ["1", "1", "1"], 1),
            (7, ["1", "0", "1"], 1),
            (8, ["a^4+a^3+a^2+a", "a+1", "1"], 6),
            (14, ["0", "0", "1"], 1),
            (15, ["a^5+a^4+a^3+a^2+1", "a^5+a^4+a^3+a^2+a", "1"], 6),
        ],
    );
    let nine = word_from_labels(&labels, &[0, 1, 2, 3, 7, 8, 9, 15, 20]);
    let inc = splitcode::Incidence::new(&z);
    assert!(!inc.has_collinear_triple(nine));
    let (nullity, splits) = splitcode::pencil_test(&z, nine).unwrap();
    assert_eq!(nullity, 2);
    assert!(!splits);
    assert!(t.elapsed().as_secs() < 60);
    pass("06", t, "sigma-3 sextic: 3+45 words, quoted 9-set passes nullity but fails the product test");
}

#[test]
fn criterion_07_full_census() {
    let t = Instant::now();
    let census = run_census(21, &WT, 10).unwrap();
    // Counts by dimension 1..10 are the table counts for σ = 10..1.
    assert_eq!(
        census.counts(),
        vec![1, 3, 8, 21, 43, 58, 41, 13, 3, 1]
    );
    assert_eq!(census.total(), 192);
    // σ-order: 1, 3, 13, 41, 58, 43, 21, 8, 3, 1 for σ = 1..10.
    let mut by_sigma = [0usize; 11];
    for e in census.entries() {
        by_sigma[e.invariants.sigma as usize] += 1;
    }
    assert_eq!(
        &by_sigma[1..],
        &[1, 3, 13, 41, 58, 43, 21, 8, 3, 1]
    );
    // All 192 invariant tuples are pairwise distinct.
    let mut tuples: Vec<[u64; 9]> = census.entries().map(|e| e.invariants.tuple()).collect();
    tuples.sort();
    let before = tuples.len();
    tuples.dedup();
    assert_eq!(tuples.len(), before, "invariant tuples must be distinct");
    // Analyze/census consistency: every gallery code matches exactly one
    // class, with agreeing Artin invariant.
    for text in [
        "X0^4*X1*X2 + X0*X1^4*X2 + X0*X1*X2^4",
        samples::SIGMA4,
        samples::SIGMA4_TWIN,
        samples::SIGMA10,
        samples::SIGMA7,
        samples::SIGMA2,
        samples::SIGMA3,
    ] {
        let (_, a) = analyze_text(text);
        let class = census::match_class(&a.invariants, &census).unwrap();
        assert_eq!(class.invariants.sigma, a.code.sigma());
    }
    pass(
        "07",
        t,
        "full census: 1,3,13,41,58,43,21,8,3,1 by Artin invariant; 192 distinct tuples; gallery matched",
    );
}

#[test]
fn criterion_08_small_census_oracle() {
    let t = Instant::now();
    let cases: [(usize, &[u32]); 9] = [
        (4, &[0, 2, 4]),
        (4, &[0, 1, 4]),
        (4, &[0, 1, 2, 3, 4]),
        (5, &[0, 2, 3, 5]),
        (5, &[0, 1, 4, 5]),
        (5, &[0, 2, 5]),
        (6, &[0, 3, 6]),
        (6, &[0, 2, 4, 6]),
        (6, &[0, 1, 5, 6]),
    ];
    for (n, wt) in cases {
        let census = run_census(n, wt, n).unwrap();
        let ours = census::oracle::canonicalize_census(&census);
        let truth = census::oracle::classify(n, wt);
        assert_eq!(ours, truth, "n = {n}, weights {wt:?}");
    }
    assert!(t.elapsed().as_secs() < 60);
    pass("08", t, "level algorithm matches the exhaustive oracle on 9 small cases");
}

#[test]
fn criterion_09_lattice_suite() {
    let t = Instant::now();
    for text in [
        "X0^4*X1*X2 + X0*X1^4*X2 + X0*X1*X2^4",
        samples::SIGMA4,
        samples::SIGMA10,
        samples::SIGMA7,
        samples::SIGMA2,
        samples::SIGMA3,
    ] {
        let (_, a) = analyze_text(text);
        check_lattice(&a);
    }
    pass("09", t, "det = -2^(2 sigma), even, type I, index = |C| on all six codes");
}

#[test]
fn criterion_10_structural_invariants() {
    let t = Instant::now();
    // Characteristic-2 field axioms and Frobenius additivity.
    let k = canonical_field(11).unwrap();
    let mut state = 0x2545F4914F6CDD1Du64;
    let mut next = || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        k.elem_from_bits(state & ((1 << 11) - 1))
    };
    for _ in 0..500 {
        let (a, b) = (next(), next());
        assert_eq!(k.sqr(k.add(a, b)), k.add(k.sqr(a), k.sqr(b)));
        if !a.is_zero() {
            assert_eq!(k.mul(a, k.inverse(a).unwrap()), FFElem::ONE);
        }
        assert_eq!(k.frobenius_iter(a, 11), a);
    }

    // The differential kills squares: ∂(H²) = 0 for random cubics H.
    let k4 = field_create("t^2+t+1".parse().unwrap()).unwrap();
    let mut bits = 0x0FEDCBA987654321u64;
    for _ in 0..50 {
        bits = bits.wrapping_mul(6364136223846793005).wrapping_add(1);
        let h = random_cubic(&k4, bits);
        let sq = h.mul(&h);
        for axis in 0..3 {
            assert!(partial(&sq, axis).is_zero());
        }
    }

    // Pencil inclusion is independent of the kernel basis: 50 random
    // changes of basis keep the product test passing.
    let (z7, a7) = analyze_text(samples::SIGMA7);
    let pencil = &a7.split.pencils[0];
    let kk = z7.field().clone();
    let c1 = splitcode::cubic_from_coeffs(&kk, &pencil.basis.0);
    let c2 = splitcode::cubic_from_coeffs(&kk, &pencil.basis.1);
    let mask = (1u64 << kk.degree()) - 1;
    let mut found = 0;
    let mut seed = 0x13579BDF2468ACE0u64;
    while found < 50 {
        seed = seed.wrapping_mul(2862933555777941757).wrapping_add(3037000493);
        let a = kk.elem_from_bits(seed & mask);
        seed = seed.wrapping_mul(2862933555777941757).wrapping_add(3037000493);
        let b = kk.elem_from_bits((seed >> 11) & mask);
        seed = seed.wrapping_mul(2862933555777941757).wrapping_add(3037000493);
        let c = kk.elem_from_bits((seed >> 7) & mask);
        seed = seed.wrapping_mul(2862933555777941757).wrapping_add(3037000493);
        let d = kk.elem_from_bits((seed >> 3) & mask);
        // det = ad + bc must be nonzero for a genuine basis change.
        if kk.add(kk.mul(a, d), kk.mul(b, c)).is_zero() {
            continue;
        }
        found += 1;
        let e1 = c1.scale(a).add(&c2.scale(b));
        let e2 = c1.scale(c).add(&c2.scale(d));
        assert!(equiv_mod_squares(&e1.mul(&e2), z7.g_common()).is_some());
    }

    for text in [
        "X0^4*X1*X2 + X0*X1^4*X2 + X0*X1*X2^4",
        samples::SIGMA4,
        samples::SIGMA10,
        samples::SIGMA7,
        samples::SIGMA2,
        samples::SIGMA3,
    ] {
        let (z, a) = analyze_text(text);
        // Every collinear triple extends to a weight-5 word.
        for tri in z.collinear_triples() {
            let tri_mask: Word =
                (1 << tri[0]) | (1 << tri[1]) | (1 << tri[2]);
            assert!(
                a.split.lines.iter().any(|l| l.word & tri_mask == tri_mask),
                "collinear triple outside every line word"
            );
        }
        // Every code word weight is admissible.
        for &w in &a.code.words {
            assert!(ADMISSIBLE_WEIGHTS.contains(&weight(w)));
        }
        // Every pencil word misses exactly 12 locus points.
        for p in &a.split.pencils {
            assert_eq!(z.n() - weight(p.word) as usize, 12);
        }
        // The quintic evaluation matrix has rank exactly 18.
        assert_eq!(quintic_rank(&z), 18);
    }
    pass("10", t, "field axioms, square-killing, basis independence, incidence and rank invariants");
}

fn random_cubic(k: &FieldCtx, bits: u64) -> HomPoly3 {
    let monomials = splitcode::CUBIC_MONOMIALS;
    let terms: Vec<_> = monomials
        .iter()
        .enumerate()
        .map(|(i, &e)| {
            let c = (bits >> (2 * i)) & 0b11;
            (e, k.elem_from_bits(c & ((1 << k.degree()) - 1)))
        })
        .collect();
    HomPoly3::from_terms(k, 3, &terms).unwrap()
}

fn quintic_rank(z: &ZLocus) -> usize {
    let k = z.field();
    let mut monomials = Vec::new();
    for i in 0..=5u8 {
        for j in 0..=5 - i {
            monomials.push((i, j, 5 - i - j));
        }
    }
    assert_eq!(monomials.len(), 21);
    let rows: Vec<Vec<FFElem>> = z
        .points()
        .iter()
        .map(|p| {
            monomials
                .iter()
                .map(|&(i, j, l)| {
                    let mut acc = FFElem::ONE;
                    for _ in 0..i {
                        acc = k.mul(acc, p.coords[0]);
                    }
                    for _ in 0..j {
                        acc = k.mul(acc, p.coords[1]);
                    }
                    for _ in 0..l {
                        acc = k.mul(acc, p.coords[2]);
                    }
                    acc
                })
                .collect()
        })
        .collect();
    k3code::linalg::rank(k, rows, 21)
}

#[test]
fn criterion_11_pascal_hexagons() {
    let t = Instant::now();
    let run = |m: u32, params: [FFElem; 6]| -> Result<()> {
        let k = canonical_field(m).unwrap();
        let hx = hexagon::analyze_hexagon(&k, params)?;
        assert!(hx.analysis.code.sigma() <= 5);
        assert!(hx.analysis.split.conics.len() >= 4);
        Ok(())
    };
    let k5 = canonical_field(5).unwrap();
    let a5 = k5.gen();
    let k7 = canonical_field(7).unwrap();
    let a7 = k7.gen();
    let cases: [(u32, [FFElem; 6]); 5] = [
        // Consecutive generator powers: a symmetric hexagon with extra
        // splitting lines (σ = 3).
        (5, hexagon::deterministic_params(&k5, 0)),
        // Hexagons in general position: exactly the six sides plus the
        // Pascal line split (σ = 4).
        (5, [
            FFElem::ZERO,
            FFElem::ONE,
            a5,
            k5.pow(a5, 3),
            k5.pow(a5, 5),
            k5.pow(a5, 8),
        ]),
        (5, [
            a5,
            k5.pow(a5, 2),
            k5.pow(a5, 4),
            k5.pow(a5, 5),
            k5.pow(a5, 9),
            k5.pow(a5, 13),
        ]),
        (7, hexagon::deterministic_params(&k7, 0)),
        (7, [
            FFElem::ZERO,
            FFElem::ONE,
            a7,
            k7.pow(a7, 3),
            k7.pow(a7, 5),
            k7.pow(a7, 8),
        ]),
    ];
    for (m, params) in cases {
        run(m, params).unwrap();
    }
    assert!(t.elapsed().as_secs() < 60);
    pass("11", t, "five hexagon sextics: sides + Pascal line + >= 4 conics split, sigma <= 5");
}

#[test]
fn criterion_12_general_degree_locus() {
    let t = Instant::now();
    let k = canonical_field(1).unwrap();
    let g = samples::dolgachev_kondo_q(&k, 8).unwrap();
    let z = compute_zlocus(&g).unwrap();
    assert_eq!(z.b(), 10);
    assert_eq!(z.n(), 73);
    assert_eq!(z.field().degree(), 3);
    // Every line of the F₈ plane meets the locus in exactly b−1 = 9 points.
    let kf = z.field();
    let mut lines = std::collections::HashSet::new();
    for i in 0..z.n() {
        for j in i + 1..z.n() {
            let mut l = cross(kf, z.points()[i].coords, z.points()[j].coords);
            let piv = (0..3).rev().find(|&t| !l[t].is_zero()).unwrap();
            let inv = kf.inverse(l[piv]).unwrap();
            for c in &mut l {
                *c = kf.mul(*c, inv);
            }
            lines.insert((l[0].bits(), l[1].bits(), l[2].bits()));
        }
    }
    assert_eq!(lines.len(), 73, "the F₈ plane has 73 lines");
    for &(l0, l1, l2) in &lines {
        let l = [
            kf.elem_from_bits(l0),
            kf.elem_from_bits(l1),
            kf.elem_from_bits(l2),
        ];
        let count = z
            .points()
            .iter()
            .filter(|p| dot(kf, l, p.coords).is_zero())
            .count();
        assert_eq!(count, 9);
    }
    assert!(t.elapsed().as_secs() < 30);
    pass("12", t, "degree-10 locus: 73 points = P^2(F_8), every rational line meets 9");
}
