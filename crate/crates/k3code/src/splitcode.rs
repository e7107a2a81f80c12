//! Detection of splitting curves of degree ≤ 3 and assembly of the code.
//!
//! For b = 6, a line splits exactly when it meets the locus in 5 points, a
//! smooth conic when it meets it in 8 points, and a regular cubic pencil
//! contributes its 9-point base locus when the pencil exists (nullity-2
//! interpolation system) and the product of two generators is a scalar
//! multiple of G modulo squares.  The code C spanned by those words plus
//! the full locus determines the Artin invariant σ = 11 − dim C.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf2::{FFElem, FieldCtx};
use crate::linalg;
use crate::poly3::{equiv_mod_squares, HomPoly3};
use crate::zlocus::{cross, dot, ZLocus};

/// A subset of the locus points as a bitmask in locus order.
pub type Word = u32;

pub fn weight(w: Word) -> u32 {
    w.count_ones()
}

/// Admissible weights of code words for b = 6.
pub const ADMISSIBLE_WEIGHTS: [u32; 8] = [0, 5, 8, 9, 12, 13, 16, 21];

pub fn weight_admissible(w: u32) -> bool {
    ADMISSIBLE_WEIGHTS.contains(&w)
}

/// Conic monomial exponents, in the fixed order used for witnesses.
pub const CONIC_MONOMIALS: [(u8, u8, u8); 6] = [
    (2, 0, 0),
    (1, 1, 0),
    (1, 0, 1),
    (0, 2, 0),
    (0, 1, 1),
    (0, 0, 2),
];

/// Cubic monomial exponents, in the fixed order used for witnesses.
pub const CUBIC_MONOMIALS: [(u8, u8, u8); 10] = [
    (3, 0, 0),
    (2, 1, 0),
    (2, 0, 1),
    (1, 2, 0),
    (1, 1, 1),
    (1, 0, 2),
    (0, 3, 0),
    (0, 2, 1),
    (0, 1, 2),
    (0, 0, 3),
];

// ---------------------------------------------------------------------------
// Collinearity tables
// ---------------------------------------------------------------------------

/// Pairwise collinearity data: for each point pair the mask of third points
/// on the same line.
pub struct Incidence {
    n: usize,
    third: Vec<Word>,
}

impl Incidence {
    pub fn new(z: &ZLocus) -> Incidence {
        let n = z.n();
        assert!(n <= 32, "word masks are 32-bit");
        let mut third = vec![0u32; n * n];
        for t in z.collinear_triples() {
            let [i, j, k] = [t[0] as usize, t[1] as usize, t[2] as usize];
            third[i * n + j] |= 1 << k;
            third[j * n + i] |= 1 << k;
            third[i * n + k] |= 1 << j;
            third[k * n + i] |= 1 << j;
            third[j * n + k] |= 1 << i;
            third[k * n + j] |= 1 << i;
        }
        Incidence { n, third }
    }

    #[inline]
    pub fn third(&self, i: usize, j: usize) -> Word {
        self.third[i * self.n + j]
    }

    /// Does the word contain three collinear points?
    pub fn has_collinear_triple(&self, w: Word) -> bool {
        let mut rest = w;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let mut others = rest;
            while others != 0 {
                let j = others.trailing_zeros() as usize;
                others &= others - 1;
                if self.third(i, j) & w != 0 {
                    return true;
                }
            }
        }
        false
    }
}

// ---------------------------------------------------------------------------
// Witnesses
// ---------------------------------------------------------------------------

#[derive(Clone, Debug)]
pub struct LineWitness {
    pub word: Word,
    /// Coefficients (a0, a1, a2) of the line a0·X0 + a1·X1 + a2·X2 = 0.
    pub line: [FFElem; 3],
}

#[derive(Clone, Debug)]
pub struct ConicWitness {
    pub word: Word,
    /// Coefficients in [`CONIC_MONOMIALS`] order.
    pub conic: [FFElem; 6],
}

#[derive(Clone, Debug)]
pub struct PencilWitness {
    pub word: Word,
    /// Two cubics spanning the interpolation space, [`CUBIC_MONOMIALS`]
    /// order.
    pub basis: ([FFElem; 10], [FFElem; 10]),
}

/// Everything the subset scans find.
pub struct SplitCensus {
    pub lines: Vec<LineWitness>,
    pub conics: Vec<ConicWitness>,
    pub pencils: Vec<PencilWitness>,
}

// ---------------------------------------------------------------------------
// Lines
// ---------------------------------------------------------------------------

/// Lines meeting the locus in exactly b−1 points, one witness per line.
/// A line that meets the locus in strictly between (b−2)/2 and b−1 points
/// contradicts the splitting threshold and signals an upstream bug.
pub fn find_lines(z: &ZLocus) -> Result<Vec<LineWitness>> {
    let k = z.field();
    let b = z.b();
    let lo = (b - 2) / 2;
    let hi = b - 1;
    let pts = z.points();
    let mut seen: std::collections::HashMap<(u64, u64, u64), ()> = Default::default();
    let mut out = Vec::new();
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            let mut line = cross(k, pts[i].coords, pts[j].coords);
            // Normalize: last nonzero coefficient 1.
            let piv = (0..3).rev().find(|&t| !line[t].is_zero()).unwrap();
            let inv = k.inverse(line[piv])?;
            for c in &mut line {
                *c = k.mul(*c, inv);
            }
            let key = (line[0].bits(), line[1].bits(), line[2].bits());
            if seen.insert(key, ()).is_some() {
                continue;
            }
            let mut word: Word = 0;
            for (t, p) in pts.iter().enumerate() {
                if dot(k, line, p.coords).is_zero() {
                    word |= 1 << t;
                }
            }
            let c = weight(word);
            if c == hi {
                out.push(LineWitness { word, line });
            } else if c > lo {
                return Err(Error::InternalInconsistency(format!(
                    "a line meets the locus in {c} points; only ≤ {lo} or {hi} are possible"
                )));
            }
        }
    }
    out.sort_by_key(|l| l.word);
    Ok(out)
}

// ---------------------------------------------------------------------------
// Arc scans (8- and 9-point subsets with no collinear triple)
// ---------------------------------------------------------------------------

/// Visits every `size`-subset of the points containing no collinear
/// triple, in parallel over the smallest member; per-branch results are
/// concatenated in index order, so the output order is deterministic.
fn scan_arcs<T: Send>(
    n: usize,
    size: usize,
    inc: &Incidence,
    visit: impl Fn(&[usize], Word) -> Option<Result<T>> + Sync,
) -> Result<Vec<T>> {
    let branches: Vec<Result<Vec<T>>> = (0..=(n - size))
        .into_par_iter()
        .map(|first| {
            let mut out = Vec::new();
            let mut chosen = vec![first];
            let mut err = None;
            scan_rec(
                n,
                size,
                inc,
                first + 1,
                0,
                1 << first,
                &mut chosen,
                &mut |set, mask| match visit(set, mask) {
                    Some(Ok(item)) => out.push(item),
                    Some(Err(e)) => err = Some(e),
                    None => {}
                },
            );
            match err {
                Some(e) => Err(e),
                None => Ok(out),
            }
        })
        .collect();
    let mut out = Vec::new();
    for b in branches {
        out.extend(b?);
    }
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn scan_rec(
    n: usize,
    size: usize,
    inc: &Incidence,
    start: usize,
    forbidden: Word,
    mask: Word,
    chosen: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize], Word),
) {
    if chosen.len() == size {
        visit(chosen, mask);
        return;
    }
    let needed = size - chosen.len();
    for idx in start..=(n - needed) {
        if forbidden & (1 << idx) != 0 {
            continue;
        }
        let mut fb = forbidden;
        for &j in chosen.iter() {
            fb |= inc.third(j, idx);
        }
        chosen.push(idx);
        scan_rec(n, size, inc, idx + 1, fb, mask | (1 << idx), chosen, visit);
        chosen.pop();
    }
}

/// Stack-allocated row reduction; returns the rank.
fn rank_small<const C: usize>(k: &FieldCtx, rows: &mut [[FFElem; C]], ncols: usize) -> usize {
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = k.inverse(rows[rank][col]).expect("pivot nonzero");
        for c in col..ncols {
            rows[rank][c] = k.mul(rows[rank][c], inv);
        }
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let f = rows[r][col];
                for c in col..ncols {
                    let t = k.mul(f, rows[rank][c]);
                    rows[r][c] = k.add(rows[r][c], t);
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// Smooth conics through 8-point arcs: include an arc iff the 8×6
/// interpolation system is solvable; the kernel must then be exactly
/// one-dimensional.
pub fn find_conics(z: &ZLocus) -> Result<Vec<ConicWitness>> {
    let inc = Incidence::new(z);
    find_conics_with(z, &inc)
}

pub fn find_conics_with(z: &ZLocus, inc: &Incidence) -> Result<Vec<ConicWitness>> {
    assert_eq!(z.b(), 6, "the degree-≤3 dictionary holds for b = 6");
    let k = z.field().clone();
    let pts = z.points();
    let rows_all: Vec<[FFElem; 6]> = pts
        .iter()
        .map(|p| monomial_row::<6>(&k, p.coords, &CONIC_MONOMIALS))
        .collect();
    let mut out = scan_arcs(pts.len(), 8, inc, |chosen, mask| {
        let mut m: [[FFElem; 6]; 8] = [[FFElem::ZERO; 6]; 8];
        for (r, &i) in chosen.iter().enumerate() {
            m[r] = rows_all[i];
        }
        let rank = rank_small(&k, &mut m, 6);
        match 6 - rank {
            0 => None,
            1 => {
                let rows: Vec<Vec<FFElem>> =
                    chosen.iter().map(|&i| rows_all[i].to_vec()).collect();
                let ker = linalg::kernel(&k, rows, 6);
                let mut conic = [FFElem::ZERO; 6];
                conic.copy_from_slice(&ker[0]);
                Some(Ok(ConicWitness { word: mask, conic }))
            }
            _ => Some(Err(Error::InternalInconsistency(
                "conic system through an 8-arc has nullity ≥ 2".into(),
            ))),
        }
    })?;
    out.sort_by_key(|c| c.word);
    Ok(out)
}

/// Regular splitting pencils: 9-point arcs whose cubic interpolation system
/// has nullity exactly 2 and whose generator product is a scalar multiple
/// of G modulo squares.
pub fn find_pencils(z: &ZLocus) -> Result<Vec<PencilWitness>> {
    let inc = Incidence::new(z);
    find_pencils_with(z, &inc)
}

pub fn find_pencils_with(z: &ZLocus, inc: &Incidence) -> Result<Vec<PencilWitness>> {
    assert_eq!(z.b(), 6, "the degree-≤3 dictionary holds for b = 6");
    let k = z.field().clone();
    let g = z.g_common();
    let pts = z.points();
    let rows_all: Vec<[FFElem; 10]> = pts
        .iter()
        .map(|p| monomial_row::<10>(&k, p.coords, &CUBIC_MONOMIALS))
        .collect();
    let mut out = scan_arcs(pts.len(), 9, inc, |chosen, mask| {
        let mut m: [[FFElem; 10]; 9] = [[FFElem::ZERO; 10]; 9];
        for (r, &i) in chosen.iter().enumerate() {
            m[r] = rows_all[i];
        }
        let rank = rank_small(&k, &mut m, 10);
        if 10 - rank != 2 {
            return None;
        }
        let rows: Vec<Vec<FFElem>> = chosen.iter().map(|&i| rows_all[i].to_vec()).collect();
        let ker = linalg::kernel(&k, rows, 10);
        debug_assert_eq!(ker.len(), 2);
        let ca = cubic_from_coeffs(&k, &ker[0]);
        let cb = cubic_from_coeffs(&k, &ker[1]);
        if equiv_mod_squares(&ca.mul(&cb), g).is_some() {
            let mut b0 = [FFElem::ZERO; 10];
            let mut b1 = [FFElem::ZERO; 10];
            b0.copy_from_slice(&ker[0]);
            b1.copy_from_slice(&ker[1]);
            Some(Ok(PencilWitness {
                word: mask,
                basis: (b0, b1),
            }))
        } else {
            None
        }
    })?;
    out.sort_by_key(|p| p.word);
    Ok(out)
}

/// Runs the nullity/product test on one 9-point subset (no collinearity
/// filter).  Returns (nullity, passed product test).
pub fn pencil_test(z: &ZLocus, word: Word) -> Result<(usize, bool)> {
    let k = z.field().clone();
    let pts = z.points();
    let rows: Vec<Vec<FFElem>> = (0..pts.len())
        .filter(|&i| word & (1 << i) != 0)
        .map(|i| monomial_row::<10>(&k, pts[i].coords, &CUBIC_MONOMIALS).to_vec())
        .collect();
    let ker = linalg::kernel(&k, rows, 10);
    if ker.len() != 2 {
        return Ok((ker.len(), false));
    }
    let ca = cubic_from_coeffs(&k, &ker[0]);
    let cb = cubic_from_coeffs(&k, &ker[1]);
    Ok((2, equiv_mod_squares(&ca.mul(&cb), z.g_common()).is_some()))
}

fn monomial_row<const C: usize>(
    k: &FieldCtx,
    p: [FFElem; 3],
    monomials: &[(u8, u8, u8); C],
) -> [FFElem; C] {
    let mut pow = [[FFElem::ONE; 4]; 3];
    for v in 0..3 {
        for e in 1..4 {
            pow[v][e] = k.mul(pow[v][e - 1], p[v]);
        }
    }
    let mut row = [FFElem::ZERO; C];
    for (c, &(i, j, l)) in monomials.iter().enumerate() {
        row[c] = k.mul(
            k.mul(pow[0][i as usize], pow[1][j as usize]),
            pow[2][l as usize],
        );
    }
    row
}

pub fn cubic_from_coeffs(k: &FieldCtx, coeffs: &[FFElem]) -> HomPoly3 {
    let terms: Vec<_> = CUBIC_MONOMIALS
        .iter()
        .zip(coeffs)
        .filter(|(_, c)| !c.is_zero())
        .map(|(&e, &c)| (e, c))
        .collect();
    HomPoly3::from_terms(k, 3, &terms).expect("cubic terms")
}

// ---------------------------------------------------------------------------
// The code
// ---------------------------------------------------------------------------

/// An F₂-linear code on the locus points: row-reduced basis, the full word
/// enumeration, and the weight enumerator.
#[derive(Clone, Debug)]
pub struct Code {
    pub n: usize,
    pub basis: Vec<Word>,
    pub words: Vec<Word>,
    pub weight_enumerator: Vec<u64>,
}

impl Code {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn sigma(&self) -> u32 {
        11 - self.dim() as u32
    }

    pub fn contains(&self, w: Word) -> bool {
        self.words.binary_search(&w).is_ok()
    }

    pub fn words_of_weight(&self, wt: u32) -> Vec<Word> {
        self.words
            .iter()
            .copied()
            .filter(|&w| weight(w) == wt)
            .collect()
    }
}

/// Row-reduces a set of generator words and spans the code.
pub fn span_code(n: usize, generators: &[Word]) -> Code {
    let mut basis: Vec<Word> = Vec::new();
    for &g in generators {
        let mut w = g;
        for &b in &basis {
            let lead = 31 - b.leading_zeros();
            if w >> lead & 1 == 1 {
                w ^= b;
            }
        }
        if w != 0 {
            basis.push(w);
            basis.sort_by_key(|x| std::cmp::Reverse(*x));
        }
    }
    // Back-substitute for a reduced basis.
    let snapshot = basis.clone();
    for i in 0..basis.len() {
        for &b in &snapshot {
            if b == basis[i] {
                continue;
            }
            let lead = 31 - b.leading_zeros();
            if basis[i] >> lead & 1 == 1 {
                basis[i] ^= b;
            }
        }
    }
    basis.sort_by_key(|x| std::cmp::Reverse(*x));
    let mut words: Vec<Word> = vec![0];
    for &b in &basis {
        let prev = words.clone();
        words.extend(prev.into_iter().map(|w| w ^ b));
    }
    words.sort_unstable();
    let mut weight_enumerator = vec![0u64; n + 1];
    for &w in &words {
        weight_enumerator[weight(w) as usize] += 1;
    }
    Code {
        n,
        basis,
        words,
        weight_enumerator,
    }
}

/// Spans the code of {full locus} ∪ line ∪ conic ∪ pencil words and
/// validates every word weight against the admissible set.
pub fn assemble_code(z: &ZLocus, split: &SplitCensus) -> Result<Code> {
    let n = z.n();
    let all_ones: Word = if n == 32 { u32::MAX } else { (1 << n) - 1 };
    let mut gens = vec![all_ones];
    gens.extend(split.lines.iter().map(|w| w.word));
    gens.extend(split.conics.iter().map(|w| w.word));
    gens.extend(split.pencils.iter().map(|w| w.word));
    let code = span_code(n, &gens);
    if code.dim() > 10 {
        return Err(Error::InternalInconsistency(format!(
            "code dimension {} exceeds 10",
            code.dim()
        )));
    }
    for &w in &code.words {
        if !weight_admissible(weight(w)) {
            return Err(Error::WeightViolation(weight(w)));
        }
    }
    Ok(code)
}

/// Weight-8 or weight-9 words of the code with no three collinear points.
pub fn irreducible_words(code: &Code, inc: &Incidence, wt: u32) -> Vec<Word> {
    assert!(wt == 8 || wt == 9);
    code.words_of_weight(wt)
        .into_iter()
        .filter(|&w| !inc.has_collinear_triple(w))
        .collect()
}

// ---------------------------------------------------------------------------
// Configuration invariants
// ---------------------------------------------------------------------------

/// The nine numbers that pin down the S₂₁-equivalence class of a code.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, serde::Deserialize)]
pub struct ConfigInvariants {
    pub sigma: u32,
    /// Words of weight 5 (splitting lines).
    pub l: u64,
    /// Irreducible words of weight 8 (splitting smooth conics).
    pub q: u64,
    /// Irreducible words of weight 9 (regular splitting pencils).
    pub e: u64,
    /// Triples of weight-5 words meeting in one common point.
    pub tl: u64,
    /// Line–conic pairs with empty intersection (tangency).
    pub lq: u64,
    /// Conic pairs meeting the locus in exactly 2 common points.
    pub qq: u64,
    /// Conic triples with pairwise meets of size 4 and triple meet 3.
    pub tq1: u64,
    /// Conic triples with pairwise meets of size 2.
    pub tq2: u64,
}

impl ConfigInvariants {
    pub fn tuple(&self) -> [u64; 9] {
        [
            self.sigma as u64,
            self.l,
            self.q,
            self.e,
            self.tl,
            self.lq,
            self.qq,
            self.tq1,
            self.tq2,
        ]
    }
}

/// A word of weight 8 is reducible when it is the sum of two weight-5
/// words, a word of weight 9 when it is the sum of a weight-5 and a
/// weight-8 word; both reduce to one test against the weight-5 words.
pub fn combinatorial_irreducible(words: &[Word], fives: &[Word], wt: u32) -> Vec<Word> {
    let partner = match wt {
        8 => 5,
        9 => 8,
        _ => unreachable!("only weights 8 and 9 decompose"),
    };
    words
        .iter()
        .copied()
        .filter(|&w| weight(w) == wt)
        .filter(|&w| !fives.iter().any(|&f| weight(w ^ f) == partner))
        .collect()
}

/// Computes the full invariant tuple of a code given purely as a word list.
pub fn config_invariants_of_words(words: &[Word], dim: usize) -> ConfigInvariants {
    let fives: Vec<Word> = words.iter().copied().filter(|&w| weight(w) == 5).collect();
    let q_words = combinatorial_irreducible(words, &fives, 8);
    let e_words = combinatorial_irreducible(words, &fives, 9);

    let mut tl = 0u64;
    for (i, &a) in fives.iter().enumerate() {
        for (j, &b) in fives.iter().enumerate().skip(i + 1) {
            let ab = a & b;
            for &c in fives.iter().skip(j + 1) {
                if weight(ab & c) == 1 {
                    tl += 1;
                }
            }
        }
    }
    let mut lq = 0u64;
    for &a in &fives {
        for &b in &q_words {
            if a & b == 0 {
                lq += 1;
            }
        }
    }
    let mut qq = 0u64;
    for (i, &a) in q_words.iter().enumerate() {
        for &b in q_words.iter().skip(i + 1) {
            if weight(a & b) == 2 {
                qq += 1;
            }
        }
    }
    let mut tq1 = 0u64;
    let mut tq2 = 0u64;
    for (i, &a) in q_words.iter().enumerate() {
        for (j, &b) in q_words.iter().enumerate().skip(i + 1) {
            let wab = weight(a & b);
            if wab != 4 && wab != 2 {
                continue;
            }
            for &c in q_words.iter().skip(j + 1) {
                let (wac, wbc) = (weight(a & c), weight(b & c));
                if wab == 4 && wac == 4 && wbc == 4 && weight(a & b & c) == 3 {
                    tq1 += 1;
                }
                if wab == 2 && wac == 2 && wbc == 2 {
                    tq2 += 1;
                }
            }
        }
    }
    ConfigInvariants {
        sigma: 11 - dim as u32,
        l: fives.len() as u64,
        q: q_words.len() as u64,
        e: e_words.len() as u64,
        tl,
        lq,
        qq,
        tq1,
        tq2,
    }
}

/// Orbit partition of a word list under the point permutation.
pub fn word_orbits(words: &[Word], perm: &[usize]) -> Vec<Vec<usize>> {
    let apply = |w: Word| -> Word {
        let mut out = 0;
        let mut rest = w;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            out |= 1 << perm[i];
        }
        out
    };
    let lookup: std::collections::HashMap<Word, usize> =
        words.iter().enumerate().map(|(i, &w)| (w, i)).collect();
    let mut seen = vec![false; words.len()];
    let mut orbits = Vec::new();
    for start in 0..words.len() {
        if seen[start] {
            continue;
        }
        let mut orbit = Vec::new();
        let mut i = start;
        loop {
            if seen[i] {
                break;
            }
            seen[i] = true;
            orbit.push(i);
            let img = apply(words[i]);
            i = *lookup
                .get(&img)
                .expect("word set is stable under the Frobenius permutation");
        }
        orbits.push(orbit);
    }
    orbits
}

pub fn orbit_sizes(orbits: &[Vec<usize>]) -> Vec<usize> {
    let mut v: Vec<usize> = orbits.iter().map(|o| o.len()).collect();
    v.sort();
    v
}

// ---------------------------------------------------------------------------
// Full analysis
// ---------------------------------------------------------------------------

/// The complete splitting-curve analysis of one locus.
pub struct Analysis {
    pub split: SplitCensus,
    pub code: Code,
    pub invariants: ConfigInvariants,
}

/// Runs the line/conic/pencil scans, spans the code, cross-validates the
/// two irreducibility routes, and computes the invariants.
pub fn analyze_locus(z: &ZLocus) -> Result<Analysis> {
    if z.b() != 6 {
        return Err(Error::InternalInconsistency(
            "the splitting dictionary requires degree 6".into(),
        ));
    }
    let inc = Incidence::new(z);
    let lines = find_lines(z)?;
    let conics = find_conics_with(z, &inc)?;
    let pencils = find_pencils_with(z, &inc)?;
    let split = SplitCensus {
        lines,
        conics,
        pencils,
    };
    let code = assemble_code(z, &split)?;

    // Cross-validation: the weight-8/9 code words with no collinear triple
    // must be exactly the conic/pencil words found by the geometric scans,
    // and the combinatorial irreducibility criterion must agree.
    let irr8 = irreducible_words(&code, &inc, 8);
    let irr9 = irreducible_words(&code, &inc, 9);
    let conic_words: Vec<Word> = split.conics.iter().map(|c| c.word).collect();
    let pencil_words: Vec<Word> = split.pencils.iter().map(|p| p.word).collect();
    if irr8 != conic_words {
        return Err(Error::InternalInconsistency(
            "irreducible weight-8 words differ from the conic scan".into(),
        ));
    }
    if irr9 != pencil_words {
        return Err(Error::InternalInconsistency(
            "irreducible weight-9 words differ from the pencil scan".into(),
        ));
    }
    let fives: Vec<Word> = code.words_of_weight(5);
    let line_words: Vec<Word> = split.lines.iter().map(|l| l.word).collect();
    if fives != line_words {
        return Err(Error::InternalInconsistency(
            "weight-5 words differ from the line scan".into(),
        ));
    }
    if combinatorial_irreducible(&code.words, &fives, 8) != irr8
        || combinatorial_irreducible(&code.words, &fives, 9) != irr9
    {
        return Err(Error::InternalInconsistency(
            "combinatorial and collinearity irreducibility disagree".into(),
        ));
    }

    let invariants = config_invariants_of_words(&code.words, code.dim());
    Ok(Analysis {
        split,
        code,
        invariants,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2::canonical_field;
    use crate::poly3::parse_poly;
    use crate::samples;
    use crate::zlocus::compute_zlocus;

    #[test]
    fn classical_sextic_has_21_lines_and_sigma_1() {
        let k = canonical_field(1).unwrap();
        let g = samples::dolgachev_kondo(&k).unwrap();
        let z = compute_zlocus(&g).unwrap();
        let a = analyze_locus(&z).unwrap();
        assert_eq!(a.split.lines.len(), 21);
        assert_eq!(a.split.conics.len(), 0);
        assert_eq!(a.split.pencils.len(), 0);
        assert_eq!(a.code.dim(), 10);
        assert_eq!(a.code.sigma(), 1);
        assert_eq!(
            a.invariants.tuple(),
            [1, 21, 0, 0, 210, 0, 0, 0, 0]
        );
        // Any two line words share exactly one point.
        for (i, l1) in a.split.lines.iter().enumerate() {
            for l2 in a.split.lines.iter().skip(i + 1) {
                assert_eq!(weight(l1.word & l2.word), 1);
            }
        }
    }

    #[test]
    fn sigma2_code() {
        let k = canonical_field(1).unwrap();
        let g = parse_poly(samples::SIGMA2, &k).unwrap();
        let z = compute_zlocus(&g).unwrap();
        let a = analyze_locus(&z).unwrap();
        assert_eq!(a.code.sigma(), 2);
    }

    #[test]
    fn union_of_two_line_words_is_reducible() {
        let k = canonical_field(1).unwrap();
        let g = samples::dolgachev_kondo(&k).unwrap();
        let z = compute_zlocus(&g).unwrap();
        let a = analyze_locus(&z).unwrap();
        let w = a.split.lines[0].word ^ a.split.lines[1].word;
        assert_eq!(weight(w), 8);
        let inc = Incidence::new(&z);
        // Contains 4 collinear points of each line.
        assert!(inc.has_collinear_triple(w));
        assert!(combinatorial_irreducible(&[w], &a.code.words_of_weight(5), 8).is_empty());
    }
}
