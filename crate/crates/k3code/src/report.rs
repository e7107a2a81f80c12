//! Report assembly: one structure per command, serializable to JSON and
//! printable as a table.  Reports are pure functions of their inputs.

use serde::{Deserialize, Serialize};

use crate::census::{Census, ClassEntry};
use crate::error::Result;
use crate::gf2::FieldCtx;
use crate::lattice::{self, LatticeExport};
use crate::poly3::HomPoly3;
use crate::splitcode::{self, Analysis, ConfigInvariants, Word};
use crate::zlocus::{compute_zlocus, ZLocus, ZLocusExport};

#[derive(Serialize, Deserialize)]
pub struct FieldInfo {
    pub degree: u32,
    pub def_poly: String,
}

/// Bit string of a word in locus order (index 0 first).
pub fn word_bits(w: Word, n: usize) -> String {
    (0..n)
        .map(|i| if w >> i & 1 == 1 { '1' } else { '0' })
        .collect()
}

/// The list encoding of a word: the big-endian integer
/// 2^(n−1)·α₀ + ⋯ + α_{n−1}.
pub fn word_big_endian(w: Word, n: usize) -> u64 {
    (0..n).fold(0u64, |acc, i| acc | ((w as u64 >> i & 1) << (n - 1 - i)))
}

#[derive(Serialize, Deserialize)]
pub struct WitnessExport {
    pub word: String,
    pub witness: Vec<String>,
    pub frobenius_orbit: usize,
}

#[derive(Serialize, Deserialize)]
pub struct CodeExport {
    pub dim: usize,
    pub weight_enumerator: Vec<u64>,
    pub basis: Vec<String>,
}

#[derive(Serialize, Deserialize)]
pub struct AnalyzeReport {
    pub input: String,
    /// Coefficient field of the input.
    pub input_field: FieldInfo,
    pub sigma: u32,
    pub invariants: ConfigInvariants,
    pub code: CodeExport,
    pub locus: ZLocusExport,
    pub lines: Vec<WitnessExport>,
    pub conics: Vec<WitnessExport>,
    pub pencils: Vec<WitnessExport>,
    pub lattice: LatticeExport,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matched_class: Option<String>,
}

/// Everything `analyze` computes, with the live objects kept for callers.
pub struct AnalyzeOutcome {
    pub locus: ZLocus,
    pub analysis: Analysis,
    pub lattice: lattice::DyadicLattice,
    pub report: AnalyzeReport,
}

fn witness_exports(
    z: &ZLocus,
    items: &[(Word, Vec<crate::gf2::FFElem>)],
) -> Vec<WitnessExport> {
    let k = z.field();
    let words: Vec<Word> = items.iter().map(|(w, _)| *w).collect();
    let orbits = splitcode::word_orbits(&words, z.frobenius_perm());
    let mut orbit_of = vec![0usize; words.len()];
    for (oi, orbit) in orbits.iter().enumerate() {
        for &i in orbit {
            orbit_of[i] = oi;
        }
    }
    items
        .iter()
        .enumerate()
        .map(|(i, (w, coeffs))| WitnessExport {
            word: word_bits(*w, z.n()),
            witness: coeffs.iter().map(|&c| k.render(c)).collect(),
            frobenius_orbit: orbit_of[i],
        })
        .collect()
}

/// Runs the full pipeline on a degree-6 form.
pub fn analyze(g: &HomPoly3) -> Result<AnalyzeOutcome> {
    let locus = compute_zlocus(g)?;
    let analysis = splitcode::analyze_locus(&locus)?;
    let lat = lattice::lattice_from_code(&analysis.code)?;
    let n = locus.n();
    let report = AnalyzeReport {
        input: g.to_string(),
        input_field: FieldInfo {
            degree: g.ctx().degree(),
            def_poly: g.ctx().def_poly().to_string(),
        },
        sigma: analysis.code.sigma(),
        invariants: analysis.invariants,
        code: CodeExport {
            dim: analysis.code.dim(),
            weight_enumerator: analysis.code.weight_enumerator.clone(),
            basis: analysis
                .code
                .basis
                .iter()
                .map(|&b| word_bits(b, n))
                .collect(),
        },
        locus: locus.export(),
        lines: witness_exports(
            &locus,
            &analysis
                .split
                .lines
                .iter()
                .map(|l| (l.word, l.line.to_vec()))
                .collect::<Vec<_>>(),
        ),
        conics: witness_exports(
            &locus,
            &analysis
                .split
                .conics
                .iter()
                .map(|c| (c.word, c.conic.to_vec()))
                .collect::<Vec<_>>(),
        ),
        pencils: witness_exports(
            &locus,
            &analysis
                .split
                .pencils
                .iter()
                .map(|p| {
                    let mut v = p.basis.0.to_vec();
                    v.extend_from_slice(&p.basis.1);
                    (p.word, v)
                })
                .collect::<Vec<_>>(),
        ),
        lattice: lattice::export(&lat),
        matched_class: None,
    };
    Ok(AnalyzeOutcome {
        locus,
        analysis,
        lattice: lat,
        report,
    })
}

pub fn print_report(r: &AnalyzeReport) {
    println!("input:      {}", r.input);
    println!(
        "locus:      {} points over F_2^{} (mod {})",
        r.locus.points.len(),
        r.locus.field.degree,
        r.locus.field.def_poly
    );
    let orbit_sizes: Vec<usize> = {
        let mut v: Vec<usize> = r.locus.orbits.iter().map(Vec::len).collect();
        v.sort();
        v
    };
    println!("orbits:     {orbit_sizes:?}");
    println!(
        "splitting:  {} lines, {} smooth conics, {} cubic pencils",
        r.lines.len(),
        r.conics.len(),
        r.pencils.len()
    );
    println!("code:       dim {}", r.code.dim);
    println!("sigma:      {}", r.sigma);
    let i = &r.invariants;
    println!(
        "invariants: (sigma,l,q,e,tl,lq,qq,tq1,tq2) = ({},{},{},{},{},{},{},{},{})",
        i.sigma, i.l, i.q, i.e, i.tl, i.lq, i.qq, i.tq1, i.tq2
    );
    println!(
        "lattice:    det = {}, even = {}, type I = {}",
        r.lattice.determinant, r.lattice.even, r.lattice.type_i
    );
    if let Some(c) = &r.matched_class {
        println!("class:      {c}");
    }
}

// ---------------------------------------------------------------------------
// Census export
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
pub struct ClassExport {
    pub id: String,
    pub dim: usize,
    pub sigma: u32,
    /// Standard-basis words in the big-endian integer encoding, the
    /// all-ones first word omitted.
    pub std_basis: Vec<u64>,
    pub weight_enumerator: Vec<u64>,
    pub invariants: ConfigInvariants,
}

#[derive(Serialize, Deserialize)]
pub struct CensusExport {
    pub n: usize,
    pub weights: Vec<u32>,
    pub counts_by_dim: Vec<usize>,
    /// classes[k] holds the classes of dimension k+1.
    pub classes: Vec<Vec<ClassExport>>,
    /// Strict containments [a] < [b] between class ids.
    pub order_edges: Vec<(String, String)>,
}

impl CensusExport {
    pub fn all_classes(&self) -> impl Iterator<Item = &ClassExport> {
        self.classes.iter().flatten()
    }
}

pub fn class_id(dim: usize, idx: usize) -> String {
    format!("d{dim}.{idx}")
}

fn export_class(e: &ClassEntry, idx: usize, n: usize) -> ClassExport {
    ClassExport {
        id: class_id(e.dim, idx),
        dim: e.dim,
        sigma: e.invariants.sigma,
        std_basis: e
            .std_basis
            .words
            .iter()
            .skip(1)
            .map(|&w| word_big_endian(w, n))
            .collect(),
        weight_enumerator: e.weight_enumerator.clone(),
        invariants: e.invariants,
    }
}

pub fn export_census(
    census: &Census,
    edges: &[(crate::census::ClassCoord, crate::census::ClassCoord)],
) -> CensusExport {
    let classes = census
        .levels
        .iter()
        .map(|level| {
            level
                .iter()
                .enumerate()
                .map(|(idx, e)| export_class(e, idx, census.n))
                .collect()
        })
        .collect();
    CensusExport {
        n: census.n,
        weights: census.weights.clone(),
        counts_by_dim: census.counts(),
        classes,
        order_edges: edges
            .iter()
            .map(|&((da, ia), (db, ib))| (class_id(da, ia), class_id(db, ib)))
            .collect(),
    }
}

/// Parses a polynomial plus optional field modulus from CLI-style inputs.
pub fn parse_input_poly(poly: &str, field_poly: Option<&str>) -> Result<HomPoly3> {
    let ctx: FieldCtx = match field_poly {
        Some(t) => crate::gf2::field_create(t.parse()?)?,
        None => crate::gf2::canonical_field(1)?,
    };
    crate::poly3::parse_poly(poly, &ctx)
}
