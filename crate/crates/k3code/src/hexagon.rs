//! A generative family: hexagons inscribed in the smooth conic
//! X0² = X1·X2.  The product of the six side lines is a sextic whose double
//! plane splits all six sides, the hexagon's Pascal line, and at least four
//! smooth conics (the original one and the conics circumscribing three
//! re-inscriptions of the hexagon), forcing Artin invariant ≤ 5.

use crate::error::{Error, Result};
use crate::gf2::{canonical_field, embedding_create, FFElem, FieldCtx};
use crate::poly3::HomPoly3;
use crate::splitcode::{self, Analysis, Word};
use crate::zlocus::{compute_zlocus, cross, dot, ZLocus};

/// A hexagon on the conic, its sides, and its Pascal line.
pub struct Hexagon {
    pub field: FieldCtx,
    /// Vertices [t, t², 1] for the six parameters.
    pub vertices: [[FFElem; 3]; 6],
    /// Side lines: vertex i joined to vertex i+1 (cyclically).
    pub sides: [[FFElem; 3]; 6],
    /// The line through the three opposite-side intersections.
    pub pascal_line: [FFElem; 3],
    /// Product of the six side forms.
    pub poly: HomPoly3,
}

/// Builds the hexagon through the conic points with the given distinct
/// parameters.
pub fn hexagon(k: &FieldCtx, params: [FFElem; 6]) -> Result<Hexagon> {
    for i in 0..6 {
        for j in i + 1..6 {
            if params[i] == params[j] {
                return Err(Error::DegenerateHexagon(
                    "two hexagon vertices coincide".into(),
                ));
            }
        }
    }
    let vertex = |t: FFElem| -> [FFElem; 3] { [t, k.mul(t, t), FFElem::ONE] };
    let vertices: Vec<[FFElem; 3]> = params.iter().map(|&t| vertex(t)).collect();
    let mut sides = Vec::with_capacity(6);
    for i in 0..6 {
        let l = cross(k, vertices[i], vertices[(i + 1) % 6]);
        if l.iter().all(|c| c.is_zero()) {
            return Err(Error::DegenerateHexagon("degenerate side line".into()));
        }
        sides.push(l);
    }
    // Distinct sides: proportional coefficient triples collapse the sextic.
    for i in 0..6 {
        for j in i + 1..6 {
            if cross(k, sides[i], sides[j]).iter().all(|c| c.is_zero()) {
                return Err(Error::DegenerateHexagon("two sides coincide".into()));
            }
        }
    }
    // Pascal line through the intersections of opposite sides.
    let q1 = cross(k, sides[0], sides[3]);
    let q2 = cross(k, sides[1], sides[4]);
    let q3 = cross(k, sides[2], sides[5]);
    let pascal_line = cross(k, q1, q2);
    if pascal_line.iter().all(|c| c.is_zero()) || !dot(k, pascal_line, q3).is_zero() {
        return Err(Error::DegenerateHexagon(
            "opposite-side intersections are not in general position".into(),
        ));
    }
    let mut poly = line_form(k, sides[0]);
    for s in &sides[1..] {
        poly = poly.mul(&line_form(k, *s));
    }
    Ok(Hexagon {
        field: k.clone(),
        vertices: vertices.try_into().unwrap(),
        sides: sides.try_into().unwrap(),
        pascal_line,
        poly,
    })
}

fn line_form(k: &FieldCtx, l: [FFElem; 3]) -> HomPoly3 {
    let terms = [
        ((1u8, 0u8, 0u8), l[0]),
        ((0, 1, 0), l[1]),
        ((0, 0, 1), l[2]),
    ];
    HomPoly3::from_terms(k, 1, &terms).expect("linear form")
}

/// Deterministic parameter tuples: consecutive generator powers starting at
/// a given offset (with 0 substituted on request by using offset 0).
pub fn deterministic_params(k: &FieldCtx, offset: u32) -> [FFElem; 6] {
    let a = k.gen();
    let mut out = [FFElem::ZERO; 6];
    for (i, slot) in out.iter_mut().enumerate() {
        *slot = k.pow(a, (offset + i as u32 + 1) as u128);
    }
    out
}

/// The full hexagon analysis.
pub struct HexagonAnalysis {
    pub hexagon: Hexagon,
    pub locus: ZLocus,
    pub analysis: Analysis,
    /// Words of the six sides and the Pascal line, in locus order.
    pub side_words: [Word; 6],
    pub pascal_word: Word,
}

/// Builds the sextic, computes its locus and code, and verifies the
/// Pascal-configuration consequences: the six sides and the Pascal line
/// split, at least four smooth conics split, and σ ≤ 5.
pub fn analyze_hexagon(k: &FieldCtx, params: [FFElem; 6]) -> Result<HexagonAnalysis> {
    let hex = hexagon(k, params)?;
    let locus = compute_zlocus(&hex.poly)?;
    let analysis = splitcode::analyze_locus(&locus)?;

    // Incidence words of the seven distinguished lines, evaluated in a
    // field containing both the parameter field and the locus field.
    let joint_deg = lcm(k.degree(), locus.field().degree());
    let joint = canonical_field(joint_deg)?;
    let e_hex = embedding_create(k, &joint)?;
    let e_loc = embedding_create(locus.field(), &joint)?;
    let word_of_line = |l: [FFElem; 3]| -> Word {
        let lj = [e_hex.apply(l[0]), e_hex.apply(l[1]), e_hex.apply(l[2])];
        let mut w = 0;
        for (i, p) in locus.points().iter().enumerate() {
            let pj = [
                e_loc.apply(p.coords[0]),
                e_loc.apply(p.coords[1]),
                e_loc.apply(p.coords[2]),
            ];
            if dot(&joint, lj, pj).is_zero() {
                w |= 1 << i;
            }
        }
        w
    };
    let mut side_words = [0 as Word; 6];
    for i in 0..6 {
        side_words[i] = word_of_line(hex.sides[i]);
    }
    let pascal_word = word_of_line(hex.pascal_line);

    let line_words: Vec<Word> = analysis.split.lines.iter().map(|l| l.word).collect();
    for w in side_words.iter().chain([&pascal_word]) {
        if !line_words.contains(w) {
            return Err(Error::InternalInconsistency(
                "a hexagon side or the Pascal line is not a splitting line".into(),
            ));
        }
    }
    if analysis.split.conics.len() < 4 {
        return Err(Error::InternalInconsistency(format!(
            "only {} splitting conics; the Pascal configuration guarantees 4",
            analysis.split.conics.len()
        )));
    }
    if analysis.code.sigma() > 5 {
        return Err(Error::InternalInconsistency(
            "hexagon sextic with Artin invariant > 5".into(),
        ));
    }
    Ok(HexagonAnalysis {
        hexagon: hex,
        locus,
        analysis,
        side_words,
        pascal_word,
    })
}

fn lcm(a: u32, b: u32) -> u32 {
    fn gcd(a: u32, b: u32) -> u32 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    a / gcd(a, b) * b
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_repeated_vertices() {
        let k = canonical_field(5).unwrap();
        let a = k.gen();
        let params = [a, a, k.pow(a, 3), k.pow(a, 4), k.pow(a, 5), k.pow(a, 6)];
        assert!(matches!(
            hexagon(&k, params),
            Err(Error::DegenerateHexagon(_))
        ));
    }

    #[test]
    fn pascal_line_exists_for_generic_hexagon() {
        let k = canonical_field(5).unwrap();
        let hex = hexagon(&k, deterministic_params(&k, 0)).unwrap();
        assert_eq!(hex.poly.degree(), 6);
        // The three opposite-side intersections are collinear.
        let q3 = cross(&k, hex.sides[2], hex.sides[5]);
        assert!(dot(&k, hex.pascal_line, q3).is_zero());
    }
}
