//! A small gallery of sextics with known splitting behaviour, used by the
//! examples and the acceptance suite.  All have coefficients in F₂; parse
//! them over any field.

use crate::error::Result;
use crate::gf2::FieldCtx;
use crate::poly3::{parse_poly, HomPoly3};

/// The classical Dolgachev–Kondō sextic X0·X1·X2·(X0³+X1³+X2³), expanded.
/// Its 21 locus points are exactly the F₄-rational points of the plane, all
/// 21 F₄-rational lines split, and the Artin invariant is 1.
pub fn dolgachev_kondo(ctx: &FieldCtx) -> Result<HomPoly3> {
    parse_poly("X0^4*X1*X2 + X0*X1^4*X2 + X0*X1*X2^4", ctx)
}

/// The degree-(q+2) generalization X0·X1·X2·(X0^(q-1)+X1^(q-1)+X2^(q-1))
/// whose locus is the full set of F_q-rational points.
pub fn dolgachev_kondo_q(ctx: &FieldCtx, q: u32) -> Result<HomPoly3> {
    let e = q - 1;
    parse_poly(
        &format!("X0^{}*X1*X2 + X0*X1^{}*X2 + X0*X1*X2^{}", e + 1, e + 1, e + 1),
        ctx,
    )
}

/// Modulus of the degree-14 field in which [`SIGMA4`] and [`SIGMA7`] have
/// their locus points.
pub const DEGREE14_MODULUS: &str = "t^14+t^13+t^12+t^8+t^5+t^4+t^3+t^2+1";

/// A sextic with Artin invariant 4: the locus splits into Frobenius orbits
/// of sizes 7 and 14 over F_{2^14}, and exactly 7 lines and 7 smooth conics
/// split.
pub const SIGMA4: &str = "X0^5*X1 + X0^5*X2 + X0^3*X1^3 + X0^3*X1^2*X2 + X0^3*X1*X2^2 \
                          + X0^3*X2^3 + X0^2*X1*X2^3 + X0*X2^5 + X1^5*X2";

/// A sextic with the maximal Artin invariant 10: one rational locus point
/// plus a single Frobenius orbit of length 20 over F_{2^20}; no curve of
/// degree ≤ 3 splits.
pub const SIGMA10: &str = "X0^5*X2 + X0^3*X1^3 + X0^3*X2^3 + X0*X1*X2^4 + X1^5*X2";

/// Modulus of the degree-20 field for [`SIGMA10`].
pub const DEGREE20_MODULUS: &str = "t^20+t^19+t^18+t^15+t^10+t^7+t^6+t^4+1";

/// A sextic with Artin invariant 7 whose code is generated by the base loci
/// of 7 regular splitting pencils of cubics (one Frobenius orbit).
pub const SIGMA7: &str = "X0^5*X1 + X0^3*X1^2*X2 + X0*X2^5 + X1^5*X2";

/// A sextic with Artin invariant 4 and the same line/conic counts as
/// [`SIGMA4`] but a different configuration (the two codes are separated by
/// the finer configuration invariants).  Locus points live in F_{2^24}.
pub const SIGMA4_TWIN: &str = "X0^5*X2 + X0^4*X1*X2 + X0^3*X1^2*X2 + X0^2*X1^3*X2 \
                               + X0*X1^4*X2 + X0*X1^3*X2^2 + X0*X1*X2^4";

/// A sextic with Artin invariant 2; every locus point is F_{2^4}-rational.
pub const SIGMA2: &str = "X0^4*X1*X2 + X0^3*X1^3 + X0*X1^4*X2 + X0*X1*X2^4";

/// A sextic with Artin invariant 3: three splitting lines in one Frobenius
/// orbit, 45 splitting conics, no splitting pencil.  Locus points live in
/// F_{2^6} over [`DEGREE6_MODULUS`].
pub const SIGMA3: &str = "X0^5*X2 + X0^4*X1*X2 + X0^3*X1^3 + X0^3*X1^2*X2 + X0^3*X2^3 \
                          + X0^2*X1^3*X2 + X0*X1^3*X2^2 + X0*X1*X2^4 + X1^5*X2";

/// Modulus of the degree-6 field for [`SIGMA3`].
pub const DEGREE6_MODULUS: &str = "t^6+t^5+t^3+t^2+1";

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2::canonical_field;

    #[test]
    fn gallery_parses() {
        let k = canonical_field(1).unwrap();
        for text in [SIGMA4, SIGMA10, SIGMA7, SIGMA4_TWIN, SIGMA2, SIGMA3] {
            let g = parse_poly(text, &k).unwrap();
            assert_eq!(g.degree(), 6);
        }
        assert_eq!(dolgachev_kondo(&k).unwrap().len(), 3);
        assert_eq!(dolgachev_kondo_q(&k, 8).unwrap().degree(), 10);
    }
}
