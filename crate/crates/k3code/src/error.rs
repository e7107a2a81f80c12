use thiserror::Error;

/// Errors shared by every layer of the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("polynomial is not irreducible over F_2")]
    NotIrreducible,
    #[error("division by zero in a finite field")]
    DivisionByZero,
    #[error("incompatible fields: degree {sub} does not divide degree {sup}")]
    IncompatibleFields { sub: u32, sup: u32 },
    #[error("field degree {0} exceeds the cap of 64")]
    FieldCapExceeded(u32),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("monomials of mixed total degree")]
    MixedDegree,
    #[error("polynomial is outside the admissible locus: {0}")]
    NotInU(String),
    #[error("every chart and coordinate change degenerated")]
    DegenerateCharts,
    #[error("internal consistency violation: {0}")]
    InternalInconsistency(String),
    #[error("code word of weight {0} outside the admissible weight set")]
    WeightViolation(u32),
    #[error("lattice pairing is not integral (word fails the parity lift)")]
    NotIntegral,
    #[error("lattice is not even")]
    NotEven,
    #[error("no class matches the invariant tuple")]
    NoMatch,
    #[error("several classes match the invariant tuple")]
    AmbiguousMatch,
    #[error("degenerate hexagon: {0}")]
    DegenerateHexagon(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
