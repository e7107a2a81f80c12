//! Splitting curves on supersingular K3 double planes in characteristic 2.
//!
//! A homogeneous sextic `G` over a binary field defines a purely inseparable
//! double plane `w² = G`.  When the zero locus `Z(dG)` of the differential is
//! reduced of dimension 0 it consists of 21 points, the images of the 21
//! nodes, and the minimal resolution is a supersingular K3 surface.  This
//! crate computes, with exact arithmetic throughout:
//!
//! * the 21 points of `Z(dG)` over an explicitly constructed finite field
//!   ([`zlocus`]),
//! * the binary code spanned by the splitting lines, smooth conics and
//!   regular cubic pencils, together with the Artin invariant
//!   `σ = 11 − dim C` ([`splitcode`]),
//! * the numerical Néron–Severi lattice as an overlattice of the node
//!   lattice, with its discriminant form ([`lattice`]),
//! * the isomorph-free classification of all admissible codes on 21 points
//!   under the symmetric group ([`census`]).
//!
//! The crate is a library first; see `examples/` for one runnable program
//! per capability and `src/main.rs` for the thin command-line front end.

// Small fixed-size matrix math reads better with explicit indices.
#![allow(clippy::needless_range_loop)]

pub mod census;
pub mod error;
pub mod gf2;
pub mod hexagon;
pub mod lattice;
pub mod linalg;
pub mod poly3;
pub mod report;
pub mod samples;
pub mod splitcode;
pub mod zlocus;

pub use error::{Error, Result};
