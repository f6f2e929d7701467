//! Adjacent q-cycles, Foata's fundamental transformation and mesh patterns.
//!
//! Under the fundamental transformation `π ↦ σ`, the adjacent q-cycles
//! `(i, i+1, …, i+q−1)` of `π` are counted by the occurrences in `σ` of two
//! mesh patterns `r_q` and `s_q`. This crate provides the objects involved
//! ([`perm`], [`foata`], [`mesh`]), exact counting and generating functions
//! ([`enumerate`], [`series`]), exhaustive checkers for the correspondence
//! and for the enumeration of the avoiders of the pattern `p`, and a reader
//! for OEIS b-files ([`bfile`]).

pub mod bfile;
pub mod enumerate;
pub mod error;
pub mod foata;
pub mod mesh;
pub mod perm;
pub mod series;

pub use error::{Error, Result};
pub use foata::{foata_forward, foata_inverse};
pub use mesh::{
    named_pattern, parse_pattern, r_pattern, s_pattern, MeshPattern, NamedPattern, Occurrence,
};
pub use perm::{CycleDecomposition, Permutation, QCycleProfile, Symmetry};
pub use series::CoefficientSeries;
