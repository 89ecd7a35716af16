//! Neighborhood complexes, exact integral homology and exact coloring
//! invariants, assembled into checks of how far the Lovász topological
//! lower bound can fall below the chromatic and clique numbers.
//!
//! * [`graph`]: graphs, standard families, the two-block gadget and the
//!   separation construction, DIMACS I/O.
//! * [`complex`]: neighborhood complexes, face enumeration, facet files.
//! * [`homology`]: boundary matrices, Smith normal form, reduced homology,
//!   `conn = 0` certificates.
//! * [`invariants`]: maximum clique, exact chromatic number, witnesses.
//! * [`verify`]: end-to-end checks and JSON reports.
//! * [`cli`]: the `nbhd` command line.

pub mod cli;
pub mod complex;
pub mod error;
pub mod graph;
pub mod homology;
pub mod invariants;
pub mod verify;

pub use error::{Error, ErrorKind, Result};
