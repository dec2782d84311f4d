//! Reduced simplicial Laplacians on finite complexes, their spectral gaps
//! and Betti numbers, degree-based lower bounds for the gaps, and the
//! complexes that attain them.

pub mod bounds;
pub mod complex;
pub mod error;
pub mod extremal;
pub mod linalg;
pub mod operators;
pub mod simplex;
pub mod spectral;

pub use complex::{parse_edge_list, parse_facet_file, InducedComplex, MissingFaceReport, SimplicialComplex};
pub use error::{Error, Result};
pub use simplex::{sign, Simplex};
