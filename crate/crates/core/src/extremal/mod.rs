//! Extremal complexes: the join family, equality cases and the search for
//! further equality cases.

pub mod equality;
pub mod family;
pub mod iso;
pub mod probe;

pub use equality::{equality_case_check, equality_check, equality_target, EqualityVerdict};
pub use family::{
    admissible_dimensions, build_z, canonical_complex, canonical_equality_complex, predicted_profile_z, skeleton_join,
    verify_z_family, PredictedRow, ZFamilyReport, ZFamilyRow, ZParams,
};
pub use iso::{graphs_isomorphic, graphs_up_to_isomorphism, isomorphic};
pub use probe::{conjecture_probe, ProbeConfig, ProbeHit, ProbeMode, ProbeReport};
