//! Join parameters and the topology of `M_{l1,l2,w}`.
//!
//! Ring and group computations assume `p > 1`; the five-dimensional case
//! `p = 1` only carries its diffeomorphism type.

mod invariants;
mod params;
mod ring;

pub use invariants::{
    bundle_type_wz, c1_coefficient, cohomology_group, cohomology_ring, diffeo_type_dim5, h4_order,
    homotopy_group, is_spin, iterated_join_ring, linking_form, p1_class, AbelianGroup, Dim5Type, Residue,
    SphereBundle,
};
pub use params::JoinParams;
pub use ring::{Generator, Relation, RingPresentation};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ParamError {
    #[error("{name} must be a positive integer, got {value}")]
    NotPositive { name: &'static str, value: i64 },
    #[error("{name} is too large")]
    TooLarge { name: &'static str },
    #[error("weights must satisfy w1 >= w2, got w = ({w1},{w2})")]
    WeightOrder { w1: u64, w2: u64 },
    #[error("gcd(w1, w2) = {gcd} for w = ({w1},{w2}), must be 1")]
    WeightsNotCoprime { w1: u64, w2: u64, gcd: u64 },
    #[error("gcd(l2, l1*w{which}) = {gcd}, must be 1")]
    L2NotCoprime { which: u8, gcd: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum TopologyError {
    #[error("requires p > 1, got p = {p}; for p = 1 use the five-dimensional diffeomorphism type")]
    RequiresPAboveOne { p: u32 },
    #[error("defined in dimension 7 only (p = 2), got p = {p}")]
    RequiresDimensionSeven { p: u32 },
    #[error("defined in dimension 5 only (p = 1), got p = {p}")]
    RequiresDimensionFive { p: u32 },
    #[error("cohomological degree {degree} outside 0..={top}")]
    DegreeOutOfRange { degree: u32, top: u32 },
    #[error("homotopy group pi_{i} is only tabulated for 1 <= i <= 4")]
    HomotopyIndexUnsupported { i: u32 },
    #[error("gcd{pair} = {gcd}, must be 1")]
    IteratedNotCoprime { pair: &'static str, gcd: u64 },
    #[error(transparent)]
    Params(#[from] ParamError),
}
