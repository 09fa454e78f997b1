//! CSC rays of the `w`-Sasaki cone.
//!
//! A ray `b > 0` is admissible extremal for every `b != w2/w1`, and its
//! admissible extremal representative has constant scalar curvature exactly
//! when `f(b) = 0`. This is a statement about that one representative: a ray
//! reported here may still carry other CSC metrics or none of this form.

mod fpoly;
mod rays;
mod sweep;

pub use fpoly::{
    build_f, build_g_p1, deflate_forbidden, forced_multiplicity_floor, fourth_derivative_at_one, quasireg_family, wz_threshold,
    CscPolynomial,
};
pub use rays::{csc_rays, csc_rays_with_precision, Ray, RayClass, RayReport};
pub use sweep::{evaluate_l2, min_l2_multiple_csc, threshold_sweep, CscSweep, SweepOutcome, SweepPoint, SweepRow};

use crate::exactpoly::PolyError;
use crate::joinspace::ParamError;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum CscError {
    #[error("forced root has multiplicity {found}, expected at least {floor}")]
    MultiplicityBelowFloor { found: u32, floor: u32 },
    #[error("roots of f do not pair up under b -> 1/b")]
    UnpairedRoots,
    #[error("quasi-regular family degenerates for p = {p}")]
    DegenerateFamily { p: u32 },
    #[error("quasi-regular family has no positive solution for p = {p}")]
    NoPositiveFamily { p: u32 },
    #[error("quasi-regular family for p = {p} exceeds 64-bit parameters")]
    FamilyTooLarge { p: u32 },
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Params(#[from] ParamError),
}

impl CscError {
    /// True when the error means a broken invariant rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            CscError::MultiplicityBelowFloor { .. }
                | CscError::UnpairedRoots
                | CscError::Poly(_)
        )
    }
}
