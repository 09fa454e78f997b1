//! Exact univariate polynomial kernel.
//!
//! Everything here runs on big integers and rationals; no decision ever
//! depends on a floating point value.

mod cubic;
mod isolate;
mod polynomial;
mod sqfree;
mod sturm;

pub use cubic::{cubic_discriminant, cubic_discriminant_of};
pub use isolate::{
    cauchy_bound, isolate_positive_roots, isolate_positive_roots_with_precision, isolate_real_roots,
    rational_roots, RationalInterval, RootRecord, RootValue, DEFAULT_DIGITS,
};
pub use polynomial::{IntPolynomial, RatPolynomial};
pub use sqfree::{squarefree_decompose, squarefree_part};
pub use sturm::{sturm_count, Bound, SturmChain};

#[derive(Clone, Copy, Debug, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("interval is empty: lower end must be below upper end")]
    EmptyInterval,
    #[error("leading cubic coefficient is zero")]
    DegenerateCubic,
}
