#![cfg_attr(not(test), no_std)]
//! Exact arithmetic for the join manifolds `S^{2p+1} *_{l1,l2} S^3_w`.
//!
//! * [`exactpoly`]: integer polynomials, square-free decomposition, Sturm
//!   chains and certified positive root isolation.
//! * [`joinspace`]: validated join parameters and their topological invariants.
//! * [`classify`]: homotopy, homeomorphism and diffeomorphism predicates in dimension 7.
//! * [`cscrays`]: the constant scalar curvature polynomial `f(b)` and its rays.
//!
//! The crate needs only `alloc`.

extern crate alloc;

pub mod exactpoly;
pub mod joinspace;
pub mod classify;
pub mod cscrays;
