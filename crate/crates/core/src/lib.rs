//! Exact MacWilliams machinery for linear codes, `m`-tuples of codes and
//! Construction-A lattices.
//!
//! Every identity is checked in exact arithmetic: characters live in
//! `ℤ[ζ_p]`, parameters are rationals, enumerators have big-integer
//! coefficients. Only the illustrative lattice checks (Gaussian sums and
//! hyperbolic parametrisations) use floating point, and those carry explicit
//! truncation bounds.

pub mod algebra;
pub mod codes;
pub mod distribution;
pub mod enumerators;
mod error;
pub mod lattice;
mod limits;
pub mod transforms;

pub use error::{Error, Result};
pub use limits::{Limits, DEFAULT_ENUMERATION_BUDGET, DEFAULT_TRANSFORM_BUDGET};
