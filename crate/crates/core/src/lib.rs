// Negated float comparisons like !(a < b) are deliberate: they reject NaN
// along with the out-of-range values.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

//! Orthonormal polynomials for compactly supported measures in the plane.
//!
//! The crate builds discrete representations of planar measures (quadrature
//! nodes plus point masses), constructs orthonormal polynomial bases for
//! them, and exposes the machinery needed to run ratio-asymptotics and
//! measure-transform experiments: weighted Cauchy sums, density-1
//! subsequence masks, Faber polynomials on lemniscates, and the Uvarov /
//! Christoffel transforms.

pub mod asymptotics;
pub mod error;
pub mod faber;
pub mod measure;
pub mod opoly;
pub mod rng;
pub mod saff;
pub mod transforms;

pub use error::Error;
pub use measure::{Measure, Polynomial, SupportDescriptor};
pub use opoly::{OrthoBasis, VerblunskySeq};

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
