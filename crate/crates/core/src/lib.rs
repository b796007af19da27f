//! Exact flag-vector algebra for graded posets.
//!
//! The crate computes ab- and cd-indices, the Tchebyshev transforms of the
//! first and second kind (on posets and on polynomials), quasisymmetric
//! invariants, chain maps built from characters, the spectrum of the second
//! transform, and edge labelings of the transformed posets. All arithmetic
//! is exact.

pub mod ab_algebra;
pub mod error;
pub mod labelings;
pub mod lincomb;
pub mod linalg;
pub mod oracle;
pub mod poset;
pub mod qsym;
pub mod spectral;
pub mod transforms;
pub mod verify;
pub mod word;

pub use error::{Error, Result};
pub use lincomb::LinComb;
pub use poset::Poset;
pub use word::{AbPoly, AbWord, CdPoly, CdWord};
