//! Orthogonal polynomials on the unit circle (OPUC) with an emphasis on the
//! constant-coefficient family, whose measure of orthogonality lives on a
//! circular arc.
//!
//! The crate has two layers:
//!
//! * an **exact layer** over the Gaussian rationals ([`exact`]) in which every
//!   algebraic identity — recursion versus closed form, Wall polynomial
//!   equivalences, paraorthogonal and Pell identities — is checked with no
//!   rounding at all;
//! * a **floating layer** ([`geronimus`], [`kernels`], [`chebyshev`]) for the
//!   asymptotic statements: Schur-function and ratio limits, reproducing
//!   kernels, and the Bessel-kernel scaling of the kernel at an endpoint of
//!   the support arc.
//!
//! The [`szego`] module holds the recursion engine shared by both layers,
//! including the closed form for powers of a 2x2 matrix that drives all the
//! constant-coefficient formulas.

pub mod chebyshev;
mod error;
pub mod exact;
pub mod geronimus;
pub mod kernels;
pub mod summation;
pub mod szego;

pub use error::{Error, Result};
pub use num_complex::Complex64;
