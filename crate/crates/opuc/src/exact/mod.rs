//! Exact arithmetic substrate: arbitrary-precision rationals, Gaussian
//! rationals, and dense univariate polynomials over them.
//!
//! Everything here is immutable after construction and all operations are
//! pure, so values can be shared across threads freely.

mod poly;
mod scalar;

pub use poly::GaussianRationalPoly;
pub use scalar::{
    gaussian_int, gaussian_rational, in_open_unit_disk, on_unit_circle, rational, to_complex64,
    GaussianRational, Rational,
};
