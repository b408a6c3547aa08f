use num_complex::Complex64;
use thiserror::Error;

/// Errors produced by the exact and floating layers.
#[derive(Debug, Error)]
pub enum Error {
    /// Coefficient reversal asked for a nominal degree below the actual one.
    #[error("reversal degree {nominal} is smaller than the polynomial degree {actual}")]
    StarDegree { nominal: usize, actual: usize },

    /// Exact division left a remainder; this signals a recursion bug upstream.
    #[error("division by z^{power} leaves a nonzero remainder")]
    InexactDivision { power: usize },

    /// Every Verblunsky coefficient must lie strictly inside the unit disk.
    #[error("coefficient at index {index} has modulus >= 1")]
    CoefficientOutsideDisk { index: usize },

    /// Asked for more recursion steps than there are coefficients.
    #[error("step {requested} exceeds the {available} available coefficients")]
    NotEnoughCoefficients { requested: usize, available: usize },

    #[error("|alpha| must be strictly less than 1")]
    AlphaOutsideDisk,

    /// The endpoint experiment is stated for real alpha in (-1, 0).
    #[error("alpha must be real and lie in (-1, 0)")]
    AlphaNotNegativeReal,

    #[error("|beta| must equal 1")]
    BetaNotUnimodular,

    /// The Chebyshev closed form divides by sqrt(x^2 - 1).
    #[error("closed form is ill-conditioned near x = +-1 (|x^2-1| = {value:.3e}); use the recurrence")]
    ChebNearSingular { value: f64 },

    #[error("the Schur function is defined for |z| < 1")]
    OutsideUnitDisk,

    #[error("no square-root branch gives a Schur value in the closed unit disk at z = {z}")]
    NoSchurBranch { z: Complex64 },

    #[error("ratio-limit branch validation failed at z = {z}")]
    BranchValidation { z: Complex64 },

    #[error("z = {z} is on or too close to the support of the measure")]
    OnSupport { z: Complex64 },

    /// The measure may carry a mass point near z = 1; the ratio limit is not
    /// evaluated in its vicinity.
    #[error("z = {z} is too close to the candidate mass point at z = 1")]
    NearMassPoint { z: Complex64 },

    #[error("closed-form denominator is within {guard:.1e} of zero")]
    DenominatorNearZero { guard: f64 },

    #[error("kernel formula requires z*conj(w) != 1 (|1 - z conj(w)| = {value:.3e}); use the direct sum")]
    KernelDiagonal { value: f64 },

    #[error("elementary Bessel forms are singular at z = 0")]
    BesselAtZero,

    #[error("invalid polynomial JSON: {0}")]
    PolyJson(String),
}

pub type Result<T> = std::result::Result<T, Error>;
