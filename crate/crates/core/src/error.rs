//! Crate-wide error type.
//!
//! Every failure mode carries a stable upper-case code name (see
//! [`Error::code`]) so that front ends can report machine-readable causes.

use thiserror::Error;

/// Failure modes of the numeric operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An input coordinate or parameter was NaN or infinite.
    #[error("non-finite input: {what}")]
    NonFinite { what: &'static str },

    /// Precision parameters violated their invariants.
    #[error("invalid parameters: {what}")]
    InvalidParams { what: &'static str },

    /// A real power base was zero or negative.
    #[error("complex power requires a strictly positive real base, got {base}")]
    NonPositiveBase { base: f64 },

    /// log-gamma evaluated at a non-positive integer.
    #[error("log-gamma pole at non-positive integer re={re}")]
    PoleOfGamma { re: f64 },

    /// Adaptive quadrature hit its subdivision depth cap before reaching
    /// tolerance.
    #[error("quadrature did not converge: residual {residual:e} above tolerance at depth cap {depth_cap}")]
    NoConvergence { residual: f64, depth_cap: u32 },

    /// An engine was invoked outside the half-plane or strip it converges on.
    #[error("{engine} engine invoked outside its region (re z = {re})")]
    WrongRegion { engine: &'static str, re: f64 },

    /// The evaluation point lies inside an exclusion disc around a pole.
    #[error("point within {radius:e} of the excluded point {at}")]
    PoleProximity { at: &'static str, radius: f64 },

    /// The rigorous series tail bound exceeds the requested tolerance.
    #[error("series tail bound {bound:e} exceeds tolerance {tol:e}; raise N or the tolerance")]
    TailTooLarge { bound: f64, tol: f64 },

    /// The eta-series prefactor 1/(1 - 2^(1-z)) is too close to singular.
    #[error("eta denominator |1 - 2^(1-z)| = {denom:e} below safe threshold")]
    EtaDenominatorSmall { denom: f64 },

    /// A refined minimum of |zeta| failed the acceptance threshold.
    #[error("refined minimum at y = {y} has |zeta| = {abs_zeta:e}, above the acceptance threshold {threshold:e}")]
    NotAZero { y: f64, abs_zeta: f64, threshold: f64 },

    /// Independent re-verification of a recorded zero failed.
    #[error("zero verification failed: {check} = {value:e} exceeds {threshold:e} at y = {y}")]
    VerificationFailed { check: &'static str, y: f64, value: f64, threshold: f64 },

    /// A matrix dimension exceeded the exact-arithmetic cap.
    #[error("dimension {n} exceeds the supported cap {cap}")]
    DimensionTooLarge { n: usize, cap: usize },

    /// The Nyman-Beurling Gram system is singular even after ridge
    /// regularization.
    #[error("singular Gram matrix in least-squares solve")]
    SingularGram,

    /// A Nyman-Beurling scale parameter lies outside (0, 1].
    #[error("alpha = {alpha} outside the admissible interval (0, 1]")]
    AlphaOutOfRange { alpha: f64 },

    /// Integer overflow in an exact arithmetic path.
    #[error("integer overflow in {what}")]
    Overflow { what: &'static str },
}

impl Error {
    /// Stable machine-readable code for the failure class.
    pub fn code(&self) -> &'static str {
        match self {
            Error::NonFinite { .. } => "NON_FINITE",
            Error::InvalidParams { .. } => "INVALID_PARAMS",
            Error::NonPositiveBase { .. } => "NON_POSITIVE_BASE",
            Error::PoleOfGamma { .. } => "POLE_OF_GAMMA",
            Error::NoConvergence { .. } => "NO_CONVERGENCE",
            Error::WrongRegion { .. } => "WRONG_REGION",
            Error::PoleProximity { .. } => "POLE_PROXIMITY",
            Error::TailTooLarge { .. } => "TAIL_TOO_LARGE",
            Error::EtaDenominatorSmall { .. } => "ETA_DENOMINATOR_SMALL",
            Error::NotAZero { .. } => "NOT_A_ZERO",
            Error::VerificationFailed { .. } => "VERIFICATION_FAILED",
            Error::DimensionTooLarge { .. } => "DIMENSION_TOO_LARGE",
            Error::SingularGram => "SINGULAR_GRAM",
            Error::AlphaOutOfRange { .. } => "ALPHA_OUT_OF_RANGE",
            Error::Overflow { .. } => "OVERFLOW",
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn codes_are_stable() {
        assert_eq!(Error::SingularGram.code(), "SINGULAR_GRAM");
        assert_eq!(
            Error::TailTooLarge { bound: 1.0, tol: 0.5 }.code(),
            "TAIL_TOO_LARGE"
        );
    }
}
