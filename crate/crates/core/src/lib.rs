//! Numerics for the Riemann zeta function on and around the critical strip.
//!
//! The crate is organized in layers:
//!
//! * [`numerics`] - scalar/complex primitives: strip region classification,
//!   compensated summation, real-base complex powers, log-gamma, and adaptive
//!   Gauss-Legendre quadrature on (0, 1).
//! * [`zeta`] - zeta evaluation engines: a Dirichlet-series engine for
//!   `re z >= 1.5`, an integral-representation engine for the open strip, an
//!   inductive continuation reaching any `re z > 1 - K`, and an independent
//!   alternating-series (eta) cross-check engine, all behind one dispatcher.
//! * [`characterization`] - the residual `R(z) = (z-1)S(z) - 1` whose zeros
//!   on the open strip coincide with zeta zeros, plus the algebraic
//!   self-consistency checks built on it.
//! * [`zeros`] - grid scan, golden-section refinement, and independent
//!   verification of critical-line zeros.
//! * [`criteria`] - arithmetic reformulations of the Riemann hypothesis at
//!   desk scale: Redheffer determinants vs. Mertens sums, the Lagarias
//!   harmonic-number bound, and Nyman-Beurling least-squares distances.
//!
//! Computational kernels are generic over the scalar type through [`Scalar`]
//! (any `num_traits` float works; accuracy contracts are stated for `f64`).
//! The aliases below fix the concrete types used by the command-line tools.

pub mod characterization;
pub mod error;
pub mod numerics;
pub mod scalar;
pub mod zeros;
pub mod zeta;
pub mod criteria;

pub use error::Error;
pub use scalar::Scalar;

/// Concrete scalar used by the binaries and most callers.
pub type Real = f64;
/// Concrete complex point type matching [`Real`].
pub type Cx = num_complex::Complex<Real>;

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;
