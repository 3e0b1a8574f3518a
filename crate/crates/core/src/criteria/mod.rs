//! Arithmetic reformulations of the Riemann hypothesis at desk scale.
//!
//! Three classical equivalences are exercised numerically, each against an
//! independent oracle:
//!
//! * Redheffer: det A(n) equals the Mertens sum M(n); growth of |M(n)| is
//!   reported against n^(1/2+eps).
//! * Lagarias: sigma(n) <= H_n + exp(H_n) ln(H_n) with equality only at 1.
//! * Nyman-Beurling: the L^2(0,1) distance from the constant 1 to spans of
//!   the fractional-part combinations N_alpha shrinks as the span grows.
//!
//! Plus the principal-character L-function, which inherits zeta's zeros
//! through a finite Euler product.

mod lagarias;
mod lfunction;
mod nyman_beurling;
mod redheffer;
mod sieves;

pub use lagarias::lagarias_check;
pub use lfunction::l_principal;
pub use nyman_beurling::{n_alpha, nyman_beurling_chain, nyman_beurling_residual};
pub use redheffer::{redheffer_det, redheffer_growth};
pub use sieves::{mertens_prefix, mobius_sieve, sigma_from_spf, spf_sieve};

/// One notable point of a criterion sweep (an extreme margin, the argmax of
/// a growth ratio, one link of a residual chain).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExtremalItem {
    pub n: u64,
    pub value: f64,
}

/// Uniform result shape for the criterion sweeps.
#[derive(Debug, Clone, PartialEq)]
pub struct CriterionReport {
    pub id: &'static str,
    /// Human-readable description of the range tested.
    pub range: String,
    pub pass: bool,
    /// Headline number: minimum margin (Lagarias), empirical growth
    /// constant C(eps) (Redheffer growth), final residual (Nyman-Beurling
    /// chain).
    pub min_margin: f64,
    pub extremal_items: Vec<ExtremalItem>,
    pub details: String,
    pub wall_time_s: f64,
}
