//! Zeta evaluation engines.
//!
//! Four routes compute the same function on overlapping regions:
//!
//! * [`zeta_direct`] — truncated Dirichlet series plus a tail correction,
//!   for re z >= 1.5;
//! * [`zeta_eq1`] — the depth-1 integral-series continuation, for re z > 0;
//! * [`zeta_levelk`] — the depth-K continuation, reaching re z > 1 - K;
//! * [`zeta_eta_oracle`] — an alternating-series engine accelerated by an
//!   Euler transform, used as an independent cross-check.
//!
//! [`zeta`] dispatches between them by region; every engine returns an
//! [`EvalResult`] carrying the value, an absolute error bound, and the
//! engine identity so that callers can weigh results from different routes.

mod direct;
mod dispatch;
mod eq1;
mod eta;
mod levelk;
mod terms;

pub use direct::zeta_direct;
pub use dispatch::{functional_equation_residual, zeta};
pub use eq1::zeta_eq1;
pub use eta::zeta_eta_oracle;
pub use levelk::zeta_levelk;
pub use terms::{integral_term, s_sum, IntegralTerm, SSum};

pub(crate) use eq1::eq1_value;
pub(crate) use terms::s_sum_ungated;

use crate::{Error, Result, Scalar};
use num_complex::Complex;
use std::fmt;
use std::str::FromStr;

/// Truncation and tolerance settings shared by every engine call.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PrecisionParams<T: Scalar> {
    /// Series truncation length.
    pub n: u64,
    /// Continuation depth for the level-K engine (1..=12).
    pub k: u32,
    /// Radius of the exclusion discs around z = 0 and z = 1.
    pub pole_radius: T,
    /// Target absolute error; series engines refuse to run when their
    /// rigorous tail bound cannot meet it.
    pub tol: T,
}

impl<T: Scalar> Default for PrecisionParams<T> {
    fn default() -> Self {
        PrecisionParams {
            n: 100_000,
            k: 6,
            pole_radius: T::from_f64_lit(1e-6),
            tol: T::from_f64_lit(1e-8),
        }
    }
}

impl<T: Scalar> PrecisionParams<T> {
    /// Validated constructor.
    pub fn new(n: u64, k: u32, pole_radius: T, tol: T) -> Result<Self> {
        let p = PrecisionParams { n, k, pole_radius, tol };
        p.validate()?;
        Ok(p)
    }

    /// Checks the parameter invariants.
    pub fn validate(&self) -> Result<()> {
        if self.n < 1 {
            return Err(Error::InvalidParams { what: "N must be at least 1" });
        }
        if self.k < 1 || self.k > 12 {
            return Err(Error::InvalidParams { what: "K must lie in 1..=12" });
        }
        if !(self.pole_radius > T::zero()) || self.pole_radius > T::from_f64_lit(0.1) {
            return Err(Error::InvalidParams {
                what: "pole_radius must lie in (0, 0.1]",
            });
        }
        if !(self.tol > T::zero()) || !self.tol.is_finite() {
            return Err(Error::InvalidParams { what: "tol must be positive and finite" });
        }
        Ok(())
    }

    /// Copy with the tail-bound gate disabled, for internal pipelines that
    /// interpret the reported bound themselves.
    pub(crate) fn ungated(self) -> Self {
        PrecisionParams { tol: T::max_value(), ..self }
    }
}

/// Identifies which evaluation route produced a result.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Engine {
    Direct,
    Eq1,
    LevelK,
    EtaOracle,
}

impl Engine {
    /// Stable upper-case name, used in serialized records.
    pub fn as_str(&self) -> &'static str {
        match self {
            Engine::Direct => "DIRECT",
            Engine::Eq1 => "EQ1",
            Engine::LevelK => "LEVELK",
            Engine::EtaOracle => "ETA_ORACLE",
        }
    }
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Engine {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "DIRECT" => Ok(Engine::Direct),
            "EQ1" => Ok(Engine::Eq1),
            "LEVELK" => Ok(Engine::LevelK),
            "ETA_ORACLE" => Ok(Engine::EtaOracle),
            _ => Err(Error::InvalidParams { what: "unknown engine name" }),
        }
    }
}

/// Split of the reported error bound into its sources.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ErrorBreakdown<T: Scalar> {
    /// Rigorous envelope on the truncated series tail of this engine's own
    /// series.
    pub tail_bound: T,
    /// Propagated bounds of recursively evaluated inner values (zero for
    /// non-recursive engines).
    pub recursive_bound: T,
    /// Heuristic convergence estimate: the change in the local series part
    /// between truncation at N/2 and at N. Reported, never added to
    /// `err_bound`.
    pub richardson: T,
}

impl<T: Scalar> ErrorBreakdown<T> {
    pub(crate) fn series_only(tail_bound: T) -> Self {
        ErrorBreakdown {
            tail_bound,
            recursive_bound: T::zero(),
            richardson: T::zero(),
        }
    }
}

/// Output of one engine call.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalResult<T: Scalar> {
    pub value: Complex<T>,
    /// Estimated absolute error; `diag` itemizes it.
    pub err_bound: T,
    pub engine: Engine,
    /// Parameters the call actually ran with.
    pub params: PrecisionParams<T>,
    pub diag: ErrorBreakdown<T>,
}
