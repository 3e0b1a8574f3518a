//! Scalar and complex primitives shared by every engine.

mod cpow;
mod csum;
mod gamma;
mod quad;
mod region;

pub use cpow::cpow_posbase;
pub(crate) use cpow::{exp_ln_pow, pow_pos};
pub use csum::{kahan_sum, ComplexKahan, Kahan};
pub use gamma::log_gamma;
pub use quad::{integrate_01, integrate_01_with, GaussLegendre, QUAD_DEPTH_CAP, QUAD_TOL};
pub use region::{classify_region, RegionLabel};

use crate::{Error, Result, Scalar};
use num_complex::Complex;

/// Validates that both components of a complex input are finite.
pub fn require_finite<T: Scalar>(z: Complex<T>, what: &'static str) -> Result<()> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(())
    } else {
        Err(Error::NonFinite { what })
    }
}
