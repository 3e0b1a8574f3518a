//! Truncated Dirichlet series with an integral tail correction.

use crate::numerics::{exp_ln_pow, pow_pos, require_finite, ComplexKahan};
use crate::zeta::{Engine, ErrorBreakdown, EvalResult, PrecisionParams};
use crate::{Error, Result, Scalar};
use num_complex::Complex;

/// Sum of n^(-z) for n <= N plus the correction N^(1-z)/(z-1).
///
/// Restricted to re z >= 1.5: the enforced margin keeps the remainder
/// envelope |z| N^(-re z) / re z meaningful at desk-scale N.
pub fn zeta_direct<T: Scalar>(z: Complex<T>, p: PrecisionParams<T>) -> Result<EvalResult<T>> {
    p.validate()?;
    require_finite(z, "zeta_direct argument")?;
    if z.re < T::from_f64_lit(1.5) {
        return Err(Error::WrongRegion {
            engine: "DIRECT",
            re: z.re.to_f64().unwrap_or(f64::NAN),
        });
    }
    let neg_z = -z;
    let mut acc = ComplexKahan::new();
    acc.add(pow_pos(T::one(), neg_z));
    for n in 2..=p.n {
        let nf = T::from_usize_lit(n as usize);
        acc.add(exp_ln_pow(nf.ln(), neg_z));
    }
    let nf = T::from_usize_lit(p.n as usize);
    let one_minus_z = Complex::new(T::one() - z.re, -z.im);
    let correction = pow_pos(nf, one_minus_z) / (z - Complex::new(T::one(), T::zero()));
    let value = acc.value() + correction;
    let err_bound = z.norm() * nf.powf(-z.re) / z.re;
    Ok(EvalResult {
        value,
        err_bound,
        engine: Engine::Direct,
        params: p,
        diag: ErrorBreakdown::series_only(err_bound),
    })
}
