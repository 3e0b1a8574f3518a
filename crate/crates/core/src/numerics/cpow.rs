//! Complex powers of strictly positive real bases.

use crate::{Error, Result, Scalar};
use num_complex::Complex;

/// `b^z = exp(z ln b)` for a strictly positive real base.
///
/// Rejects `b <= 0` and non-finite inputs. Because the implementation goes
/// through `exp`/`cos`/`sin` of real arguments, conjugating the exponent
/// conjugates the result exactly: `cpow_posbase(b, conj z) == conj(cpow_posbase(b, z))`.
pub fn cpow_posbase<T: Scalar>(base: T, z: Complex<T>) -> Result<Complex<T>> {
    if !(base > T::zero()) || !base.is_finite() {
        return Err(Error::NonPositiveBase {
            base: base.to_f64().unwrap_or(f64::NAN),
        });
    }
    super::require_finite(z, "cpow_posbase exponent")?;
    Ok(pow_pos(base, z))
}

/// Unchecked hot-path version of [`cpow_posbase`]; callers guarantee `b > 0`.
#[inline]
pub(crate) fn pow_pos<T: Scalar>(base: T, z: Complex<T>) -> Complex<T> {
    exp_ln_pow(base.ln(), z)
}

/// `exp(z * lnb)` where `lnb` is a precomputed real logarithm of the base.
///
/// Engines summing `n^{-z}` over long ranges reuse `ln n` across several
/// exponents through this entry point.
#[inline]
pub(crate) fn exp_ln_pow<T: Scalar>(lnb: T, z: Complex<T>) -> Complex<T> {
    let mag = (z.re * lnb).exp();
    let theta = z.im * lnb;
    Complex::new(mag * theta.cos(), mag * theta.sin())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex<f64> {
        Complex::new(re, im)
    }

    #[test]
    fn matches_real_powers_on_the_real_axis() {
        let v = cpow_posbase(3.0, c(-1.5, 0.0)).unwrap();
        assert!((v.re - 0.19245008972987526).abs() < 1e-15);
        assert_eq!(v.im, 0.0);
        let w = cpow_posbase(2.0, c(10.0, 0.0)).unwrap();
        assert!((w.re - 1024.0).abs() < 1024.0 * 4.0 * f64::EPSILON);
    }

    #[test]
    fn purely_imaginary_exponent_lands_on_the_unit_circle() {
        let v = cpow_posbase(10.0, c(0.0, 1.0)).unwrap();
        assert!((v.norm() - 1.0).abs() < 4.0 * f64::EPSILON);
        // 10^i = exp(i ln 10) = cos(ln 10) + i sin(ln 10).
        assert!((v.re - (10f64).ln().cos()).abs() < 1e-15);
        assert!((v.im - (10f64).ln().sin()).abs() < 1e-15);
    }

    #[test]
    fn conjugation_symmetry_is_exact() {
        for &(b, re, im) in &[
            (2.0, 0.5, 14.134725),
            (97.0, -3.25, 2.75),
            (1.5, 1.0, -29.9),
            (1234.5, 0.0, 100.0),
        ] {
            let z = c(re, im);
            let a = cpow_posbase(b, z.conj()).unwrap();
            let b2 = cpow_posbase(b, z).unwrap().conj();
            assert_eq!(a, b2, "base {b} exponent {z}");
        }
    }

    #[test]
    fn nonpositive_base_is_rejected() {
        assert!(matches!(
            cpow_posbase(0.0, c(1.0, 0.0)),
            Err(Error::NonPositiveBase { .. })
        ));
        assert!(matches!(
            cpow_posbase(-2.0, c(1.0, 0.0)),
            Err(Error::NonPositiveBase { .. })
        ));
    }

    #[test]
    fn non_finite_exponent_is_rejected() {
        assert!(matches!(
            cpow_posbase(2.0, c(f64::NAN, 0.0)),
            Err(Error::NonFinite { .. })
        ));
        assert!(matches!(
            cpow_posbase(2.0, c(0.0, f64::INFINITY)),
            Err(Error::NonFinite { .. })
        ));
    }

    #[test]
    fn f32_instantiation_agrees_with_f64_coarsely() {
        let v32 = cpow_posbase(3.0f32, Complex::new(-1.5f32, 0.0)).unwrap();
        assert!((v32.re - 0.192_450_09f32).abs() < 1e-6);
    }
}
