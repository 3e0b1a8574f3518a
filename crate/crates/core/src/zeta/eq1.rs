//! Depth-1 integral-series continuation, valid on re z > 0.

use crate::numerics::require_finite;
use crate::zeta::terms::{check_pole_discs, s_sum};
use crate::zeta::{Engine, ErrorBreakdown, EvalResult, PrecisionParams};
use crate::{Error, Result, Scalar};
use num_complex::Complex;

/// Assembles 1 + 1/(z-1) - z S from a precomputed partial sum.
///
/// Kept as the single definition of this expression so the depth-1 branch
/// of the level-K engine is bit-identical to [`zeta_eq1`].
#[inline]
pub(crate) fn eq1_value<T: Scalar>(z: Complex<T>, s: Complex<T>) -> Complex<T> {
    let one = Complex::new(T::one(), T::zero());
    one + (z - one).inv() - z * s
}

/// Continuation of the zeta function through the depth-1 integral series.
///
/// value = 1 + 1/(z-1) - z S(z) with S summed to `p.n` terms; the error
/// bound is |z| times the rigorous tail envelope of S.
pub fn zeta_eq1<T: Scalar>(z: Complex<T>, p: PrecisionParams<T>) -> Result<EvalResult<T>> {
    p.validate()?;
    require_finite(z, "zeta_eq1 argument")?;
    if z.re <= T::zero() {
        return Err(Error::WrongRegion {
            engine: "EQ1",
            re: z.re.to_f64().unwrap_or(f64::NAN),
        });
    }
    check_pole_discs(z, p.pole_radius)?;
    let s = s_sum(z, p)?;
    let err_bound = z.norm() * s.tail_bound;
    Ok(EvalResult {
        value: eq1_value(z, s.value),
        err_bound,
        engine: Engine::Eq1,
        params: p,
        diag: ErrorBreakdown::series_only(err_bound),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zeta::zeta_direct;
    use crate::{Cx, Error, Real};

    fn params(n: u64, tol: Real) -> PrecisionParams<Real> {
        PrecisionParams { n, k: 1, tol, ..PrecisionParams::default() }
    }

    #[test]
    fn agrees_with_the_direct_engine_at_two() {
        let z = Cx::new(2.0, 0.0);
        let a = zeta_eq1(z, params(100_000, 1e-8)).unwrap();
        let b = zeta_direct(z, params(100_000, 1e-8)).unwrap();
        assert!((a.value - b.value).norm() <= a.err_bound + b.err_bound);
        let basel = std::f64::consts::PI.powi(2) / 6.0;
        assert!((a.value.re - basel).abs() < 1e-10);
    }

    #[test]
    fn continues_to_the_real_half_point() {
        // Reference value of the continuation at 1/2, re-derived by the
        // alternating-series engine in its own tests.
        let r = zeta_eq1(Cx::new(0.5, 0.0), params(100_000, 1.0)).unwrap();
        assert!((r.value.re - -1.4603545088095868).abs() <= r.err_bound);
        assert!(r.value.im.abs() < 1e-12);
    }

    #[test]
    fn truncation_error_stays_within_the_reported_bound() {
        // At re = 1/2 the tail is coherent, so the measured gap exercises
        // the envelope near its worst case.
        for n in [1_000u64, 10_000] {
            let r = zeta_eq1(Cx::new(0.5, 0.0), params(n, 1.0)).unwrap();
            let gap = (r.value.re - -1.4603545088095868).abs();
            assert!(gap <= r.err_bound, "N={n}: gap {gap:e} vs bound {:e}", r.err_bound);
            assert!(gap > 0.2 * r.err_bound, "bound should be tight at re=1/2");
        }
    }

    #[test]
    fn pole_discs_are_enforced() {
        assert!(matches!(
            zeta_eq1(Cx::new(1.0, 0.0), params(100, 1.0)),
            Err(Error::PoleProximity { .. })
        ));
        let wide = PrecisionParams { n: 100, k: 1, pole_radius: 1e-2, tol: 1.0 };
        assert!(matches!(
            zeta_eq1(Cx::new(1.001, 0.0), wide),
            Err(Error::PoleProximity { .. })
        ));
        assert!(zeta_eq1(Cx::new(1.001, 0.0), params(100, 1.0)).is_ok());
    }

    #[test]
    fn rejects_the_nonpositive_half_plane() {
        assert!(matches!(
            zeta_eq1(Cx::new(0.0, 5.0), params(100, 1.0)),
            Err(Error::WrongRegion { engine: "EQ1", .. })
        ));
        assert!(matches!(
            zeta_eq1(Cx::new(-0.5, 2.0), params(100, 1.0)),
            Err(Error::WrongRegion { engine: "EQ1", .. })
        ));
    }

    #[test]
    fn tail_gate_fires_unless_disabled() {
        // tail = 100^{-1/2} / 1 = 0.1, far above the 1e-8 tolerance.
        assert!(matches!(
            zeta_eq1(Cx::new(0.5, 0.0), params(100, 1e-8)),
            Err(Error::TailTooLarge { .. })
        ));
        let r = zeta_eq1(Cx::new(0.5, 0.0), params(100, 1e-8).ungated()).unwrap();
        assert!(r.err_bound > 1e-8);
    }

    #[test]
    fn conjugate_symmetry_is_exact() {
        let z = Cx::new(0.3, 12.0);
        let a = zeta_eq1(z, params(400, 1.0)).unwrap().value;
        let b = zeta_eq1(z.conj(), params(400, 1.0)).unwrap().value;
        assert_eq!(a.re, b.re);
        assert_eq!(a.im, -b.im);
    }
}
