//! Region-based engine selection and the reflection-identity residual.

use crate::numerics::{log_gamma, pow_pos, require_finite};
use crate::zeta::terms::check_pole_discs;
use crate::zeta::{zeta_direct, zeta_eq1, zeta_levelk, EvalResult, PrecisionParams};
use crate::{Error, Result, Scalar};
use num_complex::Complex;

/// Largest recursion depth the parameter validator admits; the automatic
/// dispatcher refuses points that would need more.
const DEPTH_CAP: u32 = 12;

/// Evaluates zeta by choosing an engine from the region of z.
///
/// re z >= 3/2 uses the direct series with its integral correction;
/// 0 < re z < 3/2 uses the depth-1 integral series when `p.k == 1` and the
/// recursive scheme otherwise; re z <= 0 uses the recursive scheme with the
/// depth raised to keep z one full unit inside its validity half-plane.
/// The returned parameters record the depth actually used.
pub fn zeta<T: Scalar>(z: Complex<T>, p: PrecisionParams<T>) -> Result<EvalResult<T>> {
    p.validate()?;
    require_finite(z, "zeta argument")?;
    let one = Complex::new(T::one(), T::zero());
    if (z - one).norm() <= p.pole_radius {
        return Err(Error::PoleProximity {
            at: "z = 1",
            radius: p.pole_radius.to_f64().unwrap_or(f64::NAN),
        });
    }
    if z.re >= T::from_f64_lit(1.5) {
        return zeta_direct(z, p);
    }
    if z.re > T::zero() {
        return if p.k == 1 { zeta_eq1(z, p) } else { zeta_levelk(z, p) };
    }
    let needed = (T::one() - z.re).ceil().to_u32().unwrap_or(u32::MAX).saturating_add(1);
    let k_eff = p.k.max(needed);
    if k_eff > DEPTH_CAP {
        return Err(Error::WrongRegion {
            engine: "AUTO",
            re: z.re.to_f64().unwrap_or(f64::NAN),
        });
    }
    zeta_levelk(z, PrecisionParams { k: k_eff, ..p })
}

/// Residual |zeta(z) - 2 (2 pi)^(z-1) Gamma(1-z) zeta(1-z) sin(pi z / 2)|
/// of the reflection identity, on the window -1 < re z < 1.
///
/// Both sides are numerical, so this measures the mutual consistency of the
/// engines across the reflection, not an absolute truth.
pub fn functional_equation_residual<T: Scalar>(z: Complex<T>, p: PrecisionParams<T>) -> Result<T> {
    p.validate()?;
    require_finite(z, "functional_equation_residual argument")?;
    if z.re <= -T::one() || z.re >= T::one() {
        return Err(Error::WrongRegion {
            engine: "FUNC_EQ",
            re: z.re.to_f64().unwrap_or(f64::NAN),
        });
    }
    check_pole_discs(z, p.pole_radius)?;
    let lhs = zeta(z, p)?;
    let one = Complex::new(T::one(), T::zero());
    let reflected = zeta(one - z, p)?;
    let gamma = log_gamma(one - z)?.exp();
    let two_pi = T::from_f64_lit(2.0) * T::PI();
    let half_pi = T::from_f64_lit(0.5) * T::PI();
    let rhs = (pow_pos(two_pi, z - one) * gamma * reflected.value * (z * half_pi).sin())
        .scale(T::from_f64_lit(2.0));
    Ok((lhs.value - rhs).norm())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zeta::Engine;
    use crate::{Cx, Real};

    fn p(n: u64, k: u32) -> PrecisionParams<Real> {
        PrecisionParams { n, k, ..PrecisionParams::default() }.ungated()
    }

    #[test]
    fn regions_map_to_their_engines() {
        assert_eq!(zeta(Cx::new(2.0, 0.0), p(1_000, 6)).unwrap().engine, Engine::Direct);
        assert_eq!(zeta(Cx::new(0.5, 3.0), p(1_000, 1)).unwrap().engine, Engine::Eq1);
        assert_eq!(zeta(Cx::new(0.5, 3.0), p(1_000, 6)).unwrap().engine, Engine::LevelK);
        assert_eq!(zeta(Cx::new(-0.5, 3.0), p(1_000, 6)).unwrap().engine, Engine::LevelK);
    }

    #[test]
    fn depth_is_raised_only_as_far_as_the_point_needs() {
        // re = -0.5 needs depth 3; the requested 6 already covers it.
        assert_eq!(zeta(Cx::new(-0.5, 3.0), p(1_000, 6)).unwrap().params.k, 6);
        // re = -6.5 needs depth ceil(7.5) + 1 = 9.
        assert_eq!(zeta(Cx::new(-6.5, 3.0), p(1_000, 6)).unwrap().params.k, 9);
    }

    #[test]
    fn far_left_points_are_refused() {
        assert!(matches!(
            zeta(Cx::new(-11.0, 0.0), p(100, 6)),
            Err(Error::WrongRegion { engine: "AUTO", .. })
        ));
        // re = -10 is the last automatically dispatchable vertical line,
        // and lands on a vanishing point of the continuation.
        let r = zeta(Cx::new(-10.0, 0.0), p(100, 6)).unwrap();
        assert_eq!(r.params.k, 12);
        assert!(r.value.norm() < 1e-12, "{:?}", r.value);
    }

    #[test]
    fn trivial_zero_through_the_dispatcher() {
        let r = zeta(Cx::new(-2.0, 0.0), p(100_000, 6)).unwrap();
        assert!(r.value.norm() < 1e-12, "{:?}", r.value);
    }

    #[test]
    fn pole_disc_respects_the_configured_radius() {
        assert!(matches!(
            zeta(Cx::new(1.0, 1e-9), p(100, 6)),
            Err(Error::PoleProximity { at: "z = 1", .. })
        ));
        let near = Cx::new(1.001, 0.0);
        assert!(zeta(near, p(1_000, 6)).is_ok());
        let wide = PrecisionParams { n: 1_000, k: 6, pole_radius: 1e-2, tol: 1.0 };
        assert!(matches!(
            zeta(near, wide),
            Err(Error::PoleProximity { at: "z = 1", .. })
        ));
    }

    #[test]
    fn reflection_identity_holds_across_the_strip() {
        let tol = 1e-6;
        for z in [Cx::new(0.3, 3.0), Cx::new(-0.4, 7.0), Cx::new(0.5, 14.0)] {
            let r = functional_equation_residual(z, p(100_000, 4)).unwrap();
            assert!(r < tol, "z = {z}: residual {r:e}");
        }
    }

    #[test]
    fn reflection_window_is_enforced() {
        for re in [-1.0, 1.0, 1.5, -3.0] {
            assert!(matches!(
                functional_equation_residual(Cx::new(re, 2.0), p(100, 4)),
                Err(Error::WrongRegion { engine: "FUNC_EQ", .. })
            ));
        }
        assert!(matches!(
            functional_equation_residual(Cx::new(1e-9, 0.0), p(100, 4)),
            Err(Error::PoleProximity { .. })
        ));
    }
}
