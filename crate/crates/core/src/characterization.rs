//! The depth-1 series as a zero detector, and small algebraic probes of
//! the critical line.
//!
//! Central quantity: R(z) = (z-1) S(z) - 1, where S is the depth-1 integral
//! series. Rearranging the depth-1 continuation gives the exact identity
//! R(z) = -(z-1) zeta(z) / z, so R vanishes precisely at zeta zeros, with
//! the explicit conversion factor |z-1|/|z| between |R| and |zeta|.

use crate::numerics::require_finite;
use crate::zeta::{integral_term, s_sum_ungated, zeta, PrecisionParams};
use crate::{Error, Result, Scalar};
use num_complex::Complex;

/// R(z) together with everything needed to audit it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CharacterizationResult<T: Scalar> {
    pub z: Complex<T>,
    /// S(z): the truncated depth-1 integral series.
    pub s_value: Complex<T>,
    /// R(z) = (z-1) S(z) - 1.
    pub residual: Complex<T>,
    /// zeta(z) by the region dispatcher.
    pub zeta_value: Complex<T>,
    /// |R(z) + (z-1) zeta(z) / z|: distance from the exact rearrangement;
    /// bounded by the combined engine truncation bounds.
    pub identity_gap: T,
}

/// Evaluates R(z) and its defining identity against the dispatcher.
///
/// Both series run without the tail-tolerance gate: this operation's purpose
/// is to report residual magnitudes, and the truncation quality is visible
/// through `identity_gap` rather than enforced up front. Requires re z > 0
/// and z outside the exclusion discs around 0 and 1.
pub fn characterization_residual<T: Scalar>(
    z: Complex<T>,
    p: PrecisionParams<T>,
) -> Result<CharacterizationResult<T>> {
    let s = s_sum_ungated(z, p)?;
    let one = Complex::new(T::one(), T::zero());
    let residual = (z - one) * s.value - one;
    let zr = zeta(z, p.ungated())?;
    let identity_gap = (residual + (z - one) * zr.value / z).norm();
    Ok(CharacterizationResult {
        z,
        s_value: s.value,
        residual,
        zeta_value: zr.value,
        identity_gap,
    })
}

/// Outcome of checking the implication "z S(z) = 1 implies (z-1) zeta(z) = 1".
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitImplicationReport<T: Scalar> {
    /// Whether |z S(z) - 1| < p.tol held.
    pub antecedent: bool,
    pub zs_minus_one: T,
    /// |(z-1) zeta(z) - 1|, evaluated only when the antecedent held.
    pub conclusion_gap: Option<T>,
    /// True when the antecedent failed (vacuous) or the conclusion held
    /// within the propagated tolerance.
    pub holds: bool,
}

/// Checks the implication "z S(z) = 1 implies (z-1) zeta(z) = 1" at one
/// point, with p.tol as the antecedent threshold.
///
/// The conclusion threshold scales by |z-1| (the exact relation is
/// (z-1) zeta - 1 = (z-1)(1 - z S)) plus the engine truncation bounds, so
/// the check is an implication between measured quantities, not an
/// assumption.
pub fn unit_implication_check<T: Scalar>(
    z: Complex<T>,
    p: PrecisionParams<T>,
) -> Result<UnitImplicationReport<T>> {
    let s = s_sum_ungated(z, p)?;
    let one = Complex::new(T::one(), T::zero());
    let zs_minus_one = (z * s.value - one).norm();
    let antecedent = zs_minus_one < p.tol;
    if !antecedent {
        return Ok(UnitImplicationReport {
            antecedent,
            zs_minus_one,
            conclusion_gap: None,
            holds: true,
        });
    }
    let zr = zeta(z, p.ungated())?;
    let gap = ((z - one) * zr.value - one).norm();
    let scaled = (z - one).norm() * (p.tol + z.norm() * s.tail_bound + zr.err_bound);
    Ok(UnitImplicationReport {
        antecedent,
        zs_minus_one,
        conclusion_gap: Some(gap),
        holds: gap <= scaled,
    })
}

/// The unique alpha with alpha * z * (z-1) = 1, defined for z outside {0, 1}.
///
/// Pointwise this always exists; what distinguishes the critical line is
/// that alpha is real exactly when re z = 1/2 (for im z != 0), which is
/// what [`critical_line_indicator`] isolates.
pub fn critical_line_alpha<T: Scalar>(z: Complex<T>) -> Result<Complex<T>> {
    require_finite(z, "critical_line_alpha argument")?;
    let zero = Complex::new(T::zero(), T::zero());
    let one = Complex::new(T::one(), T::zero());
    if z == zero || z == one {
        return Err(Error::InvalidParams { what: "alpha is undefined at z = 0 and z = 1" });
    }
    Ok((z * (z - one)).inv())
}

/// Im(z(z-1)) = y (2x - 1) for z = x + iy: zero exactly when x = 1/2
/// (or on the real axis, where the indicator carries no information).
///
/// Total on finite inputs; the "zero iff on the critical line" reading
/// needs im z != 0.
pub fn critical_line_indicator<T: Scalar>(z: Complex<T>) -> T {
    z.im * (T::from_f64_lit(2.0) * z.re - T::one())
}

/// [`critical_line_indicator`] over any exact ring: im * (re + re - 1).
///
/// With rational inputs this decides re = 1/2 exactly, with no rounding.
pub fn critical_line_indicator_exact<R>(re: R, im: R) -> R
where
    R: Clone + num_traits::Num,
{
    im * (re.clone() + re - R::one())
}

/// How the depth-1 term I_n(z) compares to the crude model 1/(n(n+1)).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ApproxQuality<T: Scalar> {
    /// |I_n(z) - 1/(n(n+1))|.
    pub abs_error: T,
    /// |I_n(z)| * n(n+1); drifts like n^(1/2) on the critical line, so the
    /// model is not asymptotically faithful there.
    pub ratio: T,
}

/// Measures the crude tail model at one term.
pub fn approx_quality<T: Scalar>(
    n: u64,
    z: Complex<T>,
    pole_radius: T,
) -> Result<ApproxQuality<T>> {
    let term = integral_term(n, z, 1, pole_radius)?.value;
    let nf = T::from_usize_lit(n as usize);
    let nn1 = nf * (nf + T::one());
    let model = Complex::new(nn1.recip(), T::zero());
    Ok(ApproxQuality { abs_error: (term - model).norm(), ratio: term.norm() * nn1 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{cpow_posbase, integrate_01};
    use crate::{Cx, Real};

    fn p(n: u64, k: u32, tol: Real) -> PrecisionParams<Real> {
        PrecisionParams { n, k, tol, ..PrecisionParams::default() }
    }

    #[test]
    fn residual_at_two_hits_its_closed_form() {
        let r = characterization_residual(Cx::new(2.0, 0.0), p(100_000, 6, 1e-8)).unwrap();
        let expected = -std::f64::consts::PI.powi(2) / 12.0;
        assert!((r.residual.re - expected).abs() < 1e-9, "{:?}", r.residual);
        assert!(r.residual.im.abs() < 1e-12);
        assert!(r.identity_gap < 1e-10, "gap {:e}", r.identity_gap);
    }

    #[test]
    fn residual_magnitude_at_the_half_point() {
        // |R(1/2)| = |1-z| |zeta| / |z| = |zeta(1/2)| here.
        let r = characterization_residual(Cx::new(0.5, 0.0), p(100_000, 1, 1e-8)).unwrap();
        assert!((r.residual.norm() - 1.4603545088095868).abs() < 3e-3, "{:?}", r.residual);
    }

    #[test]
    fn residual_nearly_vanishes_at_the_first_zero() {
        let z = Cx::new(0.5, 14.134725);
        let r = characterization_residual(z, p(1_000_000, 1, 1e-8)).unwrap();
        assert!(r.residual.norm() < 1e-3, "|R| = {:e}", r.residual.norm());
        // Depth-1 dispatch makes the identity exact at matching N.
        assert!(r.identity_gap < 1e-10, "gap {:e}", r.identity_gap);
    }

    #[test]
    fn identity_gap_obeys_the_combined_engine_bounds() {
        for (z, n, k) in [
            (Cx::new(0.3, 7.0), 10_000u64, 6u32),
            (Cx::new(0.8, -12.0), 20_000, 4),
            (Cx::new(1.2, 3.0), 10_000, 2),
        ] {
            let pars = p(n, k, 1e-8);
            let r = characterization_residual(z, pars).unwrap();
            let s_tail = (n as f64).powf(-z.re) / (2.0 * z.re);
            let zeta_err = zeta(z, pars).unwrap().err_bound;
            let budget = (z - Cx::new(1.0, 0.0)).norm() * (s_tail + zeta_err / z.norm());
            assert!(
                r.identity_gap <= budget,
                "z = {z}: gap {:e} over budget {budget:e}",
                r.identity_gap
            );
        }
    }

    #[test]
    fn implication_is_vacuous_at_two() {
        let r = unit_implication_check(Cx::new(2.0, 0.0), p(100_000, 6, 1e-8)).unwrap();
        assert!(!r.antecedent);
        let expected = std::f64::consts::PI.powi(2) / 6.0 - 1.0;
        assert!((r.zs_minus_one - expected).abs() < 1e-9);
        assert!(r.conclusion_gap.is_none());
        assert!(r.holds);
    }

    #[test]
    fn implication_survives_a_live_antecedent_at_a_zero() {
        // With a loose threshold the antecedent fires near a zero, where
        // |z S - 1| sits at 1/|z-1| by the identity; the conclusion then
        // holds inside its |z-1|-scaled budget.
        let z = Cx::new(0.5, 14.134725);
        let r = unit_implication_check(z, p(100_000, 1, 0.1)).unwrap();
        assert!(r.antecedent, "zs_minus_one = {:e}", r.zs_minus_one);
        assert!((r.zs_minus_one - 1.0 / (z - Cx::new(1.0, 0.0)).norm()).abs() < 0.03);
        let gap = r.conclusion_gap.unwrap();
        assert!((gap - 1.0).abs() < 0.1, "conclusion gap {gap:e}");
        assert!(r.holds);
    }

    #[test]
    fn tight_threshold_keeps_the_antecedent_false_at_a_zero() {
        let r = unit_implication_check(Cx::new(0.5, 14.134725), p(100_000, 1, 1e-8)).unwrap();
        assert!(!r.antecedent);
        assert!(r.holds);
    }

    #[test]
    fn alpha_reference_points() {
        let a2 = critical_line_alpha(Cx::new(2.0, 0.0)).unwrap();
        assert_eq!(a2, Cx::new(0.5, 0.0));
        let on_line = critical_line_alpha(Cx::new(0.5, 2.0)).unwrap();
        assert!((on_line.re - -0.23529411764705882).abs() < 1e-15);
        assert_eq!(on_line.im, 0.0, "alpha must be exactly real on the line");
        let off_line = critical_line_alpha(Cx::new(0.3, 5.0)).unwrap();
        assert!(off_line.im.abs() > 1e-3);
    }

    #[test]
    fn alpha_inverts_its_defining_product() {
        let pts = [
            Cx::new(0.5, 31.0),
            Cx::new(-3.2, 0.7),
            Cx::new(12.0, -4.0),
            Cx::new(0.01, 0.02),
        ];
        for z in pts {
            let a = critical_line_alpha(z).unwrap();
            let product = a * z * (z - Cx::new(1.0, 0.0));
            assert!((product - Cx::new(1.0, 0.0)).norm() < 1e-14, "z = {z}");
        }
    }

    #[test]
    fn alpha_rejects_its_two_singular_points() {
        assert!(matches!(
            critical_line_alpha(Cx::new(0.0, 0.0)),
            Err(Error::InvalidParams { .. })
        ));
        assert!(matches!(
            critical_line_alpha(Cx::new(1.0, 0.0)),
            Err(Error::InvalidParams { .. })
        ));
        assert!(critical_line_alpha(Cx::new(1e-300, 0.0)).is_ok());
    }

    #[test]
    fn indicator_reference_points() {
        assert_eq!(critical_line_indicator(Cx::new(0.5, 7.0)), 0.0);
        assert!((critical_line_indicator(Cx::new(0.3, 5.0)) - -2.0).abs() < 1e-14);
        assert_eq!(critical_line_indicator(Cx::new(0.75, 4.0)), 2.0);
        // Generic over the scalar: single precision behaves identically.
        assert_eq!(critical_line_indicator(num_complex::Complex32::new(0.5, 7.0)), 0.0f32);
    }

    #[test]
    fn exact_indicator_decides_the_line_over_the_rationals() {
        use num_rational::Ratio;
        let half = Ratio::new(1i64, 2);
        assert_eq!(
            critical_line_indicator_exact(half, Ratio::new(7i64, 3)),
            Ratio::new(0i64, 1)
        );
        let near = Ratio::new(499i64, 1000);
        let v = critical_line_indicator_exact(near, Ratio::new(1i64, 1));
        assert_eq!(v, Ratio::new(-1i64, 500));
        assert!(v != Ratio::new(0i64, 1));
    }

    #[test]
    fn model_audit_at_the_quadrature_point() {
        let q = approx_quality(1, Cx::new(1.0, 0.0), 1e-6).unwrap();
        let i1 = std::f64::consts::LN_2 - 0.5;
        assert!((q.abs_error - (0.5 - i1)).abs() < 1e-10);
        assert!((q.ratio - 2.0 * i1).abs() < 1e-10);
    }

    #[test]
    fn model_audit_against_quadrature_on_the_real_line() {
        let z = Cx::new(0.5, 0.0);
        let q = approx_quality(10, z, 1e-6).unwrap();
        let oracle = integrate_01(
            move |t: Real| cpow_posbase(10.0 + t, -(z + Cx::new(1.0, 0.0))).unwrap() * t,
            &[],
        )
        .unwrap();
        assert!((q.ratio - oracle.norm() * 110.0).abs() < 1e-10);
        assert!((q.abs_error - (oracle - Cx::new(1.0 / 110.0, 0.0)).norm()).abs() < 1e-10);
        // Same order as the model but visibly off it.
        assert!(q.ratio > 1.2 && q.ratio < 2.0, "ratio {}", q.ratio);
    }

    #[test]
    fn model_ratio_drifts_up_a_half_power_per_decade_on_the_line() {
        let z = Cx::new(0.5, 14.0);
        let r100 = approx_quality(100, z, 1e-6).unwrap().ratio;
        let r1000 = approx_quality(1_000, z, 1e-6).unwrap().ratio;
        let growth = r1000 / r100;
        let root10 = 10.0f64.sqrt();
        assert!(
            growth > root10 / 2.0 && growth < 2.0 * root10,
            "decade growth {growth}"
        );
    }
}
