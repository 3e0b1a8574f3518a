//! Locating, refining, and independently verifying critical-line zeros,
//! plus a rectangle scan for (absent) off-line zeros.
//!
//! The pipeline is derivative-free: sample g(y) = |zeta(1/2+iy)|^2 on a
//! grid, keep strict local minima below a candidate threshold, tighten each
//! bracket by golden-section search, then accept only if |zeta| and the
//! characterization residual R(z) = (z-1)S(z) - 1 pass thresholds derived
//! from the requested tolerance. Verification re-measures everything with
//! the alternating-series engine, which shares no code path with the
//! engines used during refinement.

use crate::characterization::characterization_residual;
use crate::zeta::{zeta, zeta_eta_oracle, zeta_levelk, Engine, PrecisionParams};
use crate::{Error, Result, Scalar};
use num_complex::Complex;
use rayon::prelude::*;

/// g(y0) = |zeta|^2 must sit below this for a grid dip to become a bracket.
pub const CANDIDATE_THRESHOLD: f64 = 1e-2;
/// |zeta| below this flags a grid point of a rectangle scan as a minimum.
pub const MINIMUM_THRESHOLD: f64 = 1e-3;
/// Accepted records must have |zeta(1-rho)| below this.
pub const REFLECT_THRESHOLD: f64 = 1e-3;
/// Golden-section stops once the bracketing interval is this narrow.
pub const REFINE_WIDTH: f64 = 1e-9;
/// Coarsest legal scan step; zero gaps near y = 14 exceed this.
pub const MAX_SCAN_STEP: f64 = 0.25;

/// A strict local minimum of g(y) = |zeta(1/2+iy)|^2 on a scan grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bracket<T: Scalar> {
    pub y_lo: T,
    pub y_mid: T,
    pub y_hi: T,
    pub g_lo: T,
    pub g_mid: T,
    pub g_hi: T,
}

/// A located critical-line zero with its acceptance evidence.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZeroRecord<T: Scalar> {
    /// Ordinate: the zero is at 1/2 + iy.
    pub y: T,
    /// |zeta(1/2+iy)| as measured at acceptance.
    pub abs_zeta: T,
    /// |R(1/2+iy)| = |(z-1)S(z) - 1|.
    pub char_residual: T,
    /// |zeta(1-rho)|: the reflected point, measured with the inductive
    /// continuation engine.
    pub reflect_residual: T,
    /// Golden-section iterations spent reaching the width target.
    pub iterations: u32,
    /// Engine that produced `abs_zeta`.
    pub engine: Engine,
    /// Parameters under which the record was accepted.
    pub params: PrecisionParams<T>,
}

/// One evaluated grid point of a rectangle scan.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridHit<T: Scalar> {
    pub x: T,
    pub y: T,
    pub abs_zeta: T,
    pub char_residual: T,
}

/// Full outcome of a rectangle scan.
#[derive(Debug, Clone, PartialEq)]
pub struct ScanReport<T: Scalar> {
    pub x_min: T,
    pub x_max: T,
    pub y_min: T,
    pub y_max: T,
    pub dx: T,
    pub dy: T,
    /// Every grid point, x-major then y.
    pub rows: Vec<GridHit<T>>,
    /// Points with |zeta| below [`MINIMUM_THRESHOLD`] and |x - 1/2| <= dx.
    pub minima: Vec<GridHit<T>>,
    /// Points with |zeta| below the threshold but x away from the line.
    /// Expected empty.
    pub off_line_violations: Vec<GridHit<T>>,
}

/// What [`verify_record`] re-measured, all via the alternating-series engine.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerificationReport<T: Scalar> {
    pub y: T,
    pub abs_zeta: T,
    pub char_residual: T,
    pub reflect_residual: T,
    pub engine: Engine,
}

fn to_f64<T: Scalar>(x: T) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// Number of inclusive grid points from `lo` by `step`, not exceeding `hi`
/// (with a relative slack of 1e-9 steps so representable endpoints count).
fn grid_count<T: Scalar>(lo: T, hi: T, step: T) -> u64 {
    let raw = to_f64((hi - lo) / step);
    let rounded = raw.round();
    let n = if (raw - rounded).abs() < 1e-9 * rounded.abs().max(1.0) && rounded >= 0.0 {
        rounded
    } else {
        raw.floor()
    };
    if n.is_finite() && n >= 0.0 { n as u64 + 1 } else { 1 }
}

fn g_of_y<T: Scalar>(y: T, p: PrecisionParams<T>) -> Result<T> {
    let z = Complex::new(T::from_f64_lit(0.5), y);
    Ok(zeta(z, p)?.value.norm_sqr())
}

/// Samples g(y) = |zeta(1/2+iy)|^2 on an inclusive grid and returns every
/// strict local minimum whose value sits below [`CANDIDATE_THRESHOLD`].
///
/// `y_min = 0` is allowed (the point 1/2 itself is far from any zero); the
/// step must not exceed [`MAX_SCAN_STEP`] or genuine zeros could be skipped.
/// An empty result is a valid outcome.
pub fn scan_line<T: Scalar>(
    y_min: T,
    y_max: T,
    step: T,
    p: PrecisionParams<T>,
) -> Result<Vec<Bracket<T>>> {
    p.validate()?;
    if !(y_min >= T::zero()) || !(y_max > y_min) || !y_max.is_finite() {
        return Err(Error::InvalidParams { what: "scan_line needs 0 <= y_min < y_max, finite" });
    }
    if !(step > T::zero()) || !(step <= T::from_f64_lit(MAX_SCAN_STEP)) {
        return Err(Error::InvalidParams {
            what: "scan step must lie in (0, 0.25]; coarser grids can miss zeros",
        });
    }
    let p = p.ungated();
    let count = grid_count(y_min, y_max, step);
    let mut ys = Vec::with_capacity(count as usize);
    let mut gs = Vec::with_capacity(count as usize);
    for i in 0..count {
        let y = y_min + T::from_usize_lit(i as usize) * step;
        ys.push(y);
        gs.push(g_of_y(y, p)?);
    }
    let threshold = T::from_f64_lit(CANDIDATE_THRESHOLD);
    let mut brackets = Vec::new();
    for i in 1..ys.len().saturating_sub(1) {
        if gs[i] < gs[i - 1] && gs[i] < gs[i + 1] && gs[i] < threshold {
            brackets.push(Bracket {
                y_lo: ys[i - 1],
                y_mid: ys[i],
                y_hi: ys[i + 1],
                g_lo: gs[i - 1],
                g_mid: gs[i],
                g_hi: gs[i + 1],
            });
        }
    }
    Ok(brackets)
}

/// Golden-section minimization of g(y) inside a bracket, followed by
/// acceptance thresholds tied to `p.tol`.
///
/// The interval is narrowed below [`REFINE_WIDTH`]; the best probe becomes
/// the candidate ordinate. Acceptance requires
/// `abs_zeta < p.tol^(1/2)` and
/// `char_residual < 10 p.tol^(1/2) |z|/|z-1| + |z-1| tail(N)` — the second
/// term is the depth-1 series truncation carried into R, so honest zeros
/// are not rejected merely because N is modest. The reflected residual
/// |zeta(1-rho)| is measured with the inductive engine at depth >= 2.
pub fn refine_zero<T: Scalar>(bracket: Bracket<T>, p: PrecisionParams<T>) -> Result<ZeroRecord<T>> {
    p.validate()?;
    if !(bracket.y_lo < bracket.y_mid) || !(bracket.y_mid < bracket.y_hi) {
        return Err(Error::InvalidParams { what: "bracket ordinates must be strictly increasing" });
    }
    let pu = p.ungated();
    let invphi = T::from_f64_lit(0.618_033_988_749_894_9);
    let width_target = T::from_f64_lit(REFINE_WIDTH);
    let (mut a, mut b) = (bracket.y_lo, bracket.y_hi);
    let mut c = b - invphi * (b - a);
    let mut d = a + invphi * (b - a);
    let mut fc = g_of_y(c, pu)?;
    let mut fd = g_of_y(d, pu)?;
    let mut iterations: u32 = 0;
    while b - a > width_target {
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - invphi * (b - a);
            fc = g_of_y(c, pu)?;
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + invphi * (b - a);
            fd = g_of_y(d, pu)?;
        }
        iterations += 1;
    }
    let y = if fc < fd { c } else { d };

    let z = Complex::new(T::from_f64_lit(0.5), y);
    let ch = characterization_residual(z, p)?;
    let abs_zeta = ch.zeta_value.norm();
    let abs_threshold = p.tol.sqrt();
    if !(abs_zeta < abs_threshold) {
        return Err(Error::NotAZero {
            y: to_f64(y),
            abs_zeta: to_f64(abs_zeta),
            threshold: to_f64(abs_threshold),
        });
    }
    let char_residual = ch.residual.norm();
    let one = Complex::new(T::one(), T::zero());
    let envelope = z.norm() / (z - one).norm();
    let nf = T::from_usize_lit(p.n as usize);
    let re = T::from_f64_lit(0.5);
    let s_tail = nf.powf(-re) / (re + re);
    let char_threshold =
        T::from_f64_lit(10.0) * abs_threshold * envelope + (z - one).norm() * s_tail;
    if !(char_residual < char_threshold) {
        return Err(Error::VerificationFailed {
            check: "char_residual",
            y: to_f64(y),
            value: to_f64(char_residual),
            threshold: to_f64(char_threshold),
        });
    }
    let k_reflect = p.k.max(2);
    let reflect = zeta_levelk(one - z, PrecisionParams { k: k_reflect, ..p }.ungated())?;
    let reflect_residual = reflect.value.norm();

    let engine = zeta(z, pu)?.engine;
    Ok(ZeroRecord {
        y,
        abs_zeta,
        char_residual,
        reflect_residual,
        iterations,
        engine,
        params: p,
    })
}

/// Evaluates |zeta| and |R| on an inclusive 2-D grid of the open strip and
/// classifies every sub-threshold point as on-line (`minima`) or not
/// (`off_line_violations`).
///
/// Degenerate rectangles (x_min = x_max and/or y_min = y_max) collapse to a
/// line or single point. The rectangle must stay inside the strip with a
/// margin wider than the pole exclusion radius.
pub fn scan_rectangle<T: Scalar>(
    x_min: T,
    x_max: T,
    y_min: T,
    y_max: T,
    dx: T,
    dy: T,
    p: PrecisionParams<T>,
) -> Result<ScanReport<T>> {
    p.validate()?;
    if !(x_min > T::zero()) || !(x_max < T::one()) || !(x_min <= x_max) {
        return Err(Error::InvalidParams { what: "rectangle needs 0 < x_min <= x_max < 1" });
    }
    if !(y_min <= y_max) || !y_min.is_finite() || !y_max.is_finite() {
        return Err(Error::InvalidParams { what: "rectangle needs finite y_min <= y_max" });
    }
    if !(dx > T::zero()) || !(dy > T::zero()) {
        return Err(Error::InvalidParams { what: "grid steps must be positive" });
    }
    if T::one() - x_max <= p.pole_radius || x_min <= p.pole_radius {
        return Err(Error::InvalidParams {
            what: "rectangle must clear the pole exclusion discs at 0 and 1",
        });
    }
    let p = p.ungated();
    let nx = grid_count(x_min, x_max, dx);
    let ny = grid_count(y_min, y_max, dy);
    let one = Complex::new(T::one(), T::zero());

    let columns: Vec<Vec<GridHit<T>>> = (0..nx)
        .into_par_iter()
        .map(|ix| -> Result<Vec<GridHit<T>>> {
            let x = x_min + T::from_usize_lit(ix as usize) * dx;
            let mut col = Vec::with_capacity(ny as usize);
            for iy in 0..ny {
                let y = y_min + T::from_usize_lit(iy as usize) * dy;
                let z = Complex::new(x, y);
                let zr = zeta(z, p)?;
                let s = crate::zeta::s_sum_ungated(z, p)?;
                let residual = (z - one) * s.value - one;
                col.push(GridHit {
                    x,
                    y,
                    abs_zeta: zr.value.norm(),
                    char_residual: residual.norm(),
                });
            }
            Ok(col)
        })
        .collect::<Result<Vec<_>>>()?;

    let rows: Vec<GridHit<T>> = columns.into_iter().flatten().collect();
    let half = T::from_f64_lit(0.5);
    let threshold = T::from_f64_lit(MINIMUM_THRESHOLD);
    let mut minima = Vec::new();
    let mut off_line_violations = Vec::new();
    for hit in &rows {
        if hit.abs_zeta < threshold {
            if (hit.x - half).abs() <= dx {
                minima.push(*hit);
            } else {
                off_line_violations.push(*hit);
            }
        }
    }
    Ok(ScanReport { x_min, x_max, y_min, y_max, dx, dy, rows, minima, off_line_violations })
}

/// Re-measures a record with the alternating-series engine (never the one
/// that produced it) and checks all three residuals.
///
/// Fails with the specific quantity that broke: `abs_zeta` against
/// `p.tol^(1/2)`, the re-derived characterization residual against its
/// envelope threshold, or the stored reflected residual against
/// [`REFLECT_THRESHOLD`].
pub fn verify_record<T: Scalar>(
    r: &ZeroRecord<T>,
    p: PrecisionParams<T>,
) -> Result<VerificationReport<T>> {
    p.validate()?;
    let z = Complex::new(T::from_f64_lit(0.5), r.y);
    let eta = zeta_eta_oracle(z, p.ungated())?;
    let abs_zeta = eta.value.norm();
    let abs_threshold = p.tol.sqrt();
    if !(abs_zeta < abs_threshold) {
        return Err(Error::VerificationFailed {
            check: "abs_zeta",
            y: to_f64(r.y),
            value: to_f64(abs_zeta),
            threshold: to_f64(abs_threshold),
        });
    }
    let one = Complex::new(T::one(), T::zero());
    let char_residual = abs_zeta * (z - one).norm() / z.norm();
    let char_threshold = T::from_f64_lit(10.0) * abs_threshold * z.norm() / (z - one).norm();
    if !(char_residual < char_threshold) {
        return Err(Error::VerificationFailed {
            check: "char_residual",
            y: to_f64(r.y),
            value: to_f64(char_residual),
            threshold: to_f64(char_threshold),
        });
    }
    let reflect_threshold = T::from_f64_lit(REFLECT_THRESHOLD);
    if !(r.reflect_residual < reflect_threshold) {
        return Err(Error::VerificationFailed {
            check: "reflect_residual",
            y: to_f64(r.y),
            value: to_f64(r.reflect_residual),
            threshold: to_f64(reflect_threshold),
        });
    }
    Ok(VerificationReport {
        y: r.y,
        abs_zeta,
        char_residual,
        reflect_residual: r.reflect_residual,
        engine: Engine::EtaOracle,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Cx, Real};

    fn p(n: u64, k: u32) -> PrecisionParams<Real> {
        PrecisionParams { n, k, tol: 1e-8, ..PrecisionParams::default() }
    }

    const FIRST_ORDINATE: Real = 14.134725141734693;

    #[test]
    fn scan_brackets_the_first_zero_and_nothing_else() {
        let brackets = scan_line(12.0, 16.0, 0.1, p(2_000, 1)).unwrap();
        assert_eq!(brackets.len(), 1);
        let b = brackets[0];
        assert!((b.y_mid - FIRST_ORDINATE).abs() < 0.1, "y_mid = {}", b.y_mid);
        assert!(b.g_mid < b.g_lo && b.g_mid < b.g_hi);
        assert!(b.g_mid < CANDIDATE_THRESHOLD);
    }

    #[test]
    fn scans_below_the_first_zero_are_empty() {
        assert!(scan_line(0.0, 10.0, 0.25, p(2_000, 1)).unwrap().is_empty());
        assert!(scan_line(0.0, 1.0, 0.1, p(2_000, 1)).unwrap().is_empty());
    }

    #[test]
    fn scan_validates_its_grid() {
        assert!(matches!(
            scan_line(10.0, 30.0, 0.3, p(1_000, 1)),
            Err(Error::InvalidParams { .. })
        ));
        assert!(matches!(
            scan_line(5.0, 5.0, 0.1, p(1_000, 1)),
            Err(Error::InvalidParams { .. })
        ));
        assert!(matches!(
            scan_line(-1.0, 5.0, 0.1, p(1_000, 1)),
            Err(Error::InvalidParams { .. })
        ));
    }

    #[test]
    fn scan_is_deterministic() {
        let a = scan_line(13.0, 15.0, 0.1, p(500, 1)).unwrap();
        let b = scan_line(13.0, 15.0, 0.1, p(500, 1)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn refinement_lands_on_the_first_ordinate() {
        let bracket = scan_line(13.5, 14.5, 0.1, p(2_000, 1)).unwrap()[0];
        let record = refine_zero(bracket, p(50_000, 2)).unwrap();
        assert!(
            (record.y - FIRST_ORDINATE).abs() < 1e-5,
            "y = {}, off by {:e}",
            record.y,
            (record.y - FIRST_ORDINATE).abs()
        );
        assert!(record.abs_zeta < 1e-4);
        // At a true zero the residual is pure series truncation, N^(-1/2)/2.
        assert!(
            record.char_residual > 1.5e-3 && record.char_residual < 3e-3,
            "char {:e}",
            record.char_residual
        );
        assert!(record.reflect_residual < REFLECT_THRESHOLD);
        assert!(record.iterations > 20);
        assert_eq!(record.engine, Engine::LevelK);
    }

    #[test]
    fn a_shallow_dip_is_not_a_zero() {
        let bracket = Bracket {
            y_lo: 4.9,
            y_mid: 5.0,
            y_hi: 5.1,
            g_lo: 2.5,
            g_mid: 2.4,
            g_hi: 2.5,
        };
        let err = refine_zero(bracket, p(10_000, 2)).unwrap_err();
        assert!(matches!(err, Error::NotAZero { .. }), "{err:?}");
    }

    #[test]
    fn conjugate_ordinate_has_identical_magnitude() {
        let record = refine_zero(
            Bracket { y_lo: 14.0, y_mid: 14.1, y_hi: 14.3, g_lo: 0.1, g_mid: 0.01, g_hi: 0.1 },
            p(20_000, 2),
        )
        .unwrap();
        let below = zeta(Cx::new(0.5, -record.y), p(20_000, 2).ungated()).unwrap();
        assert_eq!(below.value.norm(), record.abs_zeta);
    }

    #[test]
    fn verification_accepts_the_record_and_rejects_perturbations() {
        let bracket = scan_line(13.5, 14.5, 0.1, p(2_000, 1)).unwrap()[0];
        let record = refine_zero(bracket, p(50_000, 2)).unwrap();
        let report = verify_record(&record, p(50_000, 2)).unwrap();
        assert_eq!(report.engine, Engine::EtaOracle);
        assert!(report.abs_zeta < 1e-4);

        let mut nudged = record;
        nudged.y += 1e-12;
        assert!(verify_record(&nudged, p(50_000, 2)).is_ok());

        let mut shifted = record;
        shifted.y += 1e-3;
        let err = verify_record(&shifted, p(50_000, 2)).unwrap_err();
        assert!(
            matches!(err, Error::VerificationFailed { check: "abs_zeta", .. }),
            "{err:?}"
        );

        let mut bad_reflect = record;
        bad_reflect.reflect_residual = 5e-3;
        let err = verify_record(&bad_reflect, p(50_000, 2)).unwrap_err();
        assert!(
            matches!(err, Error::VerificationFailed { check: "reflect_residual", .. }),
            "{err:?}"
        );
    }

    #[test]
    fn degenerate_rectangle_is_a_single_on_line_minimum() {
        let report = scan_rectangle(
            0.5,
            0.5,
            FIRST_ORDINATE,
            FIRST_ORDINATE,
            0.02,
            0.02,
            p(20_000, 2),
        )
        .unwrap();
        assert_eq!(report.rows.len(), 1);
        assert_eq!(report.minima.len(), 1);
        assert!(report.off_line_violations.is_empty());
        assert!(report.minima[0].abs_zeta < MINIMUM_THRESHOLD);
        assert_eq!(report.minima[0].x, 0.5);
    }

    #[test]
    fn off_line_patch_has_no_sub_threshold_points() {
        let report = scan_rectangle(0.1, 0.4, 2.0, 10.0, 0.05, 0.05, p(2_000, 4)).unwrap();
        assert_eq!(report.rows.len(), 7 * 161);
        assert!(report.minima.is_empty());
        assert!(report.off_line_violations.is_empty());
        // x-major then y ordering.
        assert_eq!(report.rows[0].x, 0.1);
        assert_eq!(report.rows[0].y, 2.0);
        assert_eq!(report.rows[160].y, 10.0);
        assert!((report.rows[161].x - 0.15).abs() < 1e-12);
    }

    #[test]
    fn rectangle_validates_its_bounds() {
        let pars = p(1_000, 4);
        assert!(scan_rectangle(0.0, 0.9, 2.0, 3.0, 0.1, 0.1, pars).is_err());
        assert!(scan_rectangle(0.1, 1.0, 2.0, 3.0, 0.1, 0.1, pars).is_err());
        assert!(scan_rectangle(0.4, 0.2, 2.0, 3.0, 0.1, 0.1, pars).is_err());
        assert!(scan_rectangle(0.1, 0.9, 3.0, 2.0, 0.1, 0.1, pars).is_err());
        assert!(scan_rectangle(0.1, 0.9, 2.0, 3.0, 0.0, 0.1, pars).is_err());
    }

    #[test]
    fn grid_counts_are_inclusive() {
        assert_eq!(grid_count(10.0, 30.0, 0.05), 401);
        assert_eq!(grid_count(0.0, 10.0, 0.05), 201);
        assert_eq!(grid_count(0.5, 0.5, 0.02), 1);
        assert_eq!(grid_count(0.1, 0.9, 0.02), 41);
        assert_eq!(grid_count(2.0, 50.0, 0.02), 2401);
    }
}
