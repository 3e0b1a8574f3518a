//! Classification of points relative to the critical strip.

use crate::Scalar;
use num_complex::Complex;

/// Exhaustive location of a point relative to the closed strip `0 <= re z <= 1`.
///
/// Comparisons are exact: a point counts as on the critical line only when
/// `re z == 1/2` in the scalar type, never within a tolerance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RegionLabel {
    /// `re z = 1/2` exactly.
    CriticalLine,
    /// Open left half of the strip, `0 < re z < 1/2`.
    StripLeft,
    /// Open right half of the strip, `1/2 < re z < 1`.
    StripRight,
    /// `re z` in `{0, 1}` with `z` neither 0 nor 1.
    ClosedStripBoundary,
    /// The pole of zeta, `z = 1`.
    Pole,
    /// The origin, `z = 0`.
    ZeroPoint,
    /// Everything with `re z < 0` or `re z > 1`.
    OutsideStrip,
}

impl RegionLabel {
    /// Upper-case identifier used in reports.
    pub fn as_str(self) -> &'static str {
        match self {
            RegionLabel::CriticalLine => "CRITICAL_LINE",
            RegionLabel::StripLeft => "STRIP_LEFT",
            RegionLabel::StripRight => "STRIP_RIGHT",
            RegionLabel::ClosedStripBoundary => "CLOSED_STRIP_BOUNDARY",
            RegionLabel::Pole => "POLE",
            RegionLabel::ZeroPoint => "ZERO_POINT",
            RegionLabel::OutsideStrip => "OUTSIDE_STRIP",
        }
    }
}

/// Assigns the unique [`RegionLabel`] of a finite point.
///
/// The special points 0 and 1 take precedence over the boundary lines they
/// sit on, so every finite point receives exactly one label.
pub fn classify_region<T: Scalar>(z: Complex<T>) -> RegionLabel {
    let zero = T::zero();
    let one = T::one();
    let half = T::from_f64_lit(0.5);
    if z.re == one && z.im == zero {
        RegionLabel::Pole
    } else if z.re == zero && z.im == zero {
        RegionLabel::ZeroPoint
    } else if z.re == zero || z.re == one {
        RegionLabel::ClosedStripBoundary
    } else if z.re == half {
        RegionLabel::CriticalLine
    } else if z.re > zero && z.re < half {
        RegionLabel::StripLeft
    } else if z.re > half && z.re < one {
        RegionLabel::StripRight
    } else {
        RegionLabel::OutsideStrip
    }
}
