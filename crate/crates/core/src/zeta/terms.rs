//! Closed-form integral terms and their compensated partial sums.
//!
//! The continuation engines are built on the integrals
//! `J_k(n, z) = integral of t^k / (n+t)^(z+k) over t in (0, 1)`.
//! Each one has a closed form in complex powers of n and n+1; quadrature is
//! kept only as a fallback where the closed form degenerates, and as an
//! oracle in tests.

use crate::numerics::{exp_ln_pow, integrate_01_with, pow_pos, require_finite, ComplexKahan, QUAD_DEPTH_CAP, QUAD_TOL};
use crate::zeta::PrecisionParams;
use crate::{Error, Result, Scalar};
use num_complex::Complex;

/// One evaluated integral term.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntegralTerm<T: Scalar> {
    pub value: Complex<T>,
    /// True when the closed form degenerated and adaptive quadrature was
    /// used instead.
    pub used_quadrature: bool,
}

/// Compensated partial sum of the depth-1 terms, with its tail envelope.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SSum<T: Scalar> {
    pub value: Complex<T>,
    /// Rigorous bound on the discarded tail: N^(-re z) / (2 re z).
    pub tail_bound: T,
}

/// True where a closed-form denominator z - 1 or z + j (j < k) comes within
/// `radius` of zero.
pub(crate) fn degenerate<T: Scalar>(z: Complex<T>, k: u32, radius: T) -> bool {
    if (z - Complex::new(T::one(), T::zero())).norm() < radius {
        return true;
    }
    for j in 0..k {
        let shifted = Complex::new(z.re + T::from_usize_lit(j as usize), z.im);
        if shifted.norm() < radius {
            return true;
        }
    }
    false
}

/// Depth-1 closed form given pm = n^(-z) and pp = (n+1)^(-z).
///
/// Shared between the standalone term and the streaming sum so both produce
/// bit-identical values.
#[inline]
pub(crate) fn closed_form_k1<T: Scalar>(
    nf: T,
    pm: Complex<T>,
    pp: Complex<T>,
    z: Complex<T>,
) -> Complex<T> {
    let one = Complex::new(T::one(), T::zero());
    let n1 = nf + T::one();
    (pp * n1 - pm * nf) / (one - z) + (pp - pm) * nf / z
}

/// Depth-k value by the integration-by-parts recurrence, seeded with
/// qm = n^(1-z) and qq = (n+1)^(1-z).
///
/// J_0 = (qq - qm)/(1-z), then J_j = ((n+1)^(1-z-j) - j J_(j-1))/(1-z-j);
/// the power ladder reuses qq through repeated division by n+1.
#[inline]
pub(crate) fn jk_from_pows<T: Scalar>(
    nf: T,
    qm: Complex<T>,
    qq: Complex<T>,
    z: Complex<T>,
    k: u32,
) -> Complex<T> {
    let n1 = nf + T::one();
    let one = T::one();
    let mut jv = (qq - qm) / (Complex::new(one, T::zero()) - z);
    let mut ladder = qq;
    for j in 1..=k {
        let jf = T::from_usize_lit(j as usize);
        ladder = ladder / n1;
        jv = (ladder - jv * jf) / (Complex::new(one - jf, T::zero()) - z);
    }
    jv
}

/// Evaluates `J_k(n, z)`, preferring the closed form.
///
/// Near the degenerate set of the closed form (z within `pole_radius` of 1
/// or of {0, -1, ..., 1-k}) the term falls back to adaptive quadrature and
/// reports that through [`IntegralTerm::used_quadrature`].
pub fn integral_term<T: Scalar>(
    n: u64,
    z: Complex<T>,
    k: u32,
    pole_radius: T,
) -> Result<IntegralTerm<T>> {
    require_finite(z, "integral_term argument")?;
    if n < 1 {
        return Err(Error::InvalidParams { what: "integral_term requires n >= 1" });
    }
    if k < 1 {
        return Err(Error::InvalidParams { what: "integral_term requires k >= 1" });
    }
    if !(pole_radius > T::zero()) {
        return Err(Error::InvalidParams { what: "pole_radius must be positive" });
    }
    let nf = T::from_usize_lit(n as usize);
    if degenerate(z, k, pole_radius) {
        let kf = T::from_usize_lit(k as usize);
        let minus_zk = Complex::new(-(z.re + kf), -z.im);
        let f = move |t: T| pow_pos(nf + t, minus_zk) * t.powi(k as i32);
        // Quadrature target: never ask for more than the scalar type holds.
        let qtol = T::from_f64_lit(QUAD_TOL).max(T::epsilon() * T::from_f64_lit(64.0));
        let value = integrate_01_with(f, &[], qtol, QUAD_DEPTH_CAP)?;
        return Ok(IntegralTerm { value, used_quadrature: true });
    }
    let value = if k == 1 {
        let neg_z = -z;
        let pm = pow_pos(nf, neg_z);
        let pp = pow_pos(nf + T::one(), neg_z);
        closed_form_k1(nf, pm, pp, z)
    } else {
        let one_minus_z = Complex::new(T::one() - z.re, -z.im);
        let qm = pow_pos(nf, one_minus_z);
        let qq = pow_pos(nf + T::one(), one_minus_z);
        jk_from_pows(nf, qm, qq, z, k)
    };
    Ok(IntegralTerm { value, used_quadrature: false })
}

/// Compensated sum of the first `p.n` depth-1 terms.
///
/// Requires re z > 0 so the tail converges absolutely, and z outside the
/// exclusion discs around 0 and 1. Fails with `TAIL_TOO_LARGE` when the
/// rigorous tail envelope already exceeds `p.tol`.
pub fn s_sum<T: Scalar>(z: Complex<T>, p: PrecisionParams<T>) -> Result<SSum<T>> {
    s_sum_impl(z, p, true)
}

/// [`s_sum`] without the tolerance gate, for internal pipelines that weigh
/// the reported tail bound themselves.
pub(crate) fn s_sum_ungated<T: Scalar>(z: Complex<T>, p: PrecisionParams<T>) -> Result<SSum<T>> {
    s_sum_impl(z, p, false)
}

fn s_sum_impl<T: Scalar>(z: Complex<T>, p: PrecisionParams<T>, gated: bool) -> Result<SSum<T>> {
    p.validate()?;
    require_finite(z, "s_sum argument")?;
    if z.re <= T::zero() {
        return Err(Error::WrongRegion {
            engine: "S_SUM",
            re: z.re.to_f64().unwrap_or(f64::NAN),
        });
    }
    check_pole_discs(z, p.pole_radius)?;
    let nf = T::from_usize_lit(p.n as usize);
    let two = T::from_f64_lit(2.0);
    let tail_bound = nf.powf(-z.re) / (two * z.re);
    if gated && tail_bound > p.tol {
        return Err(Error::TailTooLarge {
            bound: tail_bound.to_f64().unwrap_or(f64::NAN),
            tol: p.tol.to_f64().unwrap_or(f64::NAN),
        });
    }
    let neg_z = -z;
    let mut acc = ComplexKahan::new();
    let mut pm = pow_pos(T::one(), neg_z);
    for n in 1..=p.n {
        let mf = T::from_usize_lit(n as usize);
        let pp = exp_ln_pow((mf + T::one()).ln(), neg_z);
        acc.add(closed_form_k1(mf, pm, pp, z));
        pm = pp;
    }
    Ok(SSum { value: acc.value(), tail_bound })
}

/// Rejects points inside the exclusion discs around z = 0 and z = 1.
pub(crate) fn check_pole_discs<T: Scalar>(z: Complex<T>, radius: T) -> Result<()> {
    let r64 = radius.to_f64().unwrap_or(f64::NAN);
    if z.norm() <= radius {
        return Err(Error::PoleProximity { at: "z = 0", radius: r64 });
    }
    if (z - Complex::new(T::one(), T::zero())).norm() <= radius {
        return Err(Error::PoleProximity { at: "z = 1", radius: r64 });
    }
    Ok(())
}
