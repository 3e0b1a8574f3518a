//! Independent oracle engine built on the alternating series
//! eta(z) = sum (-1)^(n-1) n^(-z), accelerated by Euler's transformation,
//! with zeta(z) = eta(z) / (1 - 2^(1-z)).
//!
//! This engine shares no series algebra with the integral-based engines,
//! which makes it suitable as a cross-check in tests and verification.

use crate::numerics::{exp_ln_pow, pow_pos, require_finite, ComplexKahan};
use crate::zeta::{Engine, ErrorBreakdown, EvalResult, PrecisionParams};
use crate::{Error, Result, Scalar};
use num_complex::Complex;

/// Hard cap on total series terms before giving up.
const TERM_CAP: u64 = 4000;

/// Terms summed verbatim before acceleration starts; the cap keeps room
/// for the accelerated phase within [`TERM_CAP`].
const DIRECT_CAP: u64 = TERM_CAP / 2;

/// Smallest denominator magnitude |1 - 2^(1-z)| this engine accepts.
/// On the line re z = 1/2 the magnitude never drops below sqrt(2) - 1.
const DENOM_GUARD: f64 = 1e-3;

/// Euler-transformation accumulator for a slowly alternating series
/// (van Wijngaarden's incremental formulation). Terms are fed with their
/// signs; each call folds the new term into a ladder of forward averages
/// and returns the increment contributed to the transformed sum.
struct EulerAccum<T: Scalar> {
    wksp: Vec<Complex<T>>,
    sum: ComplexKahan<T>,
    /// First-order rounding envelope: epsilon times the magnitude of every
    /// average stored in the ladder. At large heights the ladder runs long
    /// enough that this, not the truncation, dominates the error.
    noise: T,
}

impl<T: Scalar> EulerAccum<T> {
    fn new() -> Self {
        Self { wksp: Vec::new(), sum: ComplexKahan::new(), noise: T::zero() }
    }

    fn feed(&mut self, term: Complex<T>) -> Complex<T> {
        let half = T::from_f64_lit(0.5);
        if self.wksp.is_empty() {
            self.wksp.push(term);
            let inc = term * half;
            self.sum.add(inc);
            self.noise = self.noise + T::epsilon() * l1(term);
            return inc;
        }
        let nterm = self.wksp.len();
        let mut row = T::zero();
        let mut tmp = self.wksp[0];
        self.wksp[0] = term;
        for j in 0..nterm - 1 {
            let dum = self.wksp[j + 1];
            let avg = (self.wksp[j] + tmp) * half;
            self.wksp[j + 1] = avg;
            row = row + l1(avg);
            tmp = dum;
        }
        let next = (self.wksp[nterm - 1] + tmp) * half;
        row = row + l1(next);
        self.noise = self.noise + T::epsilon() * row;
        // Deepen the ladder only while doing so shrinks the correction.
        let inc = if next.norm() <= self.wksp[nterm - 1].norm() {
            self.wksp.push(next);
            next * half
        } else {
            next
        };
        self.sum.add(inc);
        inc
    }
}

/// Cheap magnitude proxy |re| + |im| (within sqrt(2) of the modulus).
#[inline]
fn l1<T: Scalar>(w: Complex<T>) -> T {
    w.re.abs() + w.im.abs()
}

/// Oracle evaluation of zeta on re z > 0 away from the zeros of the
/// alternating-series denominator.
///
/// `p.n` and `p.k` do not steer this engine; the returned parameters carry
/// the number of series terms actually consumed in `n`.
pub fn zeta_eta_oracle<T: Scalar>(z: Complex<T>, p: PrecisionParams<T>) -> Result<EvalResult<T>> {
    p.validate()?;
    require_finite(z, "zeta_eta_oracle argument")?;
    if z.re <= T::zero() {
        return Err(Error::WrongRegion {
            engine: "ETA_ORACLE",
            re: z.re.to_f64().unwrap_or(f64::NAN),
        });
    }
    let one = Complex::new(T::one(), T::zero());
    let denom = one - pow_pos(T::from_f64_lit(2.0), one - z);
    let denom_norm = denom.norm();
    if denom_norm <= T::from_f64_lit(DENOM_GUARD) {
        return Err(Error::EtaDenominatorSmall {
            denom: denom_norm.to_f64().unwrap_or(f64::NAN),
        });
    }

    // Oscillation from n^(-i im z) defeats the transformation until the
    // phase step |im z| / n falls below order one, so sum the early terms
    // verbatim.
    let direct_len = {
        let by_height = (0.5 * z.im.abs().to_f64().unwrap_or(0.0)).ceil() as u64;
        by_height.max(10).min(DIRECT_CAP)
    };
    let neg_z = -z;
    let mut direct = ComplexKahan::new();
    let mut abs_scale = T::zero();
    let mut sign = T::one();
    for n in 1..=direct_len {
        let nf = T::from_usize_lit(n as usize);
        let term = exp_ln_pow(nf.ln(), neg_z) * sign;
        direct.add(term);
        abs_scale = abs_scale + term.norm();
        sign = -sign;
    }

    let mut euler = EulerAccum::new();
    let mut n = direct_len;
    let mut last_inc = T::nan();
    let mut small_in_a_row = 0u32;
    let stop_factor = T::from_f64_lit(4.0) * T::epsilon();
    // Below n = |im z| / pi consecutive terms have not yet settled into
    // sign-dominated alternation, and accidental phase alignments can fake
    // tiny increments; never trust a stop before that point.
    let stop_gate = (z.im.abs().to_f64().unwrap_or(0.0) / std::f64::consts::PI).ceil() as u64;
    loop {
        n += 1;
        if n > TERM_CAP {
            return Err(Error::NoConvergence {
                residual: last_inc.to_f64().unwrap_or(f64::NAN),
                depth_cap: TERM_CAP as u32,
            });
        }
        let nf = T::from_usize_lit(n as usize);
        let term = exp_ln_pow(nf.ln(), neg_z) * sign;
        sign = -sign;
        abs_scale = abs_scale + term.norm();
        let inc = euler.feed(term);
        last_inc = inc.norm();
        if n < stop_gate {
            continue;
        }
        let scale = T::one() + (direct.value() + euler.sum.value()).norm();
        if last_inc <= stop_factor * scale {
            small_in_a_row += 1;
            if small_in_a_row >= 2 {
                break;
            }
        } else {
            small_in_a_row = 0;
        }
    }

    let eta = direct.value() + euler.sum.value();
    let err_num = T::from_f64_lit(4.0) * last_inc
        + T::from_f64_lit(8.0) * T::epsilon() * abs_scale
        + T::from_f64_lit(16.0) * euler.noise;
    let err_bound = err_num / denom_norm;
    let mut recorded = p;
    recorded.n = n;
    Ok(EvalResult {
        value: eta / denom,
        err_bound,
        engine: Engine::EtaOracle,
        params: recorded,
        diag: ErrorBreakdown::series_only(err_bound),
    })
}
