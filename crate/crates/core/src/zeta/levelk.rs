//! Recursive depth-K continuation, valid on re z > 1 - K.
//!
//! Each node at shift m evaluates w = z + m through
//!
//!   zeta(w) = 1 + 1/(w-1)
//!             - sum_{j=1}^{D-1} [(w)_j / (j+1)!] (zeta(w+j) - 1)
//!             - [(w)_D / D!] sum_{n<=N} J_D(n, w)
//!
//! where D = K - m is the depth left at that node, (w)_j is the rising
//! factorial, and J_D is the closed-form integral term of depth D. Inner
//! values recurse with depth D - j, bottom out in the direct engine once
//! re w >= 3/2, or in the depth-1 formula. Shifts are memoized: the depth
//! at a shift is the same along every recursion path, so one value per
//! shift suffices.
//!
//! Apparent poles where w + j = 1 are removable: (w)_j carries a factor
//! eps = w + j - 1 that cancels the pole of zeta(w+j), and the node swaps
//! in the Laurent-product expansion
//!   (w)_{j-1} (1 + (g0 - 1) eps - g1 eps^2) / (j+1)!
//! with Stieltjes constants g0, g1, instead of recursing. The only true
//! pole of the engine is z = 1.

use crate::numerics::{exp_ln_pow, pow_pos, require_finite, ComplexKahan};
use crate::zeta::terms::{degenerate, integral_term, jk_from_pows, s_sum_ungated};
use crate::zeta::{eq1_value, Engine, ErrorBreakdown, EvalResult, PrecisionParams};
use crate::zeta::zeta_direct;
use crate::{Error, Result, Scalar};
use num_complex::Complex;
use std::collections::HashMap;

/// First two Stieltjes constants, for the removable-singularity expansion.
const STIELTJES_0: f64 = 0.577_215_664_901_532_86;
const STIELTJES_1: f64 = -0.072_815_845_483_676_72;

/// Coefficient of the |eps|^3 truncation bound left by stopping the
/// expansion after the eps^2 term (covers |g2|/2 and the higher tail).
const EXPANSION_TRUNC: f64 = 0.02;

/// Continuation of the zeta function by the recursive depth-K scheme.
///
/// The reported `err_bound` covers series truncation at every node of the
/// recursion plus the expansion remainders; it does not model scalar
/// rounding. `diag.richardson` additionally records the observed change in
/// the outermost remainder sum between N/2 and N terms.
pub fn zeta_levelk<T: Scalar>(z: Complex<T>, p: PrecisionParams<T>) -> Result<EvalResult<T>> {
    p.validate()?;
    require_finite(z, "zeta_levelk argument")?;
    let kf = T::from_usize_lit(p.k as usize);
    if z.re <= T::one() - kf {
        return Err(Error::WrongRegion {
            engine: "LEVELK",
            re: z.re.to_f64().unwrap_or(f64::NAN),
        });
    }
    let one = Complex::new(T::one(), T::zero());
    if (z - one).norm() <= p.pole_radius {
        return Err(Error::PoleProximity {
            at: "z = 1",
            radius: p.pole_radius.to_f64().unwrap_or(f64::NAN),
        });
    }
    let mut eval = Evaluator {
        z,
        p,
        memo: HashMap::new(),
        top: ErrorBreakdown::series_only(T::zero()),
    };
    let (value, err_bound) = eval.node(0)?;
    Ok(EvalResult {
        value,
        err_bound,
        engine: Engine::LevelK,
        params: p,
        diag: eval.top,
    })
}

struct Evaluator<T: Scalar> {
    z: Complex<T>,
    p: PrecisionParams<T>,
    /// shift -> (value, error bound); the depth at a shift is path-free.
    memo: HashMap<u32, (Complex<T>, T)>,
    /// Breakdown captured at the outermost node.
    top: ErrorBreakdown<T>,
}

impl<T: Scalar> Evaluator<T> {
    fn node(&mut self, m: u32) -> Result<(Complex<T>, T)> {
        if let Some(&hit) = self.memo.get(&m) {
            return Ok(hit);
        }
        let w = Complex::new(self.z.re + T::from_usize_lit(m as usize), self.z.im);
        let depth = self.p.k - m;
        let result = if w.re >= T::from_f64_lit(1.5) {
            let r = zeta_direct(w, self.p)?;
            if m == 0 {
                self.top = r.diag;
            }
            (r.value, r.err_bound)
        } else if depth == 1 {
            let s = s_sum_ungated(w, self.p)?;
            let err = w.norm() * s.tail_bound;
            if m == 0 {
                self.top = ErrorBreakdown::series_only(err);
            }
            (eq1_value(w, s.value), err)
        } else {
            self.expand(m, w, depth)?
        };
        self.memo.insert(m, result);
        Ok(result)
    }

    /// The depth-D formula at shift m; D >= 2.
    fn expand(&mut self, m: u32, w: Complex<T>, depth: u32) -> Result<(Complex<T>, T)> {
        let one = Complex::new(T::one(), T::zero());
        let d = depth as usize;
        // poch[j] = (w)_j; exact zeros at nonpositive integer arguments
        // are what make the trivial zeros come out exactly.
        let mut poch = Vec::with_capacity(d + 1);
        poch.push(one);
        for i in 0..d {
            let prev = poch[i];
            poch.push(prev * Complex::new(w.re + T::from_usize_lit(i), w.im));
        }
        let zero = Complex::new(T::zero(), T::zero());
        let g0 = T::from_f64_lit(STIELTJES_0);
        let g1 = T::from_f64_lit(STIELTJES_1);

        let mut value = one + (w - one).inv();
        let mut rec_err = T::zero();
        for j in 1..d {
            let facj1 = factorial::<T>(j + 1);
            let eps = Complex::new(w.re + T::from_usize_lit(j) - T::one(), w.im);
            if eps.norm() < self.p.pole_radius {
                // Removable singularity of (w)_j (zeta(w+j) - 1): take the
                // expansion instead of recursing into the pole.
                let poly = one + eps * (g0 - T::one()) - eps * eps * g1;
                value = value - poch[j - 1] * poly / facj1;
                rec_err = rec_err
                    + T::from_f64_lit(EXPANSION_TRUNC) * eps.norm().powi(3) * poch[j - 1].norm()
                        / facj1;
            } else if poch[j] == zero {
                // Exactly vanishing coefficient: the term contributes nothing.
            } else {
                let (inner, inner_err) = self.node(m + j as u32)?;
                let coef = poch[j] / facj1;
                value = value - coef * (inner - one);
                rec_err = rec_err + coef.norm() * inner_err;
            }
        }

        let mut tail = T::zero();
        let mut richardson = T::zero();
        if poch[d] != zero {
            let coef = poch[d] / factorial::<T>(d);
            let (ssum, snapshot) = self.remainder_sum(w, depth)?;
            value = value - coef * ssum;
            let sigma = w.re + T::from_usize_lit(d);
            let nf = T::from_usize_lit(self.p.n as usize);
            tail = coef.norm() * nf.powf(T::one() - sigma) / (sigma - T::one());
            if let Some(half) = snapshot {
                richardson = coef.norm() * (ssum - half).norm();
            }
        }
        if m == 0 {
            self.top = ErrorBreakdown { tail_bound: tail, recursive_bound: rec_err, richardson };
        }
        Ok((value, tail + rec_err))
    }

    /// sum_{n<=N} J_depth(n, w), with a snapshot of the partial sum at N/2.
    ///
    /// Away from the degenerate set the closed-form ladder runs with one
    /// complex power per term; inside it every term falls back to
    /// quadrature (correct, but far slower — reachable only within
    /// `pole_radius` of the integer degeneracies).
    fn remainder_sum(&self, w: Complex<T>, depth: u32) -> Result<(Complex<T>, Option<Complex<T>>)> {
        let half_mark = self.p.n / 2;
        let mut acc = ComplexKahan::new();
        let mut snapshot = None;
        if degenerate(w, depth, self.p.pole_radius) {
            for n in 1..=self.p.n {
                let t = integral_term(n, w, depth, self.p.pole_radius)?;
                acc.add(t.value);
                if n == half_mark {
                    snapshot = Some(acc.value());
                }
            }
        } else {
            let one_minus_w = Complex::new(T::one() - w.re, -w.im);
            let mut qm = pow_pos(T::one(), one_minus_w);
            for n in 1..=self.p.n {
                let nf = T::from_usize_lit(n as usize);
                let qq = exp_ln_pow((nf + T::one()).ln(), one_minus_w);
                acc.add(jk_from_pows(nf, qm, qq, w, depth));
                qm = qq;
                if n == half_mark {
                    snapshot = Some(acc.value());
                }
            }
        }
        Ok((acc.value(), snapshot))
    }
}

/// n! as a scalar; exact in f64 through the largest depth the parameter
/// validator admits.
fn factorial<T: Scalar>(n: usize) -> T {
    let mut f = T::one();
    for i in 2..=n {
        f = f * T::from_usize_lit(i);
    }
    f
}
