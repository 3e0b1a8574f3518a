//! Principal-character Dirichlet L-functions: L(s, chi_1 mod k) differs
//! from zeta by the finite Euler product over the primes dividing k, so it
//! inherits every zeta zero in the strip.

use crate::numerics::cpow_posbase;
use crate::zeta::{zeta, EvalResult, PrecisionParams};
use crate::{Error, Result, Scalar};
use num_complex::Complex;

fn distinct_prime_factors(mut k: u64) -> Vec<u64> {
    let mut primes = Vec::new();
    let mut d = 2u64;
    while d * d <= k {
        if k % d == 0 {
            primes.push(d);
            while k % d == 0 {
                k /= d;
            }
        }
        d += 1;
    }
    if k > 1 {
        primes.push(k);
    }
    primes
}

/// L(s, chi_1 mod k) = zeta(s) * prod over primes p | k of (1 - p^(-s)).
///
/// The product is finite and exact to rounding, so the engine error bound
/// scales by its magnitude; k = 1 returns the dispatcher result untouched.
pub fn l_principal<T: Scalar>(
    s: Complex<T>,
    k: u64,
    p: PrecisionParams<T>,
) -> Result<EvalResult<T>> {
    if k == 0 {
        return Err(Error::InvalidParams { what: "modulus k must be at least 1" });
    }
    let base = zeta(s, p)?;
    let primes = distinct_prime_factors(k);
    if primes.is_empty() {
        return Ok(base);
    }
    let mut product = Complex::new(T::one(), T::zero());
    for q in primes {
        let factor = Complex::new(T::one(), T::zero())
            - cpow_posbase(T::from_usize_lit(q as usize), -s)?;
        product = product * factor;
    }
    let scale = product.norm();
    let mut diag = base.diag;
    diag.tail_bound = diag.tail_bound * scale;
    diag.recursive_bound = diag.recursive_bound * scale;
    Ok(EvalResult {
        value: base.value * product,
        err_bound: base.err_bound * scale,
        engine: base.engine,
        params: base.params,
        diag,
    })
}
