//! Exact Redheffer determinants and the growth report for |det A(n)|.
//!
//! A(n) has entry(i,j) = 1 iff j = 1 or i | j. Its determinant equals the
//! Mertens sum M(n); here the determinant is computed by fraction-free
//! (Bareiss) elimination so the identity can be checked against the sieve,
//! never assumed.

use super::{CriterionReport, ExtremalItem};
use crate::criteria::sieves::mertens_prefix;
use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use std::time::Instant;

/// Largest supported Redheffer dimension.
pub const DET_CAP: usize = 2000;

fn redheffer_entries(n: usize) -> Vec<Vec<i64>> {
    // 1-based (i, j): entry 1 iff j == 1 or i divides j.
    (1..=n)
        .map(|i| (1..=n).map(|j| i64::from(j == 1 || j % i == 0)).collect())
        .collect()
}

/// Bareiss elimination over i64 with row-swap pivoting.
/// Returns None if any intermediate product overflows.
fn bareiss_i64(mut a: Vec<Vec<i64>>) -> Option<i64> {
    let n = a.len();
    let mut sign = 1i64;
    let mut prev = 1i64;
    for k in 0..n.saturating_sub(1) {
        if a[k][k] == 0 {
            let Some(r) = (k + 1..n).find(|&r| a[r][k] != 0) else {
                return Some(0);
            };
            a.swap(k, r);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[k][k]
                    .checked_mul(a[i][j])?
                    .checked_sub(a[i][k].checked_mul(a[k][j])?)?;
                // Exact by the Bareiss identity: prev divides num.
                a[i][j] = num / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    Some(sign * a[n - 1][n - 1])
}

/// Same elimination in unbounded integers; used when i64 overflows.
fn bareiss_big(a: &[Vec<i64>]) -> BigInt {
    let n = a.len();
    let mut m: Vec<Vec<BigInt>> =
        a.iter().map(|row| row.iter().map(|&v| BigInt::from(v)).collect()).collect();
    let mut negate = false;
    let mut prev = BigInt::from(1);
    for k in 0..n.saturating_sub(1) {
        if m[k][k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, r);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[k][k] * &m[i][j] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate { -det } else { det }
}

/// Exact determinant of the n-by-n Redheffer matrix.
pub fn redheffer_det(n: usize) -> Result<i64> {
    if n == 0 {
        return Err(Error::InvalidParams { what: "redheffer_det needs n >= 1" });
    }
    if n > DET_CAP {
        return Err(Error::DimensionTooLarge { n, cap: DET_CAP });
    }
    let a = redheffer_entries(n);
    if let Some(det) = bareiss_i64(a.clone()) {
        return Ok(det);
    }
    bareiss_big(&a).to_i64().ok_or(Error::Overflow {
        what: "Redheffer determinant does not fit in 64 bits",
    })
}

/// Empirical growth constant: max over n <= n_max of |M(n)| / n^(1/2+eps),
/// with M from the Moebius sieve. Informational — the report always passes;
/// the asymptotic bound is not falsifiable at finite range.
pub fn redheffer_growth(n_max: usize, eps: f64) -> Result<CriterionReport> {
    if n_max == 0 || !(eps > 0.0) || !eps.is_finite() {
        return Err(Error::InvalidParams { what: "growth report needs n_max >= 1 and eps > 0" });
    }
    let start = Instant::now();
    let m = mertens_prefix(n_max);
    let exponent = 0.5 + eps;
    let mut c_max = 0.0f64;
    let mut arg_max = 1u64;
    let mut abs_max = 0i64;
    for n in 1..=n_max {
        let ratio = (m[n].abs() as f64) / (n as f64).powf(exponent);
        if ratio > c_max {
            c_max = ratio;
            arg_max = n as u64;
        }
        abs_max = abs_max.max(m[n].abs());
    }
    Ok(CriterionReport {
        id: "redheffer-growth",
        range: format!("1..={n_max}, eps = {eps}"),
        pass: true,
        min_margin: c_max,
        extremal_items: vec![ExtremalItem { n: arg_max, value: c_max }],
        details: format!(
            "empirical C(eps) = {c_max:.6} attained at n = {arg_max}; max |M(n)| = {abs_max}"
        ),
        wall_time_s: start.elapsed().as_secs_f64(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_determinants_by_hand() {
        assert_eq!(redheffer_det(1).unwrap(), 1);
        assert_eq!(redheffer_det(2).unwrap(), 0);
        assert_eq!(redheffer_det(3).unwrap(), -1);
        assert_eq!(redheffer_det(5).unwrap(), -2);
    }

    #[test]
    fn determinants_equal_the_sieve_up_to_sixty() {
        let m = mertens_prefix(60);
        for n in 1..=60usize {
            assert_eq!(redheffer_det(n).unwrap(), m[n], "n = {n}");
        }
    }

    #[test]
    fn dimension_cap_is_enforced() {
        assert!(matches!(
            redheffer_det(DET_CAP + 1),
            Err(Error::DimensionTooLarge { .. })
        ));
        assert!(redheffer_det(0).is_err());
    }

    #[test]
    fn unbounded_path_agrees_where_i64_overflows() {
        // Scale a small matrix so i64 Bareiss overflows but the true
        // determinant is still representable.
        let s = 1i64 << 22;
        let a = vec![
            vec![2 * s, s, 0],
            vec![s, 2 * s, s],
            vec![0, s, 2 * s],
        ];
        // det = 4 s^3; intermediate products reach s^4 > i64::MAX.
        assert_eq!(bareiss_i64(a.clone()), None);
        assert_eq!(bareiss_big(&a), BigInt::from(4) * BigInt::from(s).pow(3));
    }

    #[test]
    fn unbounded_path_matches_checked_path_in_range() {
        for n in [1usize, 2, 7, 24, 60] {
            let a = redheffer_entries(n);
            let small = bareiss_i64(a.clone()).unwrap();
            assert_eq!(BigInt::from(small), bareiss_big(&a), "n = {n}");
        }
    }

    #[test]
    fn growth_report_reference_points() {
        let r1 = redheffer_growth(1, 0.25).unwrap();
        assert_eq!(r1.min_margin, 1.0);
        assert!(r1.pass);

        let r = redheffer_growth(100, 0.1).unwrap();
        assert!(r.pass);
        assert!(r.min_margin > 0.0 && r.min_margin <= 1.0, "C = {}", r.min_margin);
        assert!(r.details.contains("max |M(n)|"));
    }
}
