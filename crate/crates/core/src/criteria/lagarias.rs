//! The Lagarias harmonic-number criterion: for every n >= 1,
//! sigma(n) <= H_n + exp(H_n) ln(H_n), with equality only at n = 1.
//!
//! sigma is exact (128-bit via a smallest-prime-factor sieve); H_n is
//! accumulated in compensated doubles, so the margin carries only a few
//! ulps of rounding against margins that stay comfortably positive.

use super::{CriterionReport, ExtremalItem};
use crate::criteria::sieves::{sigma_from_spf, spf_sieve};
use crate::numerics::Kahan;
use crate::{Error, Result};
use std::time::Instant;

/// Largest supported sweep bound (minutes of runtime, 4 bytes per n).
pub const SWEEP_CAP: usize = 10_000_000;

fn insert_smallest(items: &mut Vec<ExtremalItem>, n: u64, value: f64, keep: usize) {
    if items.len() == keep && value >= items[keep - 1].value {
        return;
    }
    let at = items.partition_point(|it| it.value < value);
    items.insert(at, ExtremalItem { n, value });
    items.truncate(keep);
}

/// Sweeps n = 1..=n_max; passes iff every margin is nonnegative and the
/// margin vanishes only at n = 1 (where H_1 = 1 and ln H_1 = 0 make the
/// bound exactly sigma(1) = 1 in IEEE arithmetic).
pub fn lagarias_check(n_max: usize) -> Result<CriterionReport> {
    if n_max == 0 {
        return Err(Error::InvalidParams { what: "lagarias_check needs n_max >= 1" });
    }
    if n_max > SWEEP_CAP {
        return Err(Error::DimensionTooLarge { n: n_max, cap: SWEEP_CAP });
    }
    let start = Instant::now();
    let spf = spf_sieve(n_max);
    let mut harmonic: Kahan<f64> = Kahan::new();
    let mut pass = true;
    let mut equalities: u64 = 0;
    let mut min_positive = f64::INFINITY;
    let mut min_positive_at = 0u64;
    let mut smallest: Vec<ExtremalItem> = Vec::new();
    for n in 1..=n_max {
        harmonic.add(1.0 / n as f64);
        let h = harmonic.value();
        let sigma = sigma_from_spf(n, &spf);
        let sigma_f = sigma as f64;
        debug_assert!(sigma < (1u128 << 53), "sigma must stay exactly representable");
        let margin = h + h.exp() * h.ln() - sigma_f;
        if margin < 0.0 {
            pass = false;
        }
        if margin == 0.0 {
            equalities += 1;
            if n != 1 {
                pass = false;
            }
        }
        if margin > 0.0 && margin < min_positive {
            min_positive = margin;
            min_positive_at = n as u64;
        }
        insert_smallest(&mut smallest, n as u64, margin, 10);
    }
    Ok(CriterionReport {
        id: "lagarias",
        range: format!("1..={n_max}"),
        pass,
        min_margin: if n_max == 1 { 0.0 } else { min_positive },
        extremal_items: smallest,
        details: format!(
            "equalities = {equalities} (expected exactly n = 1); \
             smallest positive margin {min_positive:.6} at n = {min_positive_at}"
        ),
        wall_time_s: start.elapsed().as_secs_f64(),
    })
}
