//! Integer sieves shared by the criterion sweeps: Moebius/Mertens by a
//! linear sieve, smallest prime factors, and exact divisor sums.

/// Moebius mu(k) for k <= n_max by a linear sieve; index 0 is unused.
pub fn mobius_sieve(n_max: usize) -> Vec<i8> {
    let mut mu = vec![0i8; n_max + 1];
    if n_max >= 1 {
        mu[1] = 1;
    }
    let mut is_composite = vec![false; n_max + 1];
    let mut primes: Vec<usize> = Vec::new();
    for i in 2..=n_max {
        if !is_composite[i] {
            primes.push(i);
            mu[i] = -1;
        }
        for &p in &primes {
            let Some(ip) = i.checked_mul(p).filter(|&ip| ip <= n_max) else { break };
            is_composite[ip] = true;
            if i % p == 0 {
                mu[ip] = 0;
                break;
            }
            mu[ip] = -mu[i];
        }
    }
    mu
}

/// Mertens prefix sums M(n) = sum of mu(k) for k <= n; M(0) = 0.
pub fn mertens_prefix(n_max: usize) -> Vec<i64> {
    let mu = mobius_sieve(n_max);
    let mut m = vec![0i64; n_max + 1];
    for i in 1..=n_max {
        m[i] = m[i - 1] + i64::from(mu[i]);
    }
    m
}

/// Smallest prime factor of every k <= n_max (0 for k < 2).
pub fn spf_sieve(n_max: usize) -> Vec<u32> {
    assert!(n_max < u32::MAX as usize, "smallest-prime-factor sieve stores u32");
    let mut spf = vec![0u32; n_max + 1];
    for i in 2..=n_max {
        if spf[i] == 0 {
            let mut j = i;
            while j <= n_max {
                if spf[j] == 0 {
                    spf[j] = i as u32;
                }
                j += i;
            }
        }
    }
    spf
}

/// Exact sigma(n) = sum of divisors of n, read off the factorization given
/// by a smallest-prime-factor table. 128-bit so no realistic n overflows.
pub fn sigma_from_spf(mut n: usize, spf: &[u32]) -> u128 {
    let mut sigma: u128 = 1;
    while n > 1 {
        let p = spf[n] as usize;
        let mut power: u128 = 1;
        let mut factor_sum: u128 = 1;
        while n % p == 0 {
            n /= p;
            power *= p as u128;
            factor_sum += power;
        }
        sigma *= factor_sum;
    }
    sigma
}
