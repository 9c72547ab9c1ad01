use crate::error::{Error, Result};
use std::collections::HashMap;

/// Largest argument the sieve accepts.
pub const DESK_CAP: u64 = 100_000_000;

const SEGMENT: u64 = 1 << 20;

/// Exact Σ_{n≤x} d(n)².
pub fn divisor_sum_bruteforce(x: u64) -> Result<u128> {
    if x < 2 {
        return Err(Error::DomainError("divisor sum needs x ≥ 2".into()));
    }
    Ok(divisor_sums_bruteforce(&[x])?[0])
}

/// Σ_{n≤x} d(n)² for every x in `xs`, from a single segmented sweep up to
/// the largest query. Results come back in the order of `xs`.
pub fn divisor_sums_bruteforce(xs: &[u64]) -> Result<Vec<u128>> {
    let max = xs.iter().copied().max().unwrap_or(0);
    if max > DESK_CAP {
        return Err(Error::CapExceeded(max, DESK_CAP));
    }
    let mut order: Vec<usize> = (0..xs.len()).collect();
    order.sort_by_key(|&i| xs[i]);
    let mut out = vec![0u128; xs.len()];
    let mut next = 0;
    while next < order.len() && xs[order[next]] == 0 {
        next += 1;
    }

    let mut acc: u128 = 0;
    let mut counts = vec![0u32; SEGMENT as usize];
    let mut lo = 1u64;
    while lo <= max {
        let hi = (lo + SEGMENT).min(max + 1);
        let len = (hi - lo) as usize;
        counts[..len].iter_mut().for_each(|c| *c = 0);
        // every divisor pair (d, n/d) with d < √n contributes 2, d = √n once
        let mut d = 1u64;
        while d * d < hi {
            let start = (d * d).max(lo.div_ceil(d) * d);
            let mut m = start;
            while m < hi {
                counts[(m - lo) as usize] += if m == d * d { 1 } else { 2 };
                m += d;
            }
            d += 1;
        }
        for i in 0..len {
            let n = lo + i as u64;
            let c = counts[i] as u128;
            acc += c * c;
            while next < order.len() && xs[order[next]] == n {
                out[order[next]] = acc;
                next += 1;
            }
        }
        lo = hi;
    }
    Ok(out)
}

/// The same sum by a different route: Σ_{n≤x} d(n)² counts quadruples with
/// ab = cd ≤ x, so tally each product over all ordered pairs (a, b).
pub fn divisor_sum_pairs(x: u64) -> Result<u128> {
    if x < 1 {
        return Err(Error::DomainError("pair count needs x ≥ 1".into()));
    }
    if x > 1_000_000 {
        return Err(Error::CapExceeded(x, 1_000_000));
    }
    let mut tally: HashMap<u64, u64> = HashMap::new();
    for a in 1..=x {
        for b in 1..=x / a {
            *tally.entry(a * b).or_insert(0) += 1;
        }
    }
    Ok(tally.values().map(|&c| (c as u128) * (c as u128)).sum())
}

/// Prime factorisation by trial division, as (prime, exponent) pairs.
fn factor(mut n: u64) -> Vec<(u64, u32)> {
    let mut f = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            f.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        f.push((n, 1));
    }
    f
}

fn check_cap(n: u64) -> Result<()> {
    if n < 1 {
        return Err(Error::DomainError("argument must be at least 1".into()));
    }
    if n > DESK_CAP {
        return Err(Error::CapExceeded(n, DESK_CAP));
    }
    Ok(())
}

pub fn divisor_count(n: u64) -> Result<u64> {
    check_cap(n)?;
    Ok(factor(n).iter().map(|&(_, e)| e as u64 + 1).product())
}

pub fn mobius(n: u64) -> Result<i64> {
    check_cap(n)?;
    let f = factor(n);
    if f.iter().any(|&(_, e)| e > 1) {
        return Ok(0);
    }
    Ok(if f.len() % 2 == 0 { 1 } else { -1 })
}

/// a(n) = Σ_{d | n, d ≤ X} μ(d). Only squarefree divisors matter, so they
/// are enumerated from the distinct primes of n.
pub fn mollifier_coeff(n: u64, x: u64) -> Result<i64> {
    check_cap(n)?;
    let primes: Vec<u64> = factor(n).into_iter().map(|(p, _)| p).collect();
    let mut sum = 0i64;
    for mask in 0u32..(1 << primes.len()) {
        let mut d = 1u64;
        let mut small = true;
        for (i, &p) in primes.iter().enumerate() {
            if mask & (1 << i) != 0 {
                d = d.saturating_mul(p);
                if d > x {
                    small = false;
                    break;
                }
            }
        }
        if small {
            sum += if mask.count_ones() % 2 == 0 { 1 } else { -1 };
        }
    }
    Ok(sum)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sums_by_hand() {
        assert_eq!(divisor_sum_bruteforce(2).unwrap(), 5);
        assert_eq!(divisor_sum_bruteforce(7).unwrap(), 42);
    }

    #[test]
    fn sieve_matches_pair_count() {
        for x in [1u64, 2, 3, 10, 97, 1000, 4096, 10_000] {
            let a = divisor_sums_bruteforce(&[x]).unwrap()[0];
            assert_eq!(a, divisor_sum_pairs(x).unwrap(), "x = {x}");
        }
    }

    #[test]
    fn batched_queries_keep_order() {
        let xs = [5000u64, 7, 2, 5000, 1_500_000];
        let v = divisor_sums_bruteforce(&xs).unwrap();
        assert_eq!(v[1], 42);
        assert_eq!(v[2], 5);
        assert_eq!(v[0], v[3]);
        assert_eq!(v[4], divisor_sum_bruteforce(1_500_000).unwrap());
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(divisor_sum_bruteforce(DESK_CAP + 1), Err(Error::CapExceeded(..))));
        assert!(matches!(mollifier_coeff(DESK_CAP + 1, 10), Err(Error::CapExceeded(..))));
    }

    #[test]
    fn mollifier_examples() {
        assert_eq!(mollifier_coeff(1, 1).unwrap(), 1);
        assert_eq!(mollifier_coeff(13, 20).unwrap(), 0);
        assert_eq!(mollifier_coeff(12, 2).unwrap(), 0);
        assert_eq!(divisor_count(12).unwrap(), 6);
        // only d = 1 fits below X
        assert_eq!(mollifier_coeff(13, 5).unwrap(), 1);
    }

    #[test]
    fn mollifier_bounded_by_divisor_count() {
        for x in [10u64, 1000] {
            for n in 1..=100_000u64 {
                let a = mollifier_coeff(n, x).unwrap();
                assert!(a.unsigned_abs() <= divisor_count(n).unwrap(), "n = {n}, X = {x}");
            }
        }
    }
}
