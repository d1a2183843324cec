//! Elementary arithmetic functions: divisors, gcd, Möbius, Euler totient and
//! plain binomial coefficients.
//!
//! Inputs here are small (bounded by the word length), so factorisation is
//! plain trial division.

use crate::{Error, Result};

fn nonzero(n: u64) -> Result<u64> {
    if n == 0 {
        Err(Error::Zero { what: "argument" })
    } else {
        Ok(n)
    }
}

/// All positive divisors of `n`, strictly increasing.
pub fn divisors(n: u64) -> Result<Vec<u64>> {
    let n = nonzero(n)?;
    let mut low = Vec::new();
    let mut high = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            low.push(d);
            if d * d != n {
                high.push(n / d);
            }
        }
        d += 1;
    }
    low.extend(high.into_iter().rev());
    Ok(low)
}

/// Greatest common divisor, with `gcd(a, 0) = a` and `gcd(0, 0) = 0`.
pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Prime factorisation as `(prime, exponent)` pairs in increasing order.
pub fn factorize(n: u64) -> Result<Vec<(u64, u32)>> {
    let mut n = nonzero(n)?;
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    Ok(out)
}

/// Möbius function μ(n).
pub fn mobius(n: u64) -> Result<i64> {
    let factors = factorize(n)?;
    if factors.iter().any(|&(_, e)| e > 1) {
        return Ok(0);
    }
    Ok(if factors.len() % 2 == 0 { 1 } else { -1 })
}

/// Euler's totient φ(n).
pub fn euler_phi(n: u64) -> Result<u64> {
    let factors = factorize(n)?;
    Ok(factors.iter().fold(n, |acc, &(p, _)| acc / p * (p - 1)))
}

/// Binomial coefficient `n choose k`, zero when `k > n`.
///
/// Uses checked 128-bit arithmetic; every value reachable from words of at
/// most 64 symbols fits comfortably.
pub fn binomial(n: u64, k: u64) -> Result<u128> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) is divisible by (i + 1) at every step
        acc = acc
            .checked_mul((n - i) as u128)
            .ok_or(Error::Overflow("binomial"))?
            / (i as u128 + 1);
    }
    Ok(acc)
}
