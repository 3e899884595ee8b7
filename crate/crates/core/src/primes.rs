//! Sieve, primality and trial-division factorization for desk-scale inputs.

use serde::Serialize;

use crate::error::{Error, Result};

/// All primes `<= bound`, increasing.
pub fn primes_up_to(bound: u64) -> Vec<u64> {
    if bound < 2 {
        return Vec::new();
    }
    let n = usize::try_from(bound).expect("sieve bound exceeds address space");
    let mut composite = vec![false; n + 1];
    let mut primes = Vec::new();
    for i in 2..=n {
        if composite[i] {
            continue;
        }
        primes.push(i as u64);
        let mut j = i.saturating_mul(i);
        while j <= n {
            composite[j] = true;
            j += i;
        }
    }
    primes
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn require_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

/// `n` as a sorted list of `(prime, exponent)` pairs. `1` has no factors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Factorization {
    pub n: u64,
    pub factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn recompose(&self) -> u64 {
        self.factors.iter().map(|&(p, e)| p.pow(e)).product()
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }
}

pub fn factorize(n: u64) -> Result<Factorization> {
    if n == 0 {
        return Err(Error::TooSmall {
            what: "factorized integer",
            min: 1,
            got: 0,
        });
    }
    let mut rest = n;
    let mut factors = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= rest {
        let mut e = 0;
        while rest % d == 0 {
            rest /= d;
            e += 1;
        }
        if e > 0 {
            factors.push((d, e));
        }
        d += 1;
    }
    if rest > 1 {
        factors.push((rest, 1));
    }
    Ok(Factorization { n, factors })
}

/// Whether every prime factor of `n >= 1` is in `primes`.
pub(crate) fn is_smooth_over(mut n: u64, primes: &[u64]) -> bool {
    for &p in primes {
        if p < 2 {
            continue;
        }
        while n % p == 0 {
            n /= p;
        }
    }
    n == 1
}
