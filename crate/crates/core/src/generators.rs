//! Exact finite truncations of the sets the argument works with.
//!
//! Infinite sets are represented by explicit truncations, and each
//! generator records its truncation parameter in the set label.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::primes::{is_prime, is_smooth_over, require_prime};
use crate::rational::Rational;
use crate::sets::PointSet;

fn at_least(what: &'static str, min: u64, got: u64) -> Result<()> {
    if got < min {
        Err(Error::TooSmall { what, min, got })
    } else {
        Ok(())
    }
}

/// `{1/n : 1 <= n <= m}`.
pub fn reciprocal_integers(m: u64) -> Result<PointSet> {
    at_least("reciprocal truncation m", 1, m)?;
    let points = (1..=m)
        .rev()
        .map(|n| Rational::new(1, n).expect("n >= 1"))
        .collect();
    Ok(PointSet::from_sorted(points).with_label(format!("reciprocal:{m}")))
}

/// `{1/p^k : 0 <= k <= max_exp}` for a prime `p`.
pub fn prime_power_reciprocals(p: u64, max_exp: u32) -> Result<PointSet> {
    require_prime(p)?;
    let base = BigInt::from(p);
    let points = (0..=max_exp)
        .rev()
        .map(|k| Rational::new(1, base.pow(k)).expect("p^k >= 1"))
        .collect();
    Ok(PointSet::from_sorted(points).with_label(format!("primepow:{p}:{max_exp}")))
}

/// `{1/n : 1 <= n <= m, every prime factor of n is in primes}`.
pub fn smooth_reciprocals(primes: &[u64], m: u64) -> Result<PointSet> {
    at_least("prime list length", 1, primes.len() as u64)?;
    primes.iter().try_for_each(|&p| require_prime(p))?;
    at_least("smooth truncation m", 1, m)?;
    let points = (1..=m)
        .rev()
        .filter(|&n| is_smooth_over(n, primes))
        .map(|n| Rational::new(1, n).expect("n >= 1"))
        .collect();
    let list = primes
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",");
    Ok(PointSet::from_sorted(points).with_label(format!("smooth:{list}:{m}")))
}

/// Least integer `>= 2` with a prime factor outside `primes`, which is
/// the least prime missing from the list.
pub fn smallest_nonsmooth(primes: &[u64]) -> u64 {
    (2u64..)
        .find(|&n| is_prime(n) && !primes.contains(&n))
        .expect("infinitely many candidates")
}

/// Endpoints of the `depth`-th stage of the middle-thirds construction on
/// `[0, 1]`: `2 * 2^depth` points.
pub fn cantor_endpoints(depth: u32) -> PointSet {
    // left ends are k / 3^depth where k has only ternary digits 0 and 2
    let mut lefts = vec![BigInt::from(0)];
    for _ in 0..depth {
        lefts = lefts
            .iter()
            .map(|k| k * 3)
            .chain(lefts.iter().map(|k| k * 3 + 2))
            .collect();
    }
    lefts.sort();
    let scale = BigInt::from(3).pow(depth);
    let points = lefts
        .into_iter()
        .flat_map(|k| {
            let right = &k + 1;
            [
                Rational::new(k, scale.clone()).expect("3^d > 0"),
                Rational::new(right, scale.clone()).expect("3^d > 0"),
            ]
        })
        .collect();
    PointSet::from_sorted(points).with_label(format!("cantor:{depth}"))
}
