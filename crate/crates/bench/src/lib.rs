//! Fixtures shared by the benchmarks.

use boxcover::{PointSet, Rational, ScaleSchedule};

pub fn reciprocals(m: u64) -> PointSet {
    boxcover::reciprocal_integers(m).expect("m >= 1")
}

pub fn prime_power(p: u64, k: u32) -> PointSet {
    boxcover::prime_power_reciprocals(p, k).expect("p prime")
}

pub fn delta(numer: i64, denom: i64) -> Rational {
    Rational::new(numer, denom).expect("nonzero denominator")
}

/// `geo:1/4:1/2:steps`
pub fn halving(steps: usize) -> ScaleSchedule {
    ScaleSchedule::new(delta(1, 4), delta(1, 2), steps).expect("valid schedule")
}
