//! Box-dimension estimation and the analytic covering bounds.
//!
//! The upper box dimension is a limsup of `log N(F, δ) / −log δ` as
//! `δ → 0`. From finitely many scales we fit one least-squares slope of
//! `log N` against `log(1/δ)` over a geometric schedule. Counts are exact;
//! floating point enters only in the fit and in the two closed-form bounds.
//!
//! A finite truncation looks zero-dimensional below its smallest adjacent
//! gap, so every report carries a validity flag for that resolution.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::Serialize;

use crate::covering::{covering_number, require_small_scale};
use crate::error::{Error, Result};
use crate::primes::require_prime;
use crate::rational::Rational;
use crate::sets::{product_set, PointSet};

/// Minimum number of samples accepted by [`fit_slope`].
pub const MIN_FIT_SAMPLES: usize = 3;

/// Scales `delta0 * ratio^j` for `0 <= j < steps`, all inside `(0, 1/2)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScaleSchedule {
    delta0: Rational,
    ratio: Rational,
    steps: usize,
}

impl ScaleSchedule {
    pub fn new(delta0: Rational, ratio: Rational, steps: usize) -> Result<Self> {
        require_small_scale(&delta0).map_err(|_| {
            Error::InvalidSchedule(format!("first scale {delta0} must lie in (0, 1/2)"))
        })?;
        if !ratio.is_positive() || ratio >= Rational::one() {
            return Err(Error::InvalidSchedule(format!(
                "ratio {ratio} must lie in (0, 1)"
            )));
        }
        if steps == 0 {
            return Err(Error::InvalidSchedule("at least one step required".into()));
        }
        Ok(ScaleSchedule {
            delta0,
            ratio,
            steps,
        })
    }

    /// `3^-1, 3^-2, ..., 3^-steps`.
    pub fn pow3(steps: usize) -> Result<Self> {
        let third = Rational::new(1, 3)?;
        Self::new(third.clone(), third, steps)
    }

    /// The longest schedule from `delta0` by `ratio` whose smallest scale
    /// stays `>= floor`, capped at `max_steps`.
    pub fn down_to(
        delta0: Rational,
        ratio: Rational,
        floor: &Rational,
        max_steps: usize,
    ) -> Result<Self> {
        let probe = Self::new(delta0, ratio, 1)?;
        let mut steps = 0;
        let mut delta = probe.delta0.clone();
        while steps < max_steps && delta >= *floor {
            steps += 1;
            delta = &delta * &probe.ratio;
        }
        Self::new(probe.delta0, probe.ratio, steps)
    }

    pub fn delta0(&self) -> &Rational {
        &self.delta0
    }

    pub fn ratio(&self) -> &Rational {
        &self.ratio
    }

    pub fn steps(&self) -> usize {
        self.steps
    }

    pub fn scales(&self) -> Vec<Rational> {
        std::iter::successors(Some(self.delta0.clone()), |d| Some(d * &self.ratio))
            .take(self.steps)
            .collect()
    }

    pub fn smallest(&self) -> Rational {
        &self.delta0 * self.ratio.pow(self.steps as u32 - 1)
    }
}

impl std::fmt::Display for ScaleSchedule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "geo:{}:{}:{}", self.delta0, self.ratio, self.steps)
    }
}

/// Sampled `(δ, N(F, δ))` pairs, in decreasing `δ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CountCurve {
    pub samples: Vec<(Rational, usize)>,
    /// Smallest adjacent gap of the sampled set, if it has two points.
    pub resolution: Option<Rational>,
}

impl CountCurve {
    /// A curve from explicit samples, with no resolution attached.
    pub fn from_samples(samples: Vec<(Rational, usize)>) -> Self {
        CountCurve {
            samples,
            resolution: None,
        }
    }
}

/// Exact covering numbers of `f` at every scale of `schedule`.
/// Scales are evaluated in parallel; the result does not depend on it.
pub fn count_curve(f: &PointSet, schedule: &ScaleSchedule) -> Result<CountCurve> {
    if f.is_empty() {
        return Err(Error::EmptySet { op: "count_curve" });
    }
    let samples = schedule
        .scales()
        .into_par_iter()
        .map(|delta| covering_number(f, &delta).map(|n| (delta, n)))
        .collect::<Result<Vec<_>>>()?;
    Ok(CountCurve {
        samples,
        resolution: f.min_gap(),
    })
}

/// Least-squares fit of `ln N` against `ln(1/δ)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DimensionReport {
    pub slope: f64,
    pub intercept: f64,
    pub r_squared: f64,
    pub delta_max: Rational,
    pub delta_min: Rational,
    pub truncation_gap: Option<Rational>,
    pub valid: bool,
    pub samples: Vec<(Rational, usize)>,
}

pub fn fit_slope(curve: &CountCurve) -> Result<DimensionReport> {
    let samples = &curve.samples;
    if samples.len() < MIN_FIT_SAMPLES {
        return Err(Error::TooFewSamples {
            need: MIN_FIT_SAMPLES,
            got: samples.len(),
        });
    }
    if let Some((delta, _)) = samples.iter().find(|(_, n)| *n == 0) {
        return Err(Error::ZeroCount(delta.clone()));
    }
    let xs: Vec<f64> = samples.iter().map(|(d, _)| -d.ln()).collect();
    let ys: Vec<f64> = samples.iter().map(|(_, n)| (*n as f64).ln()).collect();
    let len = xs.len() as f64;
    let mean_x = xs.iter().sum::<f64>() / len;
    let mean_y = ys.iter().sum::<f64>() / len;
    let sxx: f64 = xs.iter().map(|x| (x - mean_x).powi(2)).sum();
    let sxy: f64 = xs
        .iter()
        .zip(&ys)
        .map(|(x, y)| (x - mean_x) * (y - mean_y))
        .sum();
    if sxx == 0.0 {
        return Err(Error::InvalidSchedule("all scales coincide".into()));
    }
    // equal counts are detected exactly; rounding in ln would leave a
    // spurious nonzero slope and an undefined r^2
    let flat = samples.iter().all(|(_, n)| *n == samples[0].1);
    let (slope, intercept, r_squared) = if flat {
        (0.0, ys[0], 1.0)
    } else {
        let slope = sxy / sxx;
        let intercept = mean_y - slope * mean_x;
        let ss_tot: f64 = ys.iter().map(|y| (y - mean_y).powi(2)).sum();
        let ss_res: f64 = xs
            .iter()
            .zip(&ys)
            .map(|(x, y)| (y - intercept - slope * x).powi(2))
            .sum();
        (slope, intercept, (1.0 - ss_res / ss_tot).clamp(0.0, 1.0))
    };

    let delta_max = samples.iter().map(|(d, _)| d).max().cloned().expect("nonempty");
    let delta_min = samples.iter().map(|(d, _)| d).min().cloned().expect("nonempty");
    let valid = curve.resolution.as_ref().map_or(true, |gap| delta_min >= *gap);
    Ok(DimensionReport {
        slope,
        intercept,
        r_squared,
        delta_max,
        delta_min,
        truncation_gap: curve.resolution.clone(),
        valid,
        samples: samples.clone(),
    })
}

/// [`count_curve`] followed by [`fit_slope`].
pub fn estimate_dimension(f: &PointSet, schedule: &ScaleSchedule) -> Result<DimensionReport> {
    fit_slope(&count_curve(f, schedule)?)
}

/// The first scheduled scale below the set's smallest adjacent gap, with
/// that gap.
pub fn window_violation(f: &PointSet, schedule: &ScaleSchedule) -> Option<(Rational, Rational)> {
    let gap = f.min_gap()?;
    schedule
        .scales()
        .into_iter()
        .find(|d| *d < gap)
        .map(|d| (d, gap))
}

/// The unique `k >= 2` with `1/(k(k+1)) <= δ < 1/((k-1)k)`.
///
/// These brackets partition `(0, 1/2)`, so `k` exists for every such `δ`.
pub fn k_of_delta(delta: &Rational) -> Result<u64> {
    require_small_scale(delta)?;
    let t = delta.recip().expect("positive");
    // k(k - 1) < t <= k(k + 1) puts k within one of sqrt(t)
    let mut k: BigInt = t.floor().sqrt();
    let below = |k: &BigInt| Rational::from(k * (k - 1i32));
    let above = |k: &BigInt| Rational::from(k * (k + 1i32));
    while above(&k) < t {
        k += 1;
    }
    while below(&k) >= t {
        k -= 1;
    }
    debug_assert!(k >= BigInt::from(2));
    k.to_u64().ok_or_else(|| Error::Overflow(k.to_string()))
}

/// Terms of the chain `N(1/ℕ, δ) >= k >= sqrt(k(k+1))/2 >= δ^(-1/2)/2`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ReciprocalBound {
    pub k: u64,
    pub sqrt_bound: f64,
}

pub fn reciprocal_lower_bound(delta: &Rational) -> Result<ReciprocalBound> {
    let k = k_of_delta(delta)?;
    Ok(ReciprocalBound {
        k,
        sqrt_bound: 0.5 * (-0.5 * delta.ln()).exp(),
    })
}

/// `2 + log(2/δ) / log p`, an upper bound on the covering number of the
/// prime-power reciprocals of `p` at scale `δ`.
pub fn prime_power_upper_bound(p: u64, delta: &Rational) -> Result<f64> {
    require_prime(p)?;
    require_small_scale(delta)?;
    Ok(2.0 + (std::f64::consts::LN_2 - delta.ln()) / (p as f64).ln())
}

/// Least `K` with `1/p^K <= δ/2`: truncating the prime-power reciprocals
/// at `K` keeps the dropped tail inside `[0, δ/2]`.
pub fn prime_power_tail_exponent(p: u64, delta: &Rational) -> Result<u32> {
    require_prime(p)?;
    if !delta.is_positive() {
        return Err(Error::NonPositiveDelta(delta.clone()));
    }
    let target = Rational::from(2i64) / delta;
    let base = Rational::from(p);
    let mut power = Rational::one();
    let mut k = 0u32;
    while power < target {
        power = &power * &base;
        k += 1;
    }
    Ok(k)
}

/// Estimated dimensions of `C`, `D` and `CD` on one schedule.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SubadditivityReport {
    pub dim_c: f64,
    pub dim_d: f64,
    pub dim_cd: f64,
    pub tolerance: f64,
    pub holds: bool,
}

/// Estimate-level check of `dim(CD) <= dim C + dim D + tolerance`.
///
/// Fails with [`Error::InvalidWindow`] if the schedule probes below the
/// resolution of any of the three sets. The exact count-level statement is
/// [`crate::covering::product_cover_bound_check`].
pub fn subadditivity_estimate_check(
    c: &PointSet,
    d: &PointSet,
    schedule: &ScaleSchedule,
    tolerance: f64,
) -> Result<SubadditivityReport> {
    let cd = product_set(c, d);
    for set in [c, d, &cd] {
        if let Some((scale, gap)) = window_violation(set, schedule) {
            return Err(Error::InvalidWindow {
                scale: Box::new(scale),
                gap: Box::new(gap),
            });
        }
    }
    let dim_c = estimate_dimension(c, schedule)?.slope;
    let dim_d = estimate_dimension(d, schedule)?.slope;
    let dim_cd = estimate_dimension(&cd, schedule)?.slope;
    Ok(SubadditivityReport {
        dim_c,
        dim_d,
        dim_cd,
        tolerance,
        holds: dim_cd <= dim_c + dim_d + tolerance,
    })
}
