//! Verification reports: the product covering bound on random pairs, the
//! analytic bounds for `1/ℕ` and `A(p)`, and the finite-scale gap between
//! the dimensions of `1/ℕ` and of a smooth-number product set.

use boxcover::covering::product_bound_with;
use boxcover::dimension::{prime_power_tail_exponent, window_violation, MIN_FIT_SAMPLES};
use boxcover::{
    bounding_radius, covering_number, estimate_dimension, factorize,
    prime_power_reciprocals, prime_power_upper_bound, product_set, reciprocal_integers,
    reciprocal_lower_bound, smallest_nonsmooth, smooth_reciprocals, Factorization, PointSet,
    ProductBoundReport, Rational, ScaleSchedule,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::commands::MAX_DEFAULT_STEPS;
use crate::error::{CliError, Result};
use crate::report::{sig6, FitSummary, VerifyReport};
use crate::specs::ScaleSpec;

/// Largest truncation searched when suggesting a minimum `--max`.
pub const MAX_TRUNCATION: u64 = 10_000_000;

pub const DEFAULT_GAP_THRESHOLD: f64 = 0.25;

fn half() -> Rational {
    Rational::new(1, 2).expect("nonzero")
}

fn quarter() -> Rational {
    Rational::new(1, 4).expect("nonzero")
}

// ---------------------------------------------------------------------------
// product bound on random pairs

/// Shape of the random sets: sizes `1..=max_size`, values `p/q` with
/// `1 <= q <= max_denominator` and `|p/q| <= 2`.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct PairGenerator {
    pub max_size: usize,
    pub max_denominator: i64,
    pub max_abs: i64,
}

impl Default for PairGenerator {
    fn default() -> Self {
        PairGenerator {
            max_size: 30,
            max_denominator: 1 << 10,
            max_abs: 2,
        }
    }
}

impl PairGenerator {
    fn sample_set(&self, rng: &mut impl Rng) -> PointSet {
        let size = rng.gen_range(1..=self.max_size);
        (0..size)
            .map(|_| {
                let q = rng.gen_range(1..=self.max_denominator);
                let p = rng.gen_range(-self.max_abs * q..=self.max_abs * q);
                Rational::new(p, q).expect("q >= 1")
            })
            .collect()
    }

    /// `trials` pairs drawn sequentially from one seeded stream.
    pub fn pairs(&self, trials: usize, seed: u64) -> Vec<(PointSet, PointSet)> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..trials)
            .map(|_| {
                let c = self.sample_set(&mut rng);
                let d = self.sample_set(&mut rng);
                (c, d)
            })
            .collect()
    }
}

/// The product bound for one pair at every scale of `schedule`.
pub fn product_bound_pair(
    c: &PointSet,
    d: &PointSet,
    schedule: &ScaleSchedule,
) -> Result<Vec<ProductBoundReport>> {
    let radius = bounding_radius(c)?.max(bounding_radius(d)?);
    let cd = product_set(c, d);
    schedule
        .scales()
        .iter()
        .map(|delta| Ok(product_bound_with(c, d, &cd, delta, radius.clone())?))
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct Violation {
    pub trial: usize,
    pub c: Vec<Rational>,
    pub d: Vec<Rational>,
    pub check: ProductBoundReport,
}

#[derive(Debug, Clone, Serialize)]
pub struct Tightest {
    pub trial: usize,
    pub slack: usize,
    pub check: ProductBoundReport,
}

#[derive(Debug, Clone, Serialize)]
pub struct Lemma2Details {
    pub trials: usize,
    pub seed: u64,
    pub schedule: String,
    pub generator: PairGenerator,
    pub checks: usize,
    pub max_radius: Rational,
    pub tightest: Option<Tightest>,
    pub violations: Vec<Violation>,
}

pub fn default_lemma2_schedule() -> ScaleSchedule {
    ScaleSchedule::new(quarter(), half(), 12).expect("valid")
}

pub fn lemma2(
    trials: usize,
    seed: u64,
    scales: Option<&ScaleSpec>,
) -> Result<VerifyReport<Lemma2Details>> {
    if trials == 0 {
        return Err(CliError::Input("--trials must be at least 1".into()));
    }
    let scales = scales
        .cloned()
        .unwrap_or_else(|| default_lemma2_schedule().into());
    let generator = PairGenerator::default();
    let pairs = generator.pairs(trials, seed);
    let results = pairs
        .par_iter()
        .map(|(c, d)| product_bound_pair(c, d, &scales.schedule))
        .collect::<Result<Vec<_>>>()?;

    let mut violations = Vec::new();
    let mut tightest: Option<Tightest> = None;
    let mut checks = 0;
    let mut max_radius = Rational::one();
    for (trial, ((c, d), reports)) in pairs.iter().zip(results).enumerate() {
        for check in reports {
            checks += 1;
            max_radius = max_radius.max(check.radius.clone());
            if !check.holds {
                violations.push(Violation {
                    trial,
                    c: c.points().to_vec(),
                    d: d.points().to_vec(),
                    check,
                });
                continue;
            }
            let slack = check.rhs() - check.lhs;
            if tightest.as_ref().map_or(true, |t| slack < t.slack) {
                tightest = Some(Tightest { trial, slack, check });
            }
        }
    }
    Ok(VerifyReport {
        check_name: "product-cover-bound",
        passed: checks > 0 && violations.is_empty(),
        details: Lemma2Details {
            trials,
            seed,
            schedule: scales.text,
            generator,
            checks,
            max_radius,
            tightest,
            violations,
        },
    })
}

// ---------------------------------------------------------------------------
// analytic bounds

#[derive(Debug, Clone, Serialize)]
pub struct ReciprocalRow {
    pub delta: Rational,
    pub k: u64,
    pub sqrt_bound: f64,
    pub count: usize,
    pub ok: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct PrimePowerRow {
    pub delta: Rational,
    pub count: usize,
    pub bound: f64,
    pub ok: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct PrimePowerBlock {
    pub p: u64,
    pub set: String,
    /// scales failing the tail condition `1/p^K <= δ/2`
    pub skipped: usize,
    pub rows: Vec<PrimePowerRow>,
}

#[derive(Debug, Clone, Serialize)]
pub struct BoundsDetails {
    pub max: u64,
    pub schedule: String,
    pub reciprocal_set: String,
    /// scales with `k > max`, where the truncation cannot witness `k`
    pub reciprocal_skipped: usize,
    pub reciprocal: Vec<ReciprocalRow>,
    pub prime_powers: Vec<PrimePowerBlock>,
    pub checks: usize,
    pub violations: usize,
}

pub fn default_bounds_schedule() -> ScaleSchedule {
    ScaleSchedule::new(quarter(), half(), 30).expect("valid")
}

pub fn bounds(
    max: u64,
    primes: &[u64],
    exponent: u32,
    scales: Option<&ScaleSpec>,
) -> Result<VerifyReport<BoundsDetails>> {
    if max < 2 {
        return Err(CliError::Input(format!("--max must be at least 2, got {max}")));
    }
    let scales = scales
        .cloned()
        .unwrap_or_else(|| default_bounds_schedule().into());
    let deltas = scales.schedule.scales();

    let recip = reciprocal_integers(max)?;
    let mut reciprocal = Vec::new();
    let mut reciprocal_skipped = 0;
    for delta in &deltas {
        let bound = reciprocal_lower_bound(delta)?;
        if bound.k > max {
            reciprocal_skipped += 1;
            continue;
        }
        let count = covering_number(&recip, delta)?;
        reciprocal.push(ReciprocalRow {
            delta: delta.clone(),
            k: bound.k,
            sqrt_bound: sig6(bound.sqrt_bound),
            count,
            ok: count as u64 >= bound.k && bound.k as f64 >= bound.sqrt_bound,
        });
    }

    let mut prime_powers = Vec::new();
    for &p in primes {
        let set = prime_power_reciprocals(p, exponent)?;
        let tail = set.min().expect("nonempty").clone();
        let mut rows = Vec::new();
        let mut skipped = 0;
        for delta in &deltas {
            if tail > delta * &half() {
                skipped += 1;
                continue;
            }
            let count = covering_number(&set, delta)?;
            let bound = prime_power_upper_bound(p, delta)?;
            rows.push(PrimePowerRow {
                delta: delta.clone(),
                count,
                bound: sig6(bound),
                ok: count as f64 <= bound,
            });
        }
        prime_powers.push(PrimePowerBlock {
            p,
            set: set.label().unwrap_or_default().to_string(),
            skipped,
            rows,
        });
    }

    let oks = reciprocal
        .iter()
        .map(|r| r.ok)
        .chain(prime_powers.iter().flat_map(|b| b.rows.iter().map(|r| r.ok)));
    let (checks, violations) = oks.fold((0, 0), |(n, bad), ok| (n + 1, bad + usize::from(!ok)));
    Ok(VerifyReport {
        check_name: "analytic-covering-bounds",
        passed: checks > 0 && violations == 0,
        details: BoundsDetails {
            max,
            schedule: scales.text,
            reciprocal_set: recip.label().unwrap_or_default().to_string(),
            reciprocal_skipped,
            reciprocal,
            prime_powers,
            checks,
            violations,
        },
    })
}

// ---------------------------------------------------------------------------
// dimension gap under a finite prime list

#[derive(Debug, Clone, Serialize)]
pub struct SetFit {
    pub set: String,
    pub size: usize,
    #[serde(flatten)]
    pub fit: FitSummary,
}

#[derive(Debug, Clone, Serialize)]
pub struct PrimePowerFit {
    pub p: u64,
    pub set: String,
    pub slope: f64,
    pub r2: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct EuclidDetails {
    pub primes: Vec<u64>,
    pub max: u64,
    pub schedule: String,
    /// larger of the two sets' smallest adjacent gaps
    pub shared_resolution: Option<Rational>,
    pub reciprocal: SetFit,
    pub smooth: SetFit,
    pub prime_powers: Vec<PrimePowerFit>,
    pub slope_gap: f64,
    pub threshold: f64,
    pub threshold_note: &'static str,
    pub witness: u64,
    pub witness_factorization: Factorization,
}

fn shared_resolution(a: &PointSet, b: &PointSet) -> Option<Rational> {
    match (a.min_gap(), b.min_gap()) {
        (Some(x), Some(y)) => Some(x.max(y)),
        (x, y) => x.or(y),
    }
}

fn euclid_sets(primes: &[u64], max: u64) -> Result<(PointSet, PointSet)> {
    Ok((reciprocal_integers(max)?, smooth_reciprocals(primes, max)?))
}

/// The schedule used when `--scales` is absent: `geo:1/4:1/2:s` with the
/// largest `s` keeping every scale at or above the shared resolution.
/// `None` when that leaves fewer than the minimum number of fit samples.
fn euclid_default_schedule(resolution: Option<&Rational>) -> Option<ScaleSchedule> {
    let floor = resolution.cloned().unwrap_or_else(Rational::zero);
    ScaleSchedule::down_to(quarter(), half(), &floor, MAX_DEFAULT_STEPS)
        .ok()
        .filter(|s| s.steps() >= MIN_FIT_SAMPLES)
}

/// Smallest adjacent gap of `{1/n : n <= max}`, which is `1/(max(max-1))`.
fn reciprocal_gap(max: u64) -> Option<Rational> {
    (max >= 2).then(|| Rational::one() / Rational::from(max * (max - 1)))
}

fn euclid_window_ok(primes: &[u64], max: u64, given: Option<&ScaleSchedule>) -> Result<bool> {
    let smooth = smooth_reciprocals(primes, max)?;
    let resolution = match (reciprocal_gap(max), smooth.min_gap()) {
        (Some(x), Some(y)) => Some(x.max(y)),
        (x, y) => x.or(y),
    };
    Ok(match given {
        Some(s) => resolution.map_or(true, |gap| s.smallest() >= gap),
        None => euclid_default_schedule(resolution.as_ref()).is_some(),
    })
}

/// Least truncation `max` for which the window is wide enough, searched by
/// doubling and then bisection. Resolutions only shrink as `max` grows.
pub fn required_max(primes: &[u64], from: u64, given: Option<&ScaleSchedule>) -> Result<Option<u64>> {
    let mut lo = from;
    let mut hi = from.max(1);
    loop {
        if euclid_window_ok(primes, hi, given)? {
            break;
        }
        if hi >= MAX_TRUNCATION {
            return Ok(None);
        }
        lo = hi;
        hi = (hi * 2).min(MAX_TRUNCATION);
    }
    // invariant: lo fails (or equals from), hi succeeds
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if euclid_window_ok(primes, mid, given)? {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(Some(hi))
}

pub fn euclid(
    primes: &[u64],
    max: u64,
    scales: Option<&ScaleSpec>,
    threshold: f64,
    force: bool,
) -> Result<VerifyReport<EuclidDetails>> {
    if primes.is_empty() {
        return Err(CliError::Input("--primes must name at least one prime".into()));
    }
    let (recip, smooth) = euclid_sets(primes, max)?;
    let resolution = shared_resolution(&recip, &smooth);

    let window_error = |given: Option<&ScaleSchedule>, what: String| -> Result<CliError> {
        let need = required_max(primes, max, given)?;
        let hint = match need {
            Some(m) => format!("; --max {m} or larger is required"),
            None => format!("; no --max up to {MAX_TRUNCATION} suffices"),
        };
        Ok(CliError::Window {
            message: format!("{what}{hint}"),
            required_max: need,
        })
    };

    let scales: ScaleSpec = match scales {
        Some(s) => {
            let narrow = [&recip, &smooth]
                .into_iter()
                .find_map(|set| window_violation(set, &s.schedule));
            if let (Some((scale, gap)), false) = (narrow, force) {
                return Err(window_error(
                    Some(&s.schedule),
                    format!("scale {scale} of {} is below the shared resolution {gap}", s.text),
                )?);
            }
            s.clone()
        }
        None => match euclid_default_schedule(resolution.as_ref()) {
            Some(schedule) => schedule.into(),
            None => {
                return Err(window_error(
                    None,
                    format!(
                        "fewer than {MIN_FIT_SAMPLES} scales of geo:1/4:1/2 lie above the \
                         shared resolution at --max {max}"
                    ),
                )?)
            }
        },
    };
    let schedule = &scales.schedule;

    let recip_fit = estimate_dimension(&recip, schedule)?;
    let smooth_fit = estimate_dimension(&smooth, schedule)?;

    let smallest = schedule.smallest();
    let prime_powers = primes
        .iter()
        .map(|&p| {
            let k = prime_power_tail_exponent(p, &smallest)?;
            let set = prime_power_reciprocals(p, k)?;
            let fit = estimate_dimension(&set, schedule)?;
            Ok(PrimePowerFit {
                p,
                set: set.label().unwrap_or_default().to_string(),
                slope: sig6(fit.slope),
                r2: sig6(fit.r_squared),
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let slope_gap = recip_fit.slope - smooth_fit.slope;
    let witness = smallest_nonsmooth(primes);
    Ok(VerifyReport {
        check_name: "reciprocal-vs-smooth-dimension-gap",
        passed: slope_gap >= threshold,
        details: EuclidDetails {
            primes: primes.to_vec(),
            max,
            schedule: scales.text.clone(),
            shared_resolution: resolution,
            reciprocal: SetFit {
                set: recip.label().unwrap_or_default().to_string(),
                size: recip.len(),
                fit: FitSummary::from(&recip_fit),
            },
            smooth: SetFit {
                set: smooth.label().unwrap_or_default().to_string(),
                size: smooth.len(),
                fit: FitSummary::from(&smooth_fit),
            },
            prime_powers,
            slope_gap: sig6(slope_gap),
            threshold,
            threshold_note: "passed iff slope_gap >= threshold; a finite-scale criterion \
                             chosen by this tool, not a theorem",
            witness,
            witness_factorization: factorize(witness)?,
        },
    })
}
