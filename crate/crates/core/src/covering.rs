//! Minimal δ-covers of finite point sets on the line.
//!
//! Covers use closed intervals `[a, a + δ]`. On the line, any set of
//! diameter at most δ fits inside such an interval, so the minimum over
//! interval covers is the covering number `N(F, δ)`.
//!
//! The greedy cover anchors each interval's left endpoint at the smallest
//! point not yet covered. That choice is optimal in one dimension and is
//! fully deterministic, so emitted covers are reproducible.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::sets::{bounding_radius, product_set, IntervalCover, PointSet};

/// Largest input accepted by [`brute_force_covering_number`].
pub const ORACLE_LIMIT: usize = 15;

fn require_positive(delta: &Rational) -> Result<()> {
    if delta.is_positive() {
        Ok(())
    } else {
        Err(Error::NonPositiveDelta(delta.clone()))
    }
}

/// Checks `0 < delta < 1/2`.
pub(crate) fn require_small_scale(delta: &Rational) -> Result<()> {
    let half = Rational::new(1, 2)?;
    if delta.is_positive() && *delta < half {
        Ok(())
    } else {
        Err(Error::DeltaOutOfRange(delta.clone()))
    }
}

/// Indices of the greedy anchors. Each step skips every point inside the
/// current interval with a binary search, so the cost is proportional to
/// the number of intervals rather than the number of points.
fn greedy_anchors<'a>(
    points: &'a [Rational],
    delta: &Rational,
) -> impl Iterator<Item = usize> + 'a {
    let delta = delta.clone();
    let mut next = 0;
    std::iter::from_fn(move || {
        if next >= points.len() {
            return None;
        }
        let anchor = next;
        let end = &points[anchor] + &delta;
        next += points[anchor..].partition_point(|x| *x <= end);
        Some(anchor)
    })
}

/// A minimum-cardinality δ-cover of `f`.
pub fn min_cover(f: &PointSet, delta: &Rational) -> Result<IntervalCover> {
    require_positive(delta)?;
    let points = f.points();
    let lefts = greedy_anchors(points, delta)
        .map(|i| points[i].clone())
        .collect();
    IntervalCover::new(delta.clone(), lefts)
}

/// `N(F, δ)`; zero for the empty set.
pub fn covering_number(f: &PointSet, delta: &Rational) -> Result<usize> {
    require_positive(delta)?;
    Ok(greedy_anchors(f.points(), delta).count())
}

/// Exhaustive covering number over all covers whose left endpoints sit on
/// points of `f`.
///
/// That search space is complete: sliding any interval of an optimal
/// cover right until its left end meets the smallest point it contains
/// keeps every point covered. Used as an oracle for [`covering_number`].
pub fn brute_force_covering_number(f: &PointSet, delta: &Rational) -> Result<usize> {
    require_positive(delta)?;
    let n = f.len();
    if n > ORACLE_LIMIT {
        return Err(Error::OracleLimit {
            size: n,
            limit: ORACLE_LIMIT,
        });
    }
    let points = f.points();
    // reach[i]: bitmask of points inside [points[i], points[i] + delta]
    let reach: Vec<u32> = points
        .iter()
        .map(|a| {
            let end = a + delta;
            points
                .iter()
                .enumerate()
                .filter(|(_, x)| a <= *x && **x <= end)
                .fold(0u32, |m, (j, _)| m | (1 << j))
        })
        .collect();
    let full: u32 = if n == 0 { 0 } else { (1 << n) - 1 };
    let best = (0u32..1 << n)
        .filter(|choice| {
            let covered = (0..n)
                .filter(|i| choice & (1 << i) != 0)
                .fold(0u32, |m, i| m | reach[i]);
            covered == full
        })
        .map(u32::count_ones)
        .min()
        .unwrap_or(0);
    Ok(best as usize)
}

/// Largest subset of `f` whose points are pairwise more than `delta` apart.
///
/// No set of diameter at most δ can hold two such points, so this never
/// exceeds [`covering_number`].
pub fn packing_lower_bound(f: &PointSet, delta: &Rational) -> Result<usize> {
    require_positive(delta)?;
    let mut last: Option<&Rational> = None;
    let mut count = 0;
    for x in f {
        if last.map_or(true, |prev| &(x - prev) > delta) {
            count += 1;
            last = Some(x);
        }
    }
    Ok(count)
}

/// Both sides of `N(CD, δ) ≤ N(C, δ/2R) · N(D, δ/2R)` for one scale.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProductBoundReport {
    pub delta: Rational,
    pub radius: Rational,
    pub lhs: usize,
    pub rhs_c: usize,
    pub rhs_d: usize,
    pub holds: bool,
}

impl ProductBoundReport {
    pub fn rhs(&self) -> usize {
        self.rhs_c * self.rhs_d
    }
}

/// Evaluates the count-level product bound exactly, with
/// `R = max(bounding_radius(C), bounding_radius(D))`.
///
/// Requires `0 < delta < 1/2` and both sets nonempty.
pub fn product_cover_bound_check(
    c: &PointSet,
    d: &PointSet,
    delta: &Rational,
) -> Result<ProductBoundReport> {
    require_small_scale(delta)?;
    let radius = bounding_radius(c)?.max(bounding_radius(d)?);
    let product = product_set(c, d);
    product_bound_with(c, d, &product, delta, radius)
}

/// Same as [`product_cover_bound_check`] with `CD` and `R` precomputed,
/// for running one pair across many scales.
pub fn product_bound_with(
    c: &PointSet,
    d: &PointSet,
    product: &PointSet,
    delta: &Rational,
    radius: Rational,
) -> Result<ProductBoundReport> {
    require_small_scale(delta)?;
    let fine = delta / (&radius * Rational::from(2i64));
    let lhs = covering_number(product, delta)?;
    let rhs_c = covering_number(c, &fine)?;
    let rhs_d = covering_number(d, &fine)?;
    Ok(ProductBoundReport {
        delta: delta.clone(),
        radius,
        lhs,
        rhs_c,
        rhs_d,
        holds: lhs <= rhs_c * rhs_d,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sets::make_set;

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn set(vals: &[&str]) -> PointSet {
        make_set(vals.iter().map(|s| r(s)))
    }

    fn recip(m: i64) -> PointSet {
        make_set((1..=m).map(|n| Rational::new(1, n).unwrap()))
    }

    #[test]
    fn min_cover_examples() {
        let f = set(&["1/3", "1/2", "1"]);
        let cover = min_cover(&f, &r("1/6")).unwrap();
        let got: Vec<_> = cover.intervals().collect();
        assert_eq!(got, [(r("1/3"), r("1/2")), (r("1"), r("7/6"))]);
        assert!(cover.covers(&f));

        assert_eq!(min_cover(&set(&["0"]), &r("1/1000")).unwrap().len(), 1);

        let six = recip(6);
        let cover = min_cover(&six, &r("1/6")).unwrap();
        assert_eq!(cover.len(), 3);
        assert_eq!(cover.lefts(), &[r("1/6"), r("1/2"), r("1")]);
    }

    #[test]
    fn covering_number_examples() {
        assert_eq!(covering_number(&set(&["0", "1"]), &r("1")).unwrap(), 1);
        assert_eq!(covering_number(&set(&["0", "1"]), &r("1/2")).unwrap(), 2);
        assert_eq!(covering_number(&recip(6), &r("1/6")).unwrap(), 3);
        assert_eq!(covering_number(&PointSet::empty(), &r("1")).unwrap(), 0);
    }

    #[test]
    fn rejects_bad_delta() {
        let f = set(&["0"]);
        assert!(matches!(
            min_cover(&f, &r("0")),
            Err(Error::NonPositiveDelta(_))
        ));
        assert!(covering_number(&f, &r("-1/2")).is_err());
        assert!(packing_lower_bound(&f, &r("0")).is_err());
        assert!(brute_force_covering_number(&f, &r("0")).is_err());
    }

    #[test]
    fn brute_force_examples() {
        assert_eq!(
            brute_force_covering_number(&set(&["1/3", "1/2", "1"]), &r("1/6")).unwrap(),
            2
        );
        assert_eq!(
            brute_force_covering_number(&set(&["0"]), &r("1/100")).unwrap(),
            1
        );
        assert_eq!(brute_force_covering_number(&recip(6), &r("1/6")).unwrap(), 3);
        assert_eq!(
            brute_force_covering_number(&PointSet::empty(), &r("1")).unwrap(),
            0
        );
        assert!(matches!(
            brute_force_covering_number(&recip(16), &r("1/6")),
            Err(Error::OracleLimit { size: 16, limit: 15 })
        ));
    }

    #[test]
    fn packing_examples() {
        assert_eq!(
            packing_lower_bound(&set(&["1/3", "1/2", "1"]), &r("1/6")).unwrap(),
            2
        );
        // 1/(k(k-1)) = 1/12 for k = 4, and 1/20 is below it
        assert_eq!(packing_lower_bound(&recip(4), &r("1/20")).unwrap(), 4);
        assert_eq!(packing_lower_bound(&set(&["5"]), &r("9")).unwrap(), 1);
    }

    #[test]
    fn product_bound_examples() {
        let c = set(&["1/2", "1"]);
        assert!(matches!(
            product_cover_bound_check(&c, &c, &r("1/2")),
            Err(Error::DeltaOutOfRange(_))
        ));
        let rep = product_cover_bound_check(&c, &c, &r("1/3")).unwrap();
        assert_eq!(rep.radius, r("1"));
        assert_eq!((rep.lhs, rep.rhs_c, rep.rhs_d), (2, 2, 2));
        assert!(rep.holds);

        let d = recip(9);
        let rep = product_cover_bound_check(&set(&["1"]), &d, &r("1/7")).unwrap();
        assert_eq!(rep.lhs, covering_number(&d, &r("1/7")).unwrap());
        assert!(rep.holds);

        assert!(matches!(
            product_cover_bound_check(&PointSet::empty(), &d, &r("1/7")),
            Err(Error::EmptySet { .. })
        ));
    }
}
