//! Finite point sets on the line, interval covers, and product sets.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::Rational;

/// A finite, strictly increasing set of rationals.
///
/// The optional label records where the set came from (generator and
/// truncation parameters), so reports can state exactly what was measured.
/// Equality ignores the label.
#[derive(Debug, Clone, Default, Serialize)]
pub struct PointSet {
    points: Vec<Rational>,
    #[serde(skip_serializing_if = "Option::is_none")]
    label: Option<String>,
}

impl PointSet {
    /// Caller guarantees `points` is strictly increasing.
    pub(crate) fn from_sorted(points: Vec<Rational>) -> Self {
        debug_assert!(points.windows(2).all(|w| w[0] < w[1]));
        PointSet {
            points,
            label: None,
        }
    }

    pub fn empty() -> Self {
        PointSet::default()
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn points(&self) -> &[Rational] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn min(&self) -> Option<&Rational> {
        self.points.first()
    }

    pub fn max(&self) -> Option<&Rational> {
        self.points.last()
    }

    pub fn contains(&self, x: &Rational) -> bool {
        self.points.binary_search(x).is_ok()
    }

    pub fn is_subset(&self, other: &PointSet) -> bool {
        self.points.iter().all(|x| other.contains(x))
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Rational> {
        self.points.iter()
    }

    /// Smallest distance between adjacent points; `None` with fewer than two.
    pub fn min_gap(&self) -> Option<Rational> {
        self.points.windows(2).map(|w| &w[1] - &w[0]).min()
    }

    /// Keeps the points satisfying `keep`, preserving the label.
    pub fn filter(&self, mut keep: impl FnMut(&Rational) -> bool) -> PointSet {
        PointSet {
            points: self.points.iter().filter(|x| keep(x)).cloned().collect(),
            label: self.label.clone(),
        }
    }
}

impl PartialEq for PointSet {
    fn eq(&self, other: &Self) -> bool {
        self.points == other.points
    }
}

impl Eq for PointSet {}

impl<'a> IntoIterator for &'a PointSet {
    type Item = &'a Rational;
    type IntoIter = std::slice::Iter<'a, Rational>;

    fn into_iter(self) -> Self::IntoIter {
        self.points.iter()
    }
}

impl FromIterator<Rational> for PointSet {
    fn from_iter<I: IntoIterator<Item = Rational>>(iter: I) -> Self {
        make_set(iter)
    }
}

/// Sorts and deduplicates `values` into a [`PointSet`].
pub fn make_set(values: impl IntoIterator<Item = Rational>) -> PointSet {
    let mut points: Vec<Rational> = values.into_iter().collect();
    points.sort_unstable();
    points.dedup();
    PointSet::from_sorted(points)
}

/// `CD = {cd : c ∈ C, d ∈ D}`, computed exactly.
pub fn product_set(c: &PointSet, d: &PointSet) -> PointSet {
    let products = c
        .iter()
        .flat_map(|x| d.iter().map(move |y| x * y))
        .collect::<Vec<_>>();
    let set = make_set(products);
    match (c.label(), d.label()) {
        (Some(a), Some(b)) => set.with_label(format!("({a})*({b})")),
        _ => set,
    }
}

/// Left fold of [`product_set`] over `sets`.
pub fn product_chain(sets: &[PointSet]) -> Result<PointSet> {
    let (first, rest) = sets.split_first().ok_or(Error::MissingOperands)?;
    Ok(rest
        .iter()
        .fold(first.clone(), |acc, next| product_set(&acc, next)))
}

/// Smallest `R ≥ 1` with `C ⊆ [−R, R]`: `max(|min C|, |max C|, 1)`.
pub fn bounding_radius(c: &PointSet) -> Result<Rational> {
    let (lo, hi) = c
        .min()
        .zip(c.max())
        .ok_or(Error::EmptySet { op: "bounding_radius" })?;
    Ok(lo.abs().max(hi.abs()).max(Rational::one()))
}

/// `max C − min C`.
pub fn diameter(c: &PointSet) -> Result<Rational> {
    let (lo, hi) = c
        .min()
        .zip(c.max())
        .ok_or(Error::EmptySet { op: "diameter" })?;
    Ok(hi - lo)
}

/// A δ-cover by closed intervals `[left, left + delta]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntervalCover {
    delta: Rational,
    lefts: Vec<Rational>,
}

impl IntervalCover {
    /// `lefts` must be sorted and `delta` positive.
    pub fn new(delta: Rational, mut lefts: Vec<Rational>) -> Result<Self> {
        if !delta.is_positive() {
            return Err(Error::NonPositiveDelta(delta));
        }
        lefts.sort_unstable();
        Ok(IntervalCover { delta, lefts })
    }

    pub fn delta(&self) -> &Rational {
        &self.delta
    }

    pub fn lefts(&self) -> &[Rational] {
        &self.lefts
    }

    pub fn len(&self) -> usize {
        self.lefts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lefts.is_empty()
    }

    /// `(left, right)` endpoint pairs.
    pub fn intervals(&self) -> impl Iterator<Item = (Rational, Rational)> + '_ {
        self.lefts.iter().map(|a| (a.clone(), a + &self.delta))
    }

    pub fn contains_point(&self, x: &Rational) -> bool {
        // intervals share a length, so the candidate is the last left <= x
        let idx = self.lefts.partition_point(|a| a <= x);
        idx > 0 && x <= &(&self.lefts[idx - 1] + &self.delta)
    }

    /// Exact containment check of every point of `f`.
    pub fn covers(&self, f: &PointSet) -> bool {
        f.iter().all(|x| self.contains_point(x))
    }
}
