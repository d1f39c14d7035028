use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::lattice::{origin_in_hull_of, ExponentSet, GuidingForm, LatticePoint, QuadExt};

/// An unordered pair `{i, j}` of positions in an [`ExponentSet`], stored with `i < j`.
///
/// Positions are 0-based; `Display` prints them 1-based as `i,j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChartPair {
    pub i: usize,
    pub j: usize,
}

impl ChartPair {
    pub fn new(a: usize, b: usize) -> Self {
        assert_ne!(a, b, "a chart pair needs two distinct points");
        ChartPair {
            i: a.min(b),
            j: a.max(b),
        }
    }

    /// The two points of `xs` this pair refers to.
    pub fn points<'a>(&self, xs: &'a ExponentSet) -> (&'a LatticePoint, &'a LatticePoint) {
        (&xs.points()[self.i], &xs.points()[self.j])
    }
}

impl fmt::Display for ChartPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.i + 1, self.j + 1)
    }
}

/// All pairs with non-zero determinant, in lexicographic `(i, j)` order.
pub fn pairs_s(xs: &ExponentSet) -> Result<Vec<ChartPair>> {
    let pts = xs.points();
    let pairs: Vec<ChartPair> = (0..pts.len())
        .flat_map(|i| (i + 1..pts.len()).map(move |j| ChartPair { i, j }))
        .filter(|p| !pts[p.i].cross(&pts[p.j]).is_zero())
        .collect();
    if pairs.is_empty() {
        return Err(Error::Collinear);
    }
    Ok(pairs)
}

/// `A_i ∪ A_j ∪ {γ_i, γ_j}` as a lazy sequence, possibly with repeats.
fn chart_points<'a>(
    xs: &'a ExponentSet,
    pair: ChartPair,
) -> impl Iterator<Item = LatticePoint> + 'a {
    let pts = xs.points();
    let (gi, gj) = (&pts[pair.i], &pts[pair.j]);
    let others = pts
        .iter()
        .enumerate()
        .filter(move |&(k, _)| k != pair.i && k != pair.j);
    let from_i = others
        .clone()
        .filter(move |(_, gk)| !gk.cross(gj).is_zero())
        .map(move |(_, gk)| gk - gi);
    let from_j = others
        .filter(move |(_, gk)| !gk.cross(gi).is_zero())
        .map(move |(_, gk)| gk - gj);
    [gi.clone(), gj.clone()]
        .into_iter()
        .chain(from_i)
        .chain(from_j)
}

/// The chart `ξ_{i,j}` for a pair of `S`; fails with `HullViolation` when the
/// origin lies in its convex hull, i.e. when the pair is not in `S′`.
pub fn chart(xs: &ExponentSet, pair: ChartPair) -> Result<ExponentSet> {
    let (gi, gj) = pair.points(xs);
    if gi.cross(gj).is_zero() {
        return Err(Error::Collinear);
    }
    if origin_in_hull_of(chart_points(xs, pair)) {
        return Err(Error::HullViolation {
            i: pair.i,
            j: pair.j,
        });
    }
    // differences of distinct points and the two non-zero chosen points: never zero
    ExponentSet::new(chart_points(xs, pair))
}

/// The pairs of `S′`: those whose chart avoids the origin in its hull.
pub fn valid_pairs(xs: &ExponentSet) -> Vec<ChartPair> {
    match pairs_s(xs) {
        Ok(pairs) => pairs
            .into_iter()
            .filter(|&p| chart(xs, p).is_ok())
            .collect(),
        Err(_) => Vec::new(),
    }
}

/// L-values of every point; fails on the first negative one.
pub fn l_values(xs: &ExponentSet, l: &GuidingForm) -> Result<Vec<QuadExt>> {
    xs.iter()
        .map(|p| {
            let v = l.eval(p);
            if v.is_negative() {
                Err(Error::NegativeValue(p.clone()))
            } else {
                Ok(v)
            }
        })
        .collect()
}

/// The pairs of `S′` chosen by `L`: one point of minimal L-value, the other of
/// minimal L-value among the points not collinear with it.
pub fn l_choices(xs: &ExponentSet, l: &GuidingForm) -> Result<Vec<ChartPair>> {
    let values = l_values(xs, l)?;
    let pts = xs.points();
    let min = values.iter().min().expect("non-empty set");

    // first ∈ argmin L, second minimal among points off the line through first
    let mut candidates: Vec<ChartPair> = Vec::new();
    for first in (0..pts.len()).filter(|&k| values[k] == *min) {
        let off_line: Vec<usize> = (0..pts.len())
            .filter(|&k| !pts[first].cross(&pts[k]).is_zero())
            .collect();
        let Some(second_min) = off_line.iter().map(|&k| &values[k]).min() else {
            continue;
        };
        candidates.extend(
            off_line
                .iter()
                .filter(|&&k| values[k] == *second_min)
                .map(|&k| ChartPair::new(first, k)),
        );
    }
    if candidates.is_empty() {
        return Err(Error::Collinear);
    }
    candidates.sort();
    candidates.dedup();
    candidates.retain(|&pair| chart(xs, pair).is_ok());
    Ok(candidates)
}
