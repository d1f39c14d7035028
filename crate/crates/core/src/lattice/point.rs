use std::fmt;
use std::ops::{Add, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

/// A monomial exponent: a vector in `Z²` with arbitrary-precision coordinates.
///
/// The derived order is lexicographic by `(x, y)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePoint {
    pub x: BigInt,
    pub y: BigInt,
}

impl LatticePoint {
    pub fn new(x: impl Into<BigInt>, y: impl Into<BigInt>) -> Self {
        LatticePoint {
            x: x.into(),
            y: y.into(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    /// Determinant of the 2×2 matrix with columns `self`, `other`.
    pub fn cross(&self, other: &LatticePoint) -> BigInt {
        &self.x * &other.y - &self.y * &other.x
    }

    pub fn dot(&self, other: &LatticePoint) -> BigInt {
        &self.x * &other.x + &self.y * &other.y
    }

    /// The primitive vector on the same ray. The zero vector maps to itself.
    pub fn primitive(&self) -> LatticePoint {
        let g = self.x.gcd(&self.y);
        if g.is_zero() {
            return self.clone();
        }
        LatticePoint {
            x: &self.x / &g,
            y: &self.y / &g,
        }
    }
}

impl Add for &LatticePoint {
    type Output = LatticePoint;
    fn add(self, rhs: &LatticePoint) -> LatticePoint {
        LatticePoint {
            x: &self.x + &rhs.x,
            y: &self.y + &rhs.y,
        }
    }
}

impl Sub for &LatticePoint {
    type Output = LatticePoint;
    fn sub(self, rhs: &LatticePoint) -> LatticePoint {
        LatticePoint {
            x: &self.x - &rhs.x,
            y: &self.y - &rhs.y,
        }
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// Determinant of the matrix with columns `p` and `q`.
pub fn det2(p: &LatticePoint, q: &LatticePoint) -> BigInt {
    p.cross(q)
}

/// A finite set of monomial exponents, kept sorted lexicographically and free of duplicates.
///
/// The zero vector is rejected at construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentSet {
    points: Vec<LatticePoint>,
}

impl ExponentSet {
    pub fn new(points: impl IntoIterator<Item = LatticePoint>) -> Result<Self> {
        let mut points: Vec<LatticePoint> = points.into_iter().collect();
        if points.is_empty() {
            return Err(Error::EmptySet);
        }
        if points.iter().any(LatticePoint::is_zero) {
            return Err(Error::ContainsOrigin);
        }
        points.sort();
        points.dedup();
        Ok(ExponentSet { points })
    }

    /// Convenience constructor from small integer pairs.
    pub fn from_pairs(pairs: &[(i64, i64)]) -> Result<Self> {
        Self::new(pairs.iter().map(|&(x, y)| LatticePoint::new(x, y)))
    }

    pub fn points(&self) -> &[LatticePoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, LatticePoint> {
        self.points.iter()
    }

    pub fn get(&self, index: usize) -> Option<&LatticePoint> {
        self.points.get(index)
    }

    pub fn contains(&self, p: &LatticePoint) -> bool {
        self.points.binary_search(p).is_ok()
    }

    pub fn index_of(&self, p: &LatticePoint) -> Option<usize> {
        self.points.binary_search(p).ok()
    }

    /// The set with one point removed; `None` if that would leave it empty.
    pub fn without(&self, p: &LatticePoint) -> Option<ExponentSet> {
        let points: Vec<_> = self.points.iter().filter(|q| *q != p).cloned().collect();
        (!points.is_empty()).then_some(ExponentSet { points })
    }

    /// Largest absolute first coordinate.
    pub fn max_abs_x(&self) -> BigInt {
        self.points
            .iter()
            .map(|p| p.x.abs())
            .max()
            .unwrap_or_default()
    }

    pub(crate) fn from_sorted_unchecked(points: Vec<LatticePoint>) -> Self {
        debug_assert!(points.windows(2).all(|w| w[0] < w[1]));
        ExponentSet { points }
    }
}

impl<'a> IntoIterator for &'a ExponentSet {
    type Item = &'a LatticePoint;
    type IntoIter = std::slice::Iter<'a, LatticePoint>;
    fn into_iter(self) -> Self::IntoIter {
        self.points.iter()
    }
}

impl fmt::Display for ExponentSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, p) in self.points.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// Index of the subgroup generated by `points` in `Z²`, or 0 when they span rank ≤ 1.
pub fn index_of_points<'a>(points: impl IntoIterator<Item = &'a LatticePoint>) -> BigInt {
    let points: Vec<&LatticePoint> = points.into_iter().collect();
    let mut g = BigInt::zero();
    for (k, p) in points.iter().enumerate() {
        for q in &points[k + 1..] {
            g = g.gcd(&p.cross(q));
            if g == BigInt::from(1) {
                return g;
            }
        }
    }
    g
}

/// Index of `Zξ` in `Z²`; 1 exactly when the exponents generate the whole lattice.
pub fn lattice_index(xs: &ExponentSet) -> BigInt {
    index_of_points(xs.iter())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(x: i64, y: i64) -> LatticePoint {
        LatticePoint::new(x, y)
    }

    #[test]
    fn det2_examples() {
        assert_eq!(det2(&pt(1, 0), &pt(0, 1)), 1.into());
        assert_eq!(det2(&pt(0, 2), &pt(0, 3)), 0.into());
        assert_eq!(det2(&pt(1, 0), &pt(2, 1)), 1.into());
    }

    #[test]
    fn lattice_index_examples() {
        let ex = ExponentSet::from_pairs(&[(1, 0), (2, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(lattice_index(&ex), 1.into());
        assert_eq!(
            lattice_index(&ExponentSet::from_pairs(&[(2, 0), (0, 2)]).unwrap()),
            4.into()
        );
        assert_eq!(
            lattice_index(&ExponentSet::from_pairs(&[(1, 0), (3, 0)]).unwrap()),
            0.into()
        );
        assert_eq!(
            lattice_index(&ExponentSet::from_pairs(&[(5, 7)]).unwrap()),
            0.into()
        );
    }

    #[test]
    fn construction_canonicalizes() {
        let a = ExponentSet::from_pairs(&[(2, 1), (1, 0), (2, 1), (0, 3)]).unwrap();
        let b = ExponentSet::from_pairs(&[(0, 3), (1, 0), (2, 1)]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.points()[0], pt(0, 3));
        assert_eq!(ExponentSet::from_pairs(&[]), Err(Error::EmptySet));
        assert_eq!(
            ExponentSet::from_pairs(&[(1, 0), (0, 0)]),
            Err(Error::ContainsOrigin)
        );
    }

    #[test]
    fn large_coordinates_are_exact() {
        let big = BigInt::from(2).pow(200u32);
        let p = LatticePoint::new(big.clone(), 1);
        let q = LatticePoint::new(1, big.clone());
        assert_eq!(det2(&p, &q), &big * &big - 1);
    }
}
