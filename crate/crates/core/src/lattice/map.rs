use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::form::GuidingForm;
use super::point::{ExponentSet, LatticePoint};
use crate::error::{Error, Result};

/// An integer 2×2 matrix of determinant ±1, acting on column vectors:
/// `T(x, y) = (m11·x + m12·y, m21·x + m22·y)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UnimodularMap {
    m: [[BigInt; 2]; 2],
}

impl UnimodularMap {
    pub fn new(
        m11: impl Into<BigInt>,
        m12: impl Into<BigInt>,
        m21: impl Into<BigInt>,
        m22: impl Into<BigInt>,
    ) -> Result<Self> {
        let m = [[m11.into(), m12.into()], [m21.into(), m22.into()]];
        let det = &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0];
        if det.abs() != BigInt::one() {
            return Err(Error::NotUnimodular(det));
        }
        Ok(UnimodularMap { m })
    }

    pub fn identity() -> Self {
        Self::unchecked(1.into(), 0.into(), 0.into(), 1.into())
    }

    /// `T(x, y) = (x − λy, y)`.
    pub fn shear(lambda: &BigInt) -> Self {
        Self::unchecked(1.into(), -lambda, 0.into(), 1.into())
    }

    /// `T(x, y) = (−x, y)`.
    pub fn flip_x() -> Self {
        Self::unchecked((-1).into(), 0.into(), 0.into(), 1.into())
    }

    fn unchecked(m11: BigInt, m12: BigInt, m21: BigInt, m22: BigInt) -> Self {
        UnimodularMap {
            m: [[m11, m12], [m21, m22]],
        }
    }

    pub fn entries(&self) -> &[[BigInt; 2]; 2] {
        &self.m
    }

    pub fn det(&self) -> BigInt {
        &self.m[0][0] * &self.m[1][1] - &self.m[0][1] * &self.m[1][0]
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    pub fn apply(&self, p: &LatticePoint) -> LatticePoint {
        LatticePoint {
            x: &self.m[0][0] * &p.x + &self.m[0][1] * &p.y,
            y: &self.m[1][0] * &p.x + &self.m[1][1] * &p.y,
        }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &UnimodularMap) -> UnimodularMap {
        let a = &self.m;
        let b = &other.m;
        let e = |i: usize, j: usize| &a[i][0] * &b[0][j] + &a[i][1] * &b[1][j];
        Self::unchecked(e(0, 0), e(0, 1), e(1, 0), e(1, 1))
    }

    pub fn inverse(&self) -> UnimodularMap {
        let d = self.det();
        let m = &self.m;
        Self::unchecked(&m[1][1] * &d, -&m[0][1] * &d, -&m[1][0] * &d, &m[0][0] * &d)
    }

    /// Whether `L ∘ T = L`.
    pub fn preserves(&self, l: &GuidingForm) -> bool {
        let e1 = l.eval(&self.apply(&LatticePoint::new(1, 0)));
        let e2 = l.eval(&self.apply(&LatticePoint::new(0, 1)));
        &e1 == l.a() && &e2 == l.b()
    }
}

/// Applies `t` to every point and re-canonicalizes.
pub fn apply_map(t: &UnimodularMap, xs: &ExponentSet) -> ExponentSet {
    // Injective linear image of non-zero points, so the result is a valid set.
    let mut points: Vec<LatticePoint> = xs.iter().map(|p| t.apply(p)).collect();
    points.sort();
    ExponentSet::from_sorted_unchecked(points)
}

impl fmt::Display for UnimodularMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = &self.m;
        write!(f, "[[{},{}],[{},{}]]", m[0][0], m[0][1], m[1][0], m[1][1])
    }
}

impl Default for UnimodularMap {
    fn default() -> Self {
        Self::identity()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{lattice_index, member};
    use proptest::prelude::*;

    fn set(pairs: &[(i64, i64)]) -> ExponentSet {
        ExponentSet::from_pairs(pairs).unwrap()
    }

    #[test]
    fn apply_examples() {
        let t = UnimodularMap::shear(&3.into());
        assert_eq!(apply_map(&t, &set(&[(3, 1)])), set(&[(0, 1)]));
        let xs = set(&[(1, 0), (2, 1), (0, 2)]);
        assert_eq!(apply_map(&UnimodularMap::identity(), &xs), xs);
        assert_eq!(
            apply_map(&UnimodularMap::flip_x(), &set(&[(-1, 0), (2, 3)])),
            set(&[(1, 0), (-2, 3)])
        );
    }

    #[test]
    fn rejects_non_unimodular() {
        assert_eq!(
            UnimodularMap::new(2, 0, 0, 1),
            Err(Error::NotUnimodular(2.into()))
        );
        assert!(UnimodularMap::new(0, 1, 1, 0).is_ok());
    }

    #[test]
    fn shear_and_flip_preserve_vertical_form() {
        let y = GuidingForm::vertical();
        assert!(UnimodularMap::shear(&7.into()).preserves(&y));
        assert!(UnimodularMap::flip_x().preserves(&y));
        assert!(!UnimodularMap::new(0, 1, 1, 0).unwrap().preserves(&y));
    }

    fn unimodular() -> impl Strategy<Value = UnimodularMap> {
        // products of elementary generators cover SL(2,Z) and the flip
        prop::collection::vec(0u8..4, 0..6).prop_map(|ops| {
            ops.into_iter().fold(UnimodularMap::identity(), |acc, op| {
                let g = match op {
                    0 => UnimodularMap::new(1, 1, 0, 1).unwrap(),
                    1 => UnimodularMap::new(1, 0, 1, 1).unwrap(),
                    2 => UnimodularMap::new(1, -1, 0, 1).unwrap(),
                    _ => UnimodularMap::flip_x(),
                };
                g.compose(&acc)
            })
        })
    }

    fn pointed_set() -> impl Strategy<Value = ExponentSet> {
        prop::collection::vec((-5i64..=5, 1i64..=5), 1..6).prop_map(|v| set(&v))
    }

    proptest! {
        #[test]
        fn index_and_membership_invariant(t in unimodular(), xs in pointed_set(), g in (-6i64..=6, 0i64..=6)) {
            let image = apply_map(&t, &xs);
            prop_assert_eq!(lattice_index(&image), lattice_index(&xs));
            let g = LatticePoint::new(g.0, g.1);
            prop_assert_eq!(member(&g, &xs).unwrap(), member(&t.apply(&g), &image).unwrap());
        }

        #[test]
        fn inverse_undoes(t in unimodular(), xs in pointed_set()) {
            prop_assert_eq!(apply_map(&t.inverse(), &apply_map(&t, &xs)), xs);
            prop_assert!(t.compose(&t.inverse()).is_identity());
        }
    }
}
