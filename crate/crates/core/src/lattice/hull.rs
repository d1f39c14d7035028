//! Origin-versus-hull predicate in the plane, with a separating-form certificate.
//!
//! The points are folded into a cone given by two extreme primitive rays. The
//! origin avoids the hull exactly when that cone stays below a half turn.

use std::borrow::Borrow;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::form::GuidingForm;
use super::point::{ExponentSet, LatticePoint};

/// The closed cone spanned by a point set that avoids the origin in its hull.
///
/// `start` and `end` are its primitive extreme rays, counter-clockwise from
/// `start` to `end`, spanning an angle below a half turn. When all points are
/// on one ray, `start == end`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct PointedCone {
    pub start: LatticePoint,
    pub end: LatticePoint,
    /// Integer coefficients of a linear form strictly positive on the cone minus 0.
    pub form: (BigInt, BigInt),
}

impl PointedCone {
    pub fn contains(&self, p: &LatticePoint) -> bool {
        if self.start == self.end {
            return self.start.cross(p).is_zero() && !self.start.dot(p).is_negative();
        }
        !self.start.cross(p).is_negative() && !p.cross(&self.end).is_negative()
    }

    pub fn value(&self, p: &LatticePoint) -> BigInt {
        &self.form.0 * &p.x + &self.form.1 * &p.y
    }
}

/// Computes the pointed cone of a set of non-zero points, or `None` if the
/// origin lies in their convex hull. Stops at the first point that closes
/// the cone.
pub(crate) fn pointed_cone<B: Borrow<LatticePoint>>(
    points: impl IntoIterator<Item = B>,
) -> Option<PointedCone> {
    let mut it = points.into_iter();
    let first = it.next()?;
    let first = first.borrow();
    if first.is_zero() {
        return None;
    }
    let mut start = first.primitive();
    let mut end = start.clone();
    for p in it {
        let p = p.borrow();
        if p.is_zero() {
            return None;
        }
        let cs = start.cross(p);
        let ce = end.cross(p);
        if start == end && cs.is_zero() {
            if start.dot(p).is_negative() {
                return None;
            }
            continue;
        }
        if !cs.is_negative() && !ce.is_positive() && start != end {
            continue;
        }
        if cs.is_positive() && ce.is_positive() {
            end = p.primitive();
        } else if cs.is_negative() && ce.is_negative() {
            start = p.primitive();
        } else {
            return None;
        }
    }
    let (a, b) = if start == end {
        (start.x.clone(), start.y.clone())
    } else {
        // cross(start - end, p): positive on both extreme rays, hence on the cone.
        (&end.y - &start.y, &start.x - &end.x)
    };
    let g = a.gcd(&b);
    let form = (a / &g, b / &g);
    Some(PointedCone { start, end, form })
}

/// Whether `(0,0)` lies in the convex hull of the points, boundary included.
pub(crate) fn origin_in_hull_of<B: Borrow<LatticePoint>>(
    points: impl IntoIterator<Item = B>,
) -> bool {
    pointed_cone(points).is_none()
}

/// Whether `(0,0)` lies in the convex hull of the set, boundary included.
pub fn origin_in_hull(xs: &ExponentSet) -> bool {
    pointed_cone(xs.iter()).is_none()
}

/// An integer linear form strictly positive on every point, present exactly
/// when the origin is outside the convex hull.
pub fn separating_form(xs: &ExponentSet) -> Option<GuidingForm> {
    let cone = pointed_cone(xs.iter())?;
    Some(GuidingForm::integer(cone.form.0, cone.form.1).expect("primitive non-zero form"))
}
