use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::normalize::normalize;
use super::pairs::l_values;
use crate::error::Result;
use crate::lattice::{index_of_points, ExponentSet, GuidingForm, LatticePoint, QuadExt};

/// Counting quantities of a set under a guiding form.
///
/// For integer forms everything is measured on the normalized presentation
/// (`L = y`); for irrational forms on the given coordinates, without a bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Metrics {
    /// Largest L-value.
    pub u0: QuadExt,
    /// Least L-level whose points generate `Z²` as a group.
    pub u1: Option<QuadExt>,
    /// Largest absolute first coordinate.
    pub v0: BigInt,
    /// Coprimality threshold of the L-value-0 first coordinates.
    pub v1: Option<BigInt>,
    /// `2·u0 + 2^(u0−1)·v0`, for integer forms with `u0 ≥ 1`.
    pub bound: Option<BigInt>,
}

pub fn metrics(xs: &ExponentSet, l: &GuidingForm) -> Result<Metrics> {
    let values = l_values(xs, l)?;
    let (pts, integral) = match normalize(xs, l) {
        Ok((image, _, _)) => (image, true),
        Err(_) => (xs.clone(), false),
    };
    let values: Vec<QuadExt> = if integral {
        pts.iter()
            .map(|p| QuadExt::from_integer(p.y.clone()))
            .collect()
    } else {
        values
    };

    let u0 = values.iter().max().expect("non-empty set").clone();
    let u1 = least_generating_level(pts.points(), &values);
    let v0 = pts.iter().map(|p| p.x.abs()).max().expect("non-empty set");
    let zero_xs: Vec<BigInt> = pts
        .iter()
        .zip(&values)
        .filter(|(_, v)| v.is_zero())
        .map(|(p, _)| p.x.clone())
        .collect();
    let v1 = coprimality_threshold(&zero_xs);
    let bound = if integral { bound_of(&u0, &v0) } else { None };
    Ok(Metrics {
        u0,
        u1,
        v0,
        v1,
        bound,
    })
}

fn least_generating_level(pts: &[LatticePoint], values: &[QuadExt]) -> Option<QuadExt> {
    let mut levels: Vec<&QuadExt> = values.iter().collect();
    levels.sort();
    levels.dedup();
    levels.into_iter().find_map(|t| {
        let below = pts
            .iter()
            .zip(values)
            .filter(|(_, v)| *v <= t)
            .map(|(p, _)| p);
        index_of_points(below).is_one().then(|| t.clone())
    })
}

/// Sorts the absolute first coordinates and returns the least
/// `n_i` such that all `n ≤ n_i` have gcd 1.
fn coprimality_threshold(xs: &[BigInt]) -> Option<BigInt> {
    let mut ns: Vec<BigInt> = xs
        .iter()
        .map(|n| n.abs())
        .filter(|n| !n.is_zero())
        .collect();
    ns.sort();
    let mut g = BigInt::zero();
    ns.into_iter().find(|n| {
        g = g.gcd(n);
        g.is_one()
    })
}

fn bound_of(u0: &QuadExt, v0: &BigInt) -> Option<BigInt> {
    let u = u0.to_integer()?;
    if !u.is_positive() {
        return None;
    }
    let e = (&u - 1u32).to_u32()?;
    Some(&u * 2u32 + BigInt::from(2u32).pow(e) * v0)
}
