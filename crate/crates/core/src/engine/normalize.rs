use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lattice::{apply_map, ExponentSet, GuidingForm, UnimodularMap};

/// Moves an integer form `ax + by` to `y` by `T(x, y) = (βx − αy, ax + by)`
/// with `αa + βb = 1`, so that every image point's second coordinate is its
/// original L-value. `det T = 1`.
pub fn normalize(
    xs: &ExponentSet,
    l: &GuidingForm,
) -> Result<(ExponentSet, GuidingForm, UnimodularMap)> {
    let t = normalizing_map(l)?;
    Ok((apply_map(&t, xs), GuidingForm::vertical(), t))
}

pub(crate) fn normalizing_map(l: &GuidingForm) -> Result<UnimodularMap> {
    let (a, b) = l.integer_coefficients().ok_or(Error::NotInteger)?;
    if l.is_vertical() {
        return Ok(UnimodularMap::identity());
    }
    let ext = a.extended_gcd(&b);
    // coefficients are coprime, so the gcd is ±1
    let (alpha, beta): (BigInt, BigInt) = if ext.gcd.is_one() {
        (ext.x, ext.y)
    } else {
        (-ext.x, -ext.y)
    };
    debug_assert!((&alpha * &a + &beta * &b).is_one());
    let t = UnimodularMap::new(beta, -alpha, a, b)?;
    debug_assert!(!t.det().is_zero());
    Ok(t)
}
