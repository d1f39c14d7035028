//! Exact form coefficients: `p`, `p/q`, `r*sqrt`, `p/q+r/s*sqrt` and so on,
//! where `sqrt` stands for the radicand given by `--sqrt`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use toric_nash::lattice::{GuidingForm, QuadExt};

use crate::error::{CliError, CliResult};

fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (
            n.trim().parse::<BigInt>().ok()?,
            d.trim().parse::<BigInt>().ok()?,
        ),
        None => (s.parse::<BigInt>().ok()?, BigInt::one()),
    };
    (den != BigInt::ZERO).then(|| BigRational::new(num, den))
}

/// Coefficient of `sqrt`: empty means 1, a lone sign means ±1.
fn parse_coefficient(s: &str) -> Option<BigRational> {
    match s.trim().trim_end_matches('*').trim() {
        "" | "+" => Some(BigRational::one()),
        "-" => Some(-BigRational::one()),
        other => parse_rational(other.strip_prefix('+').unwrap_or(other)),
    }
}

pub fn parse_component(s: &str, radicand: Option<u64>) -> CliResult<QuadExt> {
    let bad = || CliError::usage(format!("invalid form component {s:?}"));
    let t = s.trim();
    let Some(head) = t.strip_suffix("sqrt") else {
        return parse_rational(t)
            .map(QuadExt::from_rational)
            .ok_or_else(bad);
    };
    let d = radicand.ok_or_else(|| {
        CliError::usage(format!("component {s:?} uses sqrt but --sqrt is not given"))
    })?;
    // the rational part ends at the last sign that is not the leading one
    let split = head
        .char_indices()
        .rev()
        .find(|&(i, c)| i > 0 && (c == '+' || c == '-'))
        .map(|(i, _)| i);
    let (rational, coefficient) = match split {
        Some(i) => (parse_rational(&head[..i]).ok_or_else(bad)?, &head[i..]),
        None => (BigRational::from_integer(BigInt::ZERO), head),
    };
    let q = parse_coefficient(coefficient).ok_or_else(bad)?;
    Ok(QuadExt::new(rational, q, d)?)
}

pub fn parse_form(a: &str, b: &str, radicand: Option<u64>) -> CliResult<GuidingForm> {
    Ok(GuidingForm::new(
        parse_component(a, radicand)?,
        parse_component(b, radicand)?,
    )?)
}
