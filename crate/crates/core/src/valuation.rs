//! Monomial valuations: centering and the walks that follow them.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::engine::{
    chart, guided_branches, run_with, validate_surface, Policy, RunOptions, TieBreak, Trace,
};
use crate::error::{Error, Result};
use crate::lattice::{ExponentSet, GuidingForm, LatticePoint};

/// Values of the two coordinate monomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ValuationSpec {
    /// `ν(x₁) = v1`, `ν(x₂) = v2` in `Q`.
    Rank1 { v1: BigRational, v2: BigRational },
    /// `ν(x₁) = v1`, `ν(x₂) = v2` in `Z²` ordered lexicographically.
    Rank2Lex {
        v1: (BigInt, BigInt),
        v2: (BigInt, BigInt),
    },
}

impl ValuationSpec {
    pub fn rank1(v1: BigRational, v2: BigRational) -> Result<Self> {
        if v1.is_zero() && v2.is_zero() {
            return Err(Error::InvalidValuation("both values are zero"));
        }
        Ok(ValuationSpec::Rank1 { v1, v2 })
    }

    /// Requires the first components `(a, b)` and second components `(c, d)`
    /// to be linearly independent, i.e. `ad − bc ≠ 0`.
    pub fn rank2(v1: (BigInt, BigInt), v2: (BigInt, BigInt)) -> Result<Self> {
        let (a, c) = (&v1.0, &v1.1);
        let (b, d) = (&v2.0, &v2.1);
        if (a * d - b * c).is_zero() {
            return Err(Error::InvalidValuation("value vectors are proportional"));
        }
        Ok(ValuationSpec::Rank2Lex { v1, v2 })
    }

    pub fn rank1_int(v1: i64, v2: i64) -> Result<Self> {
        Self::rank1(
            BigRational::from_integer(v1.into()),
            BigRational::from_integer(v2.into()),
        )
    }

    pub fn rank2_int(v1: (i64, i64), v2: (i64, i64)) -> Result<Self> {
        Self::rank2((v1.0.into(), v1.1.into()), (v2.0.into(), v2.1.into()))
    }
}

/// The guiding form `L`, and the secondary form `T` for rank 2.
pub fn to_forms(v: &ValuationSpec) -> Result<(GuidingForm, Option<GuidingForm>)> {
    match v {
        ValuationSpec::Rank1 { v1, v2 } => {
            Ok((GuidingForm::rational(v1.clone(), v2.clone())?, None))
        }
        ValuationSpec::Rank2Lex { v1, v2 } => {
            let l = GuidingForm::integer(v1.0.clone(), v2.0.clone())?;
            let t = GuidingForm::integer(v1.1.clone(), v2.1.clone())?;
            Ok((l, Some(t)))
        }
    }
}

fn lex_nonnegative(p: &LatticePoint, l: &GuidingForm, t: Option<&GuidingForm>) -> bool {
    let lv = l.eval(p);
    if lv.is_positive() {
        return true;
    }
    lv.is_zero() && t.is_none_or(|t| !t.eval(p).is_negative())
}

fn centered_under(xs: &ExponentSet, l: &GuidingForm, t: Option<&GuidingForm>) -> bool {
    xs.iter().all(|p| lex_nonnegative(p, l, t))
}

/// Monomial criterion: `ν(x^γ) ≥ 0` for every exponent.
pub fn is_centered(xs: &ExponentSet, v: &ValuationSpec) -> bool {
    match to_forms(v) {
        Ok((l, t)) => centered_under(xs, &l, t.as_ref()),
        Err(_) => false,
    }
}

/// Nash-modification walks along `v`, one trace per branch. Rank 1 follows
/// every tied choice; rank 2 takes the first choice whose chart stays
/// centered.
pub fn uniformize(
    xs: &ExponentSet,
    v: &ValuationSpec,
    max_steps: usize,
    policy: Policy,
) -> Result<Vec<Trace>> {
    validate_surface(xs)?;
    if !is_centered(xs, v) {
        return Err(Error::NotCentered);
    }
    let (l, t) = to_forms(v)?;
    let opts = RunOptions {
        policy,
        tie: TieBreak::First,
        max_steps,
        renormalize: false,
    };
    match t {
        None => guided_branches(xs, &l, &opts),
        Some(t) => {
            let trace = run_with(xs, &l, &opts, |current, choices| {
                choices
                    .iter()
                    .position(|&pair| {
                        chart(current, pair).is_ok_and(|c| centered_under(&c, &l, Some(&t)))
                    })
                    .ok_or(Error::CenterLost)
            })?;
            Ok(vec![trace])
        }
    }
}
