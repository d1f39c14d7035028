use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::pairs::{chart, l_choices, l_values, ChartPair};
use crate::error::{Error, Result};
use crate::lattice::{
    apply_map, lattice_index, minimal_generators, origin_in_hull, ExponentSet, GuidingForm,
    QuadExt, UnimodularMap,
};

/// How the chart is presented to the next iteration.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Policy {
    /// Keep the chart verbatim.
    Raw,
    /// Replace the chart by its minimal generators.
    #[default]
    Hilbert,
}

/// Which of several L-chosen pairs to take.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum TieBreak {
    #[default]
    First,
    /// 0-based position in the canonical list of choices.
    Index(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StepRecord {
    pub input_set: ExponentSet,
    pub chosen_pair: ChartPair,
    pub raw_chart: ExponentSet,
    pub reduced_chart: ExponentSet,
    /// Renormalization mapping `reduced_chart` to the next input; identity when none.
    pub applied_map: UnimodularMap,
    /// L-values of `input_set`, in its order.
    pub l_values: Vec<QuadExt>,
}

impl StepRecord {
    /// The set handed to the next iteration.
    pub fn output_set(&self) -> ExponentSet {
        apply_map(&self.applied_map, &self.reduced_chart)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RunStatus {
    Terminated,
    StepLimit,
    NoValidPair,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trace {
    pub steps: Vec<StepRecord>,
    pub status: RunStatus,
    pub final_set: ExponentSet,
    pub final_generators: ExponentSet,
}

impl Trace {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunOptions {
    pub policy: Policy,
    pub tie: TieBreak,
    pub max_steps: usize,
    pub renormalize: bool,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            policy: Policy::Hilbert,
            tie: TieBreak::First,
            max_steps: 10_000,
            renormalize: false,
        }
    }
}

/// Rejects sets the algorithm is not defined on, and forms negative on them.
pub fn validate_input(xs: &ExponentSet, l: &GuidingForm) -> Result<()> {
    validate_surface(xs)?;
    l_values(xs, l).map(|_| ())
}

/// Rejects sets that do not generate `Z²` or whose hull contains the origin.
pub fn validate_surface(xs: &ExponentSet) -> Result<()> {
    let index = lattice_index(xs);
    if index.is_zero() {
        return Err(Error::Collinear);
    }
    if !index.is_one() {
        return Err(Error::NotGenerating(index));
    }
    if origin_in_hull(xs) {
        return Err(Error::OriginInHull);
    }
    Ok(())
}

pub(crate) fn reduce(raw: &ExponentSet, policy: Policy) -> Result<ExponentSet> {
    match policy {
        Policy::Raw => Ok(raw.clone()),
        Policy::Hilbert => minimal_generators(raw),
    }
}

/// One iteration through a given pair, bypassing the L-choice.
pub fn step_through(
    xs: &ExponentSet,
    l: &GuidingForm,
    pair: ChartPair,
    policy: Policy,
) -> Result<StepRecord> {
    let l_values = l_values(xs, l)?;
    let raw_chart = chart(xs, pair)?;
    let reduced_chart = reduce(&raw_chart, policy)?;
    Ok(StepRecord {
        input_set: xs.clone(),
        chosen_pair: pair,
        raw_chart,
        reduced_chart,
        applied_map: UnimodularMap::identity(),
        l_values,
    })
}

/// One L-guided iteration.
pub fn step(
    xs: &ExponentSet,
    l: &GuidingForm,
    policy: Policy,
    tie: TieBreak,
) -> Result<StepRecord> {
    let choices = l_choices(xs, l)?;
    let k = match tie {
        TieBreak::First => 0,
        TieBreak::Index(k) => k,
    };
    let pair = *choices.get(k).ok_or(Error::ChoiceOutOfRange {
        index: k,
        available: choices.len(),
    })?;
    step_through(xs, l, pair, policy)
}

/// The L-preserving isomorphism applied to a chart in vertical mode: a flip
/// when the L-value-0 points are negative, then a shear sending the leftmost
/// point `(λ, 1)` to `(0, 1)`. The shear is skipped when `λ` is not a
/// multiple of the least positive `n` with `(n, 0)` in the set.
pub fn renormalizing_map(xs: &ExponentSet) -> UnimodularMap {
    let zero_level: Vec<&BigInt> = xs.iter().filter(|p| p.y.is_zero()).map(|p| &p.x).collect();
    let flip = !zero_level.is_empty() && zero_level.iter().all(|n| n.is_negative());
    let sign = if flip { -BigInt::one() } else { BigInt::one() };
    let n = zero_level.iter().map(|n| n.abs()).min();
    let lambda = xs
        .iter()
        .filter(|p| p.y.is_one())
        .map(|p| &p.x * &sign)
        .min();

    let mut t = if flip {
        UnimodularMap::flip_x()
    } else {
        UnimodularMap::identity()
    };
    if let Some(lambda) = lambda {
        let compatible = n.as_ref().is_none_or(|n| lambda.is_multiple_of(n));
        if !lambda.is_zero() && compatible {
            t = UnimodularMap::shear(&lambda).compose(&t);
        }
    }
    t
}

pub(crate) fn smooth_generators(xs: &ExponentSet) -> Result<Option<ExponentSet>> {
    let gens = minimal_generators(xs)?;
    Ok((gens.len() == 2).then_some(gens))
}

/// Takes one step through `pair` and applies renormalization when requested.
fn advance(
    xs: &ExponentSet,
    l: &GuidingForm,
    pair: ChartPair,
    opts: &RunOptions,
) -> Result<StepRecord> {
    let mut rec = step_through(xs, l, pair, opts.policy)?;
    if opts.renormalize && l.is_vertical() {
        rec.applied_map = renormalizing_map(&rec.reduced_chart);
    }
    Ok(rec)
}

fn finish(steps: Vec<StepRecord>, status: RunStatus, final_set: ExponentSet) -> Result<Trace> {
    let final_generators = minimal_generators(&final_set)?;
    Ok(Trace {
        steps,
        status,
        final_set,
        final_generators,
    })
}

/// Iterates following `l` until the semigroup has two generators, no pair is
/// available, or `max_steps` steps were taken. `chooser` picks a 0-based
/// position among the current L-choices.
pub fn run_with<F>(
    xs: &ExponentSet,
    l: &GuidingForm,
    opts: &RunOptions,
    mut chooser: F,
) -> Result<Trace>
where
    F: FnMut(&ExponentSet, &[ChartPair]) -> Result<usize>,
{
    validate_input(xs, l)?;
    let mut current = xs.clone();
    let mut steps = Vec::new();
    loop {
        if smooth_generators(&current)?.is_some() {
            return finish(steps, RunStatus::Terminated, current);
        }
        if steps.len() >= opts.max_steps {
            return finish(steps, RunStatus::StepLimit, current);
        }
        let choices = l_choices(&current, l)?;
        if choices.is_empty() {
            return finish(steps, RunStatus::NoValidPair, current);
        }
        let k = chooser(&current, &choices)?;
        let pair = *choices.get(k).ok_or(Error::ChoiceOutOfRange {
            index: k,
            available: choices.len(),
        })?;
        let rec = advance(&current, l, pair, opts)?;
        current = rec.output_set();
        steps.push(rec);
    }
}

/// L-guided run. A tie index applies at every step with enough choices;
/// steps with fewer choices take the first.
pub fn run(xs: &ExponentSet, l: &GuidingForm, opts: &RunOptions) -> Result<Trace> {
    let tie = opts.tie;
    run_with(xs, l, opts, |_, choices| {
        Ok(match tie {
            TieBreak::Index(k) if k < choices.len() => k,
            _ => 0,
        })
    })
}

/// Every run obtainable by resolving ties differently, in canonical branch
/// order (earlier steps vary slowest). `opts.tie` is ignored.
pub fn guided_branches(xs: &ExponentSet, l: &GuidingForm, opts: &RunOptions) -> Result<Vec<Trace>> {
    validate_input(xs, l)?;
    let mut out = Vec::new();
    let mut stack: Vec<(Vec<StepRecord>, ExponentSet)> = vec![(Vec::new(), xs.clone())];
    while let Some((steps, current)) = stack.pop() {
        if smooth_generators(&current)?.is_some() {
            out.push(finish(steps, RunStatus::Terminated, current)?);
            continue;
        }
        if steps.len() >= opts.max_steps {
            out.push(finish(steps, RunStatus::StepLimit, current)?);
            continue;
        }
        let choices = l_choices(&current, l)?;
        if choices.is_empty() {
            out.push(finish(steps, RunStatus::NoValidPair, current)?);
            continue;
        }
        for &pair in choices.iter().rev() {
            let rec = advance(&current, l, pair, opts)?;
            let next = rec.output_set();
            let mut branch = steps.clone();
            branch.push(rec);
            stack.push((branch, next));
        }
    }
    Ok(out)
}
