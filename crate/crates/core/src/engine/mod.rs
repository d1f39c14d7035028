//! Charts and the L-guided iteration built on them.

mod metrics;
mod normalize;
mod pairs;
mod run;

pub use metrics::{metrics, Metrics};
pub use normalize::normalize;
pub use pairs::{chart, l_choices, l_values, pairs_s, valid_pairs, ChartPair};
pub use run::{
    guided_branches, renormalizing_map, run, run_with, step, step_through, validate_input,
    validate_surface, Policy, RunOptions, RunStatus, StepRecord, TieBreak, Trace,
};
pub(crate) use run::{reduce, smooth_generators};
