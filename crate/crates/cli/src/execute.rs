use std::io::{Read, Write};

use toric_nash::engine::{
    metrics, run, validate_input, validate_surface, RunOptions, RunStatus, Trace,
};
use toric_nash::explorer::{explore_with_limit, to_dot, to_json};
use toric_nash::lattice::{
    lattice_index, minimal_generators, separating_form, ExponentSet, GuidingForm,
};
use toric_nash::valuation::{to_forms, uniformize, ValuationSpec};

use crate::config::{Command, Format, Input, RunConfig, FALLBACK_MAX_STEPS};
use crate::error::CliResult;
use crate::form::parse_form;
use crate::input::parse_exponents;
use crate::report;
use crate::valuation::parse_valuation;

/// Whether the command reached its goal. Maps to exit status 0 or 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Complete,
    Incomplete,
}

impl Outcome {
    pub fn exit_code(self) -> u8 {
        match self {
            Outcome::Complete => 0,
            Outcome::Incomplete => 2,
        }
    }

    fn of(statuses: impl IntoIterator<Item = RunStatus>) -> Self {
        let done = statuses.into_iter().all(|s| s == RunStatus::Terminated);
        if done {
            Outcome::Complete
        } else {
            Outcome::Incomplete
        }
    }
}

pub fn read_input(input: &Input) -> CliResult<String> {
    Ok(match input {
        Input::Path(p) => std::fs::read_to_string(p)?,
        Input::Stdin => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s)?;
            s
        }
        Input::Inline(s) => s.replace(';', "\n"),
    })
}

fn guiding_form(cfg: &RunConfig) -> CliResult<GuidingForm> {
    match &cfg.form {
        Some(f) => parse_form(&f.a, &f.b, f.sqrt),
        None => Ok(GuidingForm::vertical()),
    }
}

fn default_max_steps(xs: &ExponentSet, l: &GuidingForm) -> CliResult<usize> {
    Ok(match metrics(xs, l)?.bound {
        Some(b) => usize::try_from(b).unwrap_or(usize::MAX),
        None => FALLBACK_MAX_STEPS,
    })
}

fn emit(out: &mut dyn Write, text: &str) -> CliResult<()> {
    out.write_all(text.as_bytes())?;
    Ok(())
}

fn emit_json(out: &mut dyn Write, value: &serde_json::Value) -> CliResult<()> {
    let text = serde_json::to_string_pretty(value).map_err(std::io::Error::from)?;
    emit(out, &text)?;
    emit(out, "\n")
}

/// Validates `cfg`, reads its input, runs the command and writes the report.
pub fn execute(cfg: &RunConfig, out: &mut dyn Write) -> CliResult<Outcome> {
    cfg.validate()?;
    let xs = parse_exponents(&read_input(&cfg.input)?)?;
    let format = cfg.format();
    match cfg.command {
        Command::Run => run_command(cfg, &xs, format, out),
        Command::Uniformize => uniformize_command(cfg, &xs, format, out),
        Command::Bound => {
            let l = guiding_form(cfg)?;
            let m = metrics(&xs, &l)?;
            match format {
                Format::Json => emit_json(out, &report::metrics_json(&m, &l))?,
                _ => emit(out, &report::metrics_text(&m))?,
            }
            Ok(Outcome::Complete)
        }
        Command::Hilbert => {
            let g = minimal_generators(&xs)?;
            match format {
                Format::Json => emit_json(
                    out,
                    &serde_json::json!({ "generators": report::points_json(&g) }),
                )?,
                _ => emit(out, &format!("{g}\n"))?,
            }
            Ok(Outcome::Complete)
        }
        Command::Check => {
            let l = cfg.form.as_ref().map(|_| guiding_form(cfg)).transpose()?;
            match &l {
                Some(l) => validate_input(&xs, l)?,
                None => validate_surface(&xs)?,
            }
            let sep = separating_form(&xs).expect("validated sets are pointed");
            match format {
                Format::Json => emit_json(
                    out,
                    &serde_json::json!({
                        "valid": true,
                        "points": xs.len(),
                        "lattice_index": lattice_index(&xs).to_string(),
                        "separating_form": sep.to_string(),
                    }),
                )?,
                _ => emit(
                    out,
                    &format!(
                        "valid: {} points, lattice index 1, positive form {sep}{}\n",
                        xs.len(),
                        if l.is_some() {
                            ", L-values non-negative"
                        } else {
                            ""
                        }
                    ),
                )?,
            }
            Ok(Outcome::Complete)
        }
        Command::Explore | Command::ExportDot => {
            let tree = explore_with_limit(&xs, cfg.depth, cfg.policy, cfg.node_limit)?;
            match format {
                Format::Dot => emit(out, &to_dot(&tree))?,
                Format::Json => emit_json(out, &to_json(&tree))?,
                Format::Text => emit(out, &report::tree_text(&tree))?,
            }
            Ok(Outcome::Complete)
        }
    }
}

fn run_command(
    cfg: &RunConfig,
    xs: &ExponentSet,
    format: Format,
    out: &mut dyn Write,
) -> CliResult<Outcome> {
    let l = guiding_form(cfg)?;
    validate_input(xs, &l)?;
    let max_steps = match cfg.max_steps {
        Some(n) => n,
        None => default_max_steps(xs, &l)?,
    };
    let opts = RunOptions {
        policy: cfg.policy,
        tie: cfg.tie,
        max_steps,
        renormalize: cfg.renormalize,
    };
    let trace = run(xs, &l, &opts)?;
    match format {
        Format::Json => {
            let mut v = report::trace_json(&trace);
            v["input"] = report::points_json(xs);
            v["form"] = l.to_string().into();
            v["max_steps"] = max_steps.into();
            emit_json(out, &v)?;
        }
        _ => {
            emit(out, &format!("input: {xs}\nform: {l}\n"))?;
            emit(out, &report::trace_text(&trace))?;
        }
    }
    Ok(Outcome::of([trace.status]))
}

fn uniformize_command(
    cfg: &RunConfig,
    xs: &ExponentSet,
    format: Format,
    out: &mut dyn Write,
) -> CliResult<Outcome> {
    let (nu1, nu2) = (
        cfg.nu1.as_deref().unwrap_or_default(),
        cfg.nu2.as_deref().unwrap_or_default(),
    );
    let v: ValuationSpec = parse_valuation(nu1, nu2)?;
    let (l, _) = to_forms(&v)?;
    let max_steps = match cfg.max_steps {
        Some(n) => n,
        None => default_max_steps(xs, &l).unwrap_or(FALLBACK_MAX_STEPS),
    };
    let traces: Vec<Trace> = uniformize(xs, &v, max_steps, cfg.policy)?;
    match format {
        Format::Json => {
            let branches: Vec<serde_json::Value> = traces.iter().map(report::trace_json).collect();
            emit_json(
                out,
                &serde_json::json!({
                    "input": report::points_json(xs),
                    "form": l.to_string(),
                    "max_steps": max_steps,
                    "branches": branches,
                }),
            )?;
        }
        _ => {
            emit(out, &format!("input: {xs}\nform: {l}\n"))?;
            for (k, t) in traces.iter().enumerate() {
                if traces.len() > 1 {
                    emit(out, &format!("branch {}:\n", k + 1))?;
                }
                emit(out, &report::trace_text(t))?;
            }
        }
    }
    Ok(Outcome::of(traces.iter().map(|t| t.status)))
}
