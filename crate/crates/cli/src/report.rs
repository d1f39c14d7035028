//! Text and JSON renderings of engine results. JSON carries lattice integers
//! and L-values as decimal strings; counts and indices stay numbers.

use std::fmt::Write as _;

use serde_json::{json, Value};
use toric_nash::engine::{Metrics, RunStatus, StepRecord, Trace};
use toric_nash::explorer::{ChartTree, NodeStatus};
use toric_nash::lattice::{ExponentSet, GuidingForm, QuadExt, UnimodularMap};

pub fn points_json(xs: &ExponentSet) -> Value {
    xs.iter()
        .map(|p| json!([p.x.to_string(), p.y.to_string()]))
        .collect()
}

fn map_json(t: &UnimodularMap) -> Value {
    let m = t.entries();
    json!([
        [m[0][0].to_string(), m[0][1].to_string()],
        [m[1][0].to_string(), m[1][1].to_string()]
    ])
}

fn values_json(values: &[QuadExt]) -> Value {
    values
        .iter()
        .map(|v| Value::String(v.to_string()))
        .collect()
}

fn join(values: &[QuadExt]) -> String {
    values
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn status_str(s: RunStatus) -> &'static str {
    match s {
        RunStatus::Terminated => "terminated",
        RunStatus::StepLimit => "step-limit",
        RunStatus::NoValidPair => "no-valid-pair",
    }
}

fn steps_phrase(n: usize) -> String {
    if n == 1 {
        "1 step".into()
    } else {
        format!("{n} steps")
    }
}

fn step_text(out: &mut String, k: usize, s: &StepRecord) {
    let (p, q) = s.chosen_pair.points(&s.input_set);
    let _ = writeln!(out, "step {k}: pair {} = {p} {q}", s.chosen_pair);
    let _ = writeln!(out, "  L-values: {}", join(&s.l_values));
    let _ = writeln!(out, "  chart: {}", s.raw_chart);
    let _ = writeln!(out, "  reduced: {}", s.reduced_chart);
    if !s.applied_map.is_identity() {
        let _ = writeln!(out, "  map: {} -> {}", s.applied_map, s.output_set());
    }
}

pub fn summary_line(t: &Trace) -> String {
    let n = steps_phrase(t.len());
    let g = &t.final_generators;
    match t.status {
        RunStatus::Terminated => format!("terminated in {n}; generators: {g}"),
        RunStatus::StepLimit => format!("step limit reached after {n}; generators: {g}"),
        RunStatus::NoValidPair => format!("no valid pair after {n}; generators: {g}"),
    }
}

pub fn trace_text(t: &Trace) -> String {
    let mut out = String::new();
    for (k, s) in t.steps.iter().enumerate() {
        step_text(&mut out, k + 1, s);
    }
    out.push_str(&summary_line(t));
    out.push('\n');
    out
}

pub fn trace_json(t: &Trace) -> Value {
    let steps: Vec<Value> = t
        .steps
        .iter()
        .map(|s| {
            let (p, q) = s.chosen_pair.points(&s.input_set);
            json!({
                "input": points_json(&s.input_set),
                "pair": [s.chosen_pair.i + 1, s.chosen_pair.j + 1],
                "chosen": [[p.x.to_string(), p.y.to_string()], [q.x.to_string(), q.y.to_string()]],
                "l_values": values_json(&s.l_values),
                "raw_chart": points_json(&s.raw_chart),
                "reduced_chart": points_json(&s.reduced_chart),
                "map": map_json(&s.applied_map),
                "output": points_json(&s.output_set()),
            })
        })
        .collect();
    json!({
        "status": status_str(t.status),
        "steps": steps,
        "final_set": points_json(&t.final_set),
        "final_generators": points_json(&t.final_generators),
    })
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref()
        .map_or_else(|| "none".into(), ToString::to_string)
}

fn opt_json<T: ToString>(v: &Option<T>) -> Value {
    v.as_ref()
        .map_or(Value::Null, |x| Value::String(x.to_string()))
}

pub fn metrics_text(m: &Metrics) -> String {
    format!(
        "u0={} v0={} bound={}\nu1={} v1={}\n",
        m.u0,
        m.v0,
        opt(&m.bound),
        opt(&m.u1),
        opt(&m.v1)
    )
}

pub fn metrics_json(m: &Metrics, l: &GuidingForm) -> Value {
    json!({
        "form": l.to_string(),
        "u0": m.u0.to_string(),
        "u1": opt_json(&m.u1),
        "v0": m.v0.to_string(),
        "v1": opt_json(&m.v1),
        "bound": opt_json(&m.bound),
    })
}

pub fn tree_text(t: &ChartTree) -> String {
    let mut out = String::new();
    let counts: Vec<String> = [
        NodeStatus::Smooth,
        NodeStatus::Interior,
        NodeStatus::DeadEnd,
        NodeStatus::DepthCapped,
        NodeStatus::TruncatedByNodeLimit,
    ]
    .into_iter()
    .map(|s| format!("{} {}", s.as_str(), t.count(s)))
    .collect();
    let _ = writeln!(out, "nodes: {} ({})", t.nodes.len(), counts.join(", "));
    for n in &t.nodes {
        let _ = writeln!(
            out,
            "n{} depth {} {}: {}",
            n.id,
            n.depth,
            n.status.as_str(),
            n.generators
        );
        for (e, child) in t.children(n.id) {
            let _ = writeln!(out, "  pair {} -> n{}", e.pair, child.id);
        }
    }
    out
}
