//! Breadth-first enumeration of the chart tree over every valid pair.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::engine::{
    chart, pairs_s, reduce, smooth_generators, validate_surface, ChartPair, Policy,
};
use crate::error::Result;
use crate::lattice::{minimal_generators, ExponentSet};

pub const DEFAULT_NODE_LIMIT: usize = 100_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NodeStatus {
    /// Two minimal generators; a leaf.
    Smooth,
    /// Expanded, with at least one child.
    Interior,
    /// Not smooth, at the depth cap, never expanded.
    DepthCapped,
    /// Not smooth, but no pair has a valid chart.
    DeadEnd,
    /// Not expanded because the node limit was reached.
    TruncatedByNodeLimit,
}

impl NodeStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            NodeStatus::Smooth => "smooth",
            NodeStatus::Interior => "interior",
            NodeStatus::DepthCapped => "depth-capped",
            NodeStatus::DeadEnd => "dead-end",
            NodeStatus::TruncatedByNodeLimit => "truncated",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeNode {
    pub id: usize,
    pub depth: usize,
    /// The chart after policy reduction (the root set is kept as given).
    pub set: ExponentSet,
    pub generators: ExponentSet,
    pub status: NodeStatus,
    /// Pairs of `S` whose chart was rejected because the origin lies in its hull.
    pub hull_rejected: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeEdge {
    pub from: usize,
    pub to: usize,
    pub pair: ChartPair,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChartTree {
    pub root: ExponentSet,
    pub policy: Policy,
    pub nodes: Vec<TreeNode>,
    pub edges: Vec<TreeEdge>,
}

impl ChartTree {
    pub fn node(&self, id: usize) -> &TreeNode {
        &self.nodes[id]
    }

    pub fn children(&self, id: usize) -> impl Iterator<Item = (&TreeEdge, &TreeNode)> + '_ {
        self.edges
            .iter()
            .filter(move |e| e.from == id)
            .map(|e| (e, &self.nodes[e.to]))
    }

    pub fn count(&self, status: NodeStatus) -> usize {
        self.nodes.iter().filter(|n| n.status == status).count()
    }
}

struct Child {
    pair: ChartPair,
    set: ExponentSet,
    generators: ExponentSet,
}

struct Expansion {
    children: Vec<Child>,
    hull_rejected: usize,
}

fn expand(set: &ExponentSet, policy: Policy) -> Result<Expansion> {
    let pairs = pairs_s(set)?;
    let mut children: Vec<Child> = Vec::new();
    let mut hull_rejected = 0;
    for pair in pairs {
        let Ok(raw) = chart(set, pair) else {
            hull_rejected += 1;
            continue;
        };
        let reduced = reduce(&raw, policy)?;
        if children.iter().any(|c| c.set == reduced) {
            continue;
        }
        let generators = match policy {
            Policy::Hilbert => reduced.clone(),
            Policy::Raw => minimal_generators(&reduced)?,
        };
        children.push(Child {
            pair,
            set: reduced,
            generators,
        });
    }
    Ok(Expansion {
        children,
        hull_rejected,
    })
}

pub fn explore(xs: &ExponentSet, depth_cap: usize, policy: Policy) -> Result<ChartTree> {
    explore_with_limit(xs, depth_cap, policy, DEFAULT_NODE_LIMIT)
}

/// Expands every node level by level. A level's expansions run in parallel
/// and are merged in node order, so the tree does not depend on scheduling.
pub fn explore_with_limit(
    xs: &ExponentSet,
    depth_cap: usize,
    policy: Policy,
    node_limit: usize,
) -> Result<ChartTree> {
    validate_surface(xs)?;
    let root_generators = minimal_generators(xs)?;
    let root_smooth = smooth_generators(xs)?.is_some();
    let mut nodes = vec![TreeNode {
        id: 0,
        depth: 0,
        set: xs.clone(),
        generators: root_generators,
        status: if root_smooth {
            NodeStatus::Smooth
        } else {
            NodeStatus::DepthCapped
        },
        hull_rejected: 0,
    }];
    let mut edges = Vec::new();
    let mut frontier: Vec<usize> = if root_smooth { vec![] } else { vec![0] };
    let mut truncated = false;

    for depth in 0..depth_cap {
        if frontier.is_empty() || truncated {
            break;
        }
        let expansions: Vec<Expansion> = frontier
            .par_iter()
            .map(|&id| expand(&nodes[id].set, policy))
            .collect::<Result<_>>()?;
        let mut next = Vec::new();
        for (&id, exp) in frontier.iter().zip(expansions) {
            if truncated || nodes.len() + exp.children.len() > node_limit {
                truncated = true;
                nodes[id].status = NodeStatus::TruncatedByNodeLimit;
                continue;
            }
            nodes[id].hull_rejected = exp.hull_rejected;
            nodes[id].status = if exp.children.is_empty() {
                NodeStatus::DeadEnd
            } else {
                NodeStatus::Interior
            };
            for child in exp.children {
                let cid = nodes.len();
                let smooth = child.generators.len() == 2;
                nodes.push(TreeNode {
                    id: cid,
                    depth: depth + 1,
                    set: child.set,
                    generators: child.generators,
                    status: if smooth {
                        NodeStatus::Smooth
                    } else {
                        NodeStatus::DepthCapped
                    },
                    hull_rejected: 0,
                });
                edges.push(TreeEdge {
                    from: id,
                    to: cid,
                    pair: child.pair,
                });
                if !smooth {
                    next.push(cid);
                }
            }
        }
        frontier = next;
    }
    if truncated {
        for &id in &frontier {
            if nodes[id].status == NodeStatus::DepthCapped && nodes[id].depth < depth_cap {
                nodes[id].status = NodeStatus::TruncatedByNodeLimit;
            }
        }
    }
    Ok(ChartTree {
        root: xs.clone(),
        policy,
        nodes,
        edges,
    })
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Graphviz rendering: one node per chart labelled by its minimal
/// generators, one edge per pair labelled `i,j` (1-based).
pub fn to_dot(t: &ChartTree) -> String {
    let mut out = String::from("digraph chart_tree {\n  node [shape=box];\n");
    for n in &t.nodes {
        let style = match n.status {
            NodeStatus::Smooth => ", peripheries=2",
            NodeStatus::Interior => "",
            NodeStatus::DepthCapped | NodeStatus::TruncatedByNodeLimit => ", style=dashed",
            NodeStatus::DeadEnd => ", style=dotted",
        };
        let _ = writeln!(
            out,
            "  n{} [label=\"{}\"{}];",
            n.id,
            escape(&n.generators.to_string()),
            style
        );
    }
    for e in &t.edges {
        let _ = writeln!(out, "  n{} -> n{} [label=\"{}\"];", e.from, e.to, e.pair);
    }
    out.push_str("}\n");
    out
}

fn points_json(xs: &ExponentSet) -> Value {
    xs.iter()
        .map(|p| json!([p.x.to_string(), p.y.to_string()]))
        .collect()
}

/// JSON form of the tree; coordinates are decimal strings.
pub fn to_json(t: &ChartTree) -> Value {
    let nodes: Vec<Value> = t
        .nodes
        .iter()
        .map(|n| {
            json!({
                "id": n.id,
                "depth": n.depth,
                "points": points_json(&n.set),
                "generators": points_json(&n.generators),
                "status": n.status.as_str(),
                "hull_rejected": n.hull_rejected,
            })
        })
        .collect();
    let edges: Vec<Value> = t
        .edges
        .iter()
        .map(|e| json!({ "from": e.from, "to": e.to, "pair": [e.pair.i + 1, e.pair.j + 1] }))
        .collect();
    json!({ "nodes": nodes, "edges": edges })
}
