//! Plain directed graphs for graph accessibility (reachability) instances.
//!
//! ```text
//! nodes: a b c
//! edges:
//! a -> b
//! source: a
//! target: c
//! ```

use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::format::{err, strip, FormatError};
use super::NodeId;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Digraph {
    names: Vec<String>,
    index: HashMap<String, NodeId>,
    succ: Vec<Vec<NodeId>>,
}

impl Digraph {
    pub fn new() -> Digraph {
        Digraph::default()
    }

    pub fn add_node(&mut self, name: impl Into<String>) -> NodeId {
        let name = name.into();
        let id = NodeId(self.names.len());
        self.index.entry(name.clone()).or_insert(id);
        self.names.push(name);
        self.succ.push(Vec::new());
        id
    }

    pub fn add_edge(&mut self, from: NodeId, to: NodeId) {
        if !self.succ[from.0].contains(&to) {
            self.succ[from.0].push(to);
        }
    }

    pub fn node(&self, name: &str) -> Option<NodeId> {
        self.index.get(name).copied()
    }

    pub fn name(&self, id: NodeId) -> &str {
        &self.names[id.0]
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn nodes(&self) -> impl Iterator<Item = NodeId> {
        (0..self.names.len()).map(NodeId)
    }

    pub fn successors(&self, id: NodeId) -> &[NodeId] {
        &self.succ[id.0]
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GapInstance {
    pub graph: Digraph,
    pub source: NodeId,
    pub target: NodeId,
}

/// Is there a path (possibly empty) from `s` to `t`?
pub fn reachable(g: &Digraph, s: NodeId, t: NodeId) -> bool {
    let mut seen = vec![false; g.len()];
    let mut queue = VecDeque::from([s]);
    seen[s.0] = true;
    while let Some(x) = queue.pop_front() {
        if x == t {
            return true;
        }
        for &y in g.successors(x) {
            if !seen[y.0] {
                seen[y.0] = true;
                queue.push_back(y);
            }
        }
    }
    false
}

/// `nodes` nodes `n0 …`, each edge present with probability `density`;
/// source and target drawn uniformly.
pub fn random_gap(nodes: usize, density: f64, seed: u64) -> GapInstance {
    assert!(nodes > 0, "a reachability instance needs a node");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut graph = Digraph::new();
    for k in 0..nodes {
        graph.add_node(format!("n{k}"));
    }
    for a in 0..nodes {
        for b in 0..nodes {
            if rng.gen_bool(density) {
                graph.add_edge(NodeId(a), NodeId(b));
            }
        }
    }
    GapInstance {
        source: NodeId(rng.gen_range(0..nodes)),
        target: NodeId(rng.gen_range(0..nodes)),
        graph,
    }
}

pub fn parse_gap(text: &str) -> Result<GapInstance, FormatError> {
    let mut graph = Digraph::new();
    let mut source = None;
    let mut target = None;
    let mut in_edges = false;
    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = strip(raw);
        if line.is_empty() {
            continue;
        }
        let lookup = |g: &Digraph, name: &str| {
            g.node(name)
                .ok_or_else(|| err(lineno, format!("unknown node `{name}`")))
        };
        if line == "edges:" {
            in_edges = true;
        } else if let Some(rest) = line.strip_prefix("nodes:") {
            in_edges = false;
            for id in rest.split_whitespace() {
                if graph.node(id).is_some() {
                    return Err(err(lineno, format!("node `{id}` declared twice")));
                }
                graph.add_node(id);
            }
        } else if let Some(rest) = line.strip_prefix("source:") {
            in_edges = false;
            source = Some(lookup(&graph, rest.trim())?);
        } else if let Some(rest) = line.strip_prefix("target:") {
            in_edges = false;
            target = Some(lookup(&graph, rest.trim())?);
        } else if in_edges {
            let (a, b) = line
                .split_once("->")
                .ok_or_else(|| err(lineno, format!("expected `src -> dst`, found `{line}`")))?;
            let a = lookup(&graph, a.trim())?;
            let b = lookup(&graph, b.trim())?;
            graph.add_edge(a, b);
        } else {
            return Err(err(lineno, format!("unexpected line `{line}`")));
        }
    }
    let last = text.lines().count();
    Ok(GapInstance {
        source: source.ok_or_else(|| err(last, "missing `source:`"))?,
        target: target.ok_or_else(|| err(last, "missing `target:`"))?,
        graph,
    })
}

pub fn write_gap(inst: &GapInstance) -> String {
    let g = &inst.graph;
    let names: Vec<&str> = g.nodes().map(|v| g.name(v)).collect();
    let mut out = format!("nodes: {}\nedges:\n", names.join(" "));
    for v in g.nodes() {
        for &z in g.successors(v) {
            let _ = writeln!(out, "{} -> {}", g.name(v), g.name(z));
        }
    }
    let _ = writeln!(out, "source: {}", g.name(inst.source));
    let _ = writeln!(out, "target: {}", g.name(inst.target));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_and_reachability() {
        let text = "nodes: a b c\nedges:\na -> b\nsource: a\ntarget: c\n";
        let inst = parse_gap(text).unwrap();
        assert_eq!(write_gap(&inst), text);
        assert!(!reachable(&inst.graph, inst.source, inst.target));
        assert!(reachable(&inst.graph, inst.source, NodeId(1)));
        assert!(reachable(&inst.graph, inst.target, inst.target));
        let inst = random_gap(6, 0.3, 9);
        assert_eq!(parse_gap(&write_gap(&inst)).unwrap(), inst);
    }
}
