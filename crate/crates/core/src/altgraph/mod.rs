//! Alternating slice graphs: the accessibility predicate `apath`, validators
//! for the restricted and log-depth problem variants, and the two
//! totalizing transforms used to turn graphs into Kripke models.

mod digraph;
mod format;
mod generate;
mod transform;

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::Serialize;

pub use digraph::{parse_gap, random_gap, reachable, write_gap, Digraph, GapInstance};
pub use format::{parse_slice_graph, write_slice_graph, FormatError};
pub use generate::{gen_random, GenError, GenParams, Shape};
pub use transform::{flat, sharp, NodeKind, TotalGraph, TotalNode};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct NodeId(pub usize);

impl NodeId {
    pub fn index(self) -> usize {
        self.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Quantifier {
    Exists,
    Forall,
}

impl Quantifier {
    /// Even slices are existential, odd slices universal.
    pub fn of_slice(slice: usize) -> Quantifier {
        if slice.is_multiple_of(2) {
            Quantifier::Exists
        } else {
            Quantifier::Forall
        }
    }
}

/// A sliced and/or graph `G = (V, E)` with slices `V_0 … V_m`, a start node
/// `s ∈ V_0` and targets `T ⊆ V_m`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AltSliceGraph {
    names: Vec<String>,
    index: HashMap<String, NodeId>,
    slice_of: Vec<usize>,
    slices: Vec<Vec<NodeId>>,
    succ: Vec<Vec<NodeId>>,
    pred: Vec<Vec<NodeId>>,
    start: Option<NodeId>,
    targets: BTreeSet<NodeId>,
}

impl AltSliceGraph {
    pub fn new() -> AltSliceGraph {
        AltSliceGraph::default()
    }

    pub fn add_node(&mut self, name: impl Into<String>, slice: usize) -> NodeId {
        let name = name.into();
        let id = NodeId(self.names.len());
        self.index.entry(name.clone()).or_insert(id);
        self.names.push(name);
        self.slice_of.push(slice);
        if self.slices.len() <= slice {
            self.slices.resize(slice + 1, Vec::new());
        }
        self.slices[slice].push(id);
        self.succ.push(Vec::new());
        self.pred.push(Vec::new());
        id
    }

    pub fn add_edge(&mut self, from: NodeId, to: NodeId) {
        if !self.succ[from.0].contains(&to) {
            self.succ[from.0].push(to);
            self.pred[to.0].push(from);
        }
    }

    pub fn set_start(&mut self, node: NodeId) {
        self.start = Some(node);
    }

    pub fn add_target(&mut self, node: NodeId) {
        self.targets.insert(node);
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

    pub fn edge_count(&self) -> usize {
        self.succ.iter().map(Vec::len).sum()
    }

    /// Index `m` of the last slice.
    pub fn depth(&self) -> usize {
        self.slices.len().saturating_sub(1)
    }

    pub fn slice_count(&self) -> usize {
        self.slices.len()
    }

    pub fn slice(&self, i: usize) -> &[NodeId] {
        self.slices.get(i).map_or(&[], Vec::as_slice)
    }

    pub fn slice_of(&self, id: NodeId) -> usize {
        self.slice_of[id.0]
    }

    pub fn quantifier(&self, id: NodeId) -> Quantifier {
        Quantifier::of_slice(self.slice_of[id.0])
    }

    pub fn successors(&self, id: NodeId) -> &[NodeId] {
        &self.succ[id.0]
    }

    pub fn predecessors(&self, id: NodeId) -> &[NodeId] {
        &self.pred[id.0]
    }

    pub fn start(&self) -> Option<NodeId> {
        self.start
    }

    pub fn targets(&self) -> &BTreeSet<NodeId> {
        &self.targets
    }

    pub fn is_target(&self, id: NodeId) -> bool {
        self.targets.contains(&id)
    }

    /// Successors ordered by ascending node id (the fixed order used for the
    /// first/second successor of universal nodes).
    pub fn ordered_successors(&self, id: NodeId) -> Vec<NodeId> {
        let mut out = self.succ[id.0].clone();
        out.sort_by(|a, b| self.names[a.0].cmp(&self.names[b.0]));
        out
    }
}

/// `apath_G(x, T)` for every node, evaluated slice by slice from the last.
///
/// Successors are taken from the edge relation regardless of their slice.
/// Nodes of the last slice are accepting iff they are targets; an
/// existential node needs one accepting successor, a universal node needs
/// all successors accepting.
pub fn apath_all(g: &AltSliceGraph) -> Vec<bool> {
    let mut value = vec![false; g.len()];
    let m = g.depth();
    for i in (0..g.slice_count()).rev() {
        for &x in g.slice(i) {
            value[x.0] = if i == m {
                g.is_target(x)
            } else {
                let mut succ = g.successors(x).iter().map(|z| value[z.0]);
                match g.quantifier(x) {
                    Quantifier::Exists => succ.any(|v| v),
                    Quantifier::Forall => succ.all(|v| v),
                }
            };
        }
    }
    value
}

pub fn apath(g: &AltSliceGraph, x: NodeId) -> bool {
    apath_all(g)[x.0]
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum SliceViolation {
    NoSlices,
    DuplicateNode(String),
    MissingStart,
    StartOutsideFirstSlice(String),
    TargetOutsideLastSlice(String),
    EdgeSkipsSlice { from: String, to: String },
    NoSuccessor(String),
    OddDepth(usize),
    UniversalOutdegree { node: String, outdegree: usize },
    ExistentialIndegree { node: String, indegree: usize },
    TooDeep { depth: usize, nodes: usize, bound: usize },
}

impl fmt::Display for SliceViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SliceViolation::NoSlices => write!(f, "graph has no slices"),
            SliceViolation::DuplicateNode(n) => write!(f, "node `{n}` declared more than once"),
            SliceViolation::MissingStart => write!(f, "no start node"),
            SliceViolation::StartOutsideFirstSlice(n) => {
                write!(f, "start node `{n}` is not in slice 0")
            }
            SliceViolation::TargetOutsideLastSlice(n) => {
                write!(f, "target `{n}` is not in the last slice")
            }
            SliceViolation::EdgeSkipsSlice { from, to } => {
                write!(f, "edge `{from} -> {to}` does not go to the next slice")
            }
            SliceViolation::NoSuccessor(n) => write!(f, "node `{n}` has no successor"),
            SliceViolation::OddDepth(m) => write!(f, "last slice index {m} is odd"),
            SliceViolation::UniversalOutdegree { node, outdegree } => {
                write!(f, "universal node `{node}` has outdegree {outdegree}, expected 2")
            }
            SliceViolation::ExistentialIndegree { node, indegree } => {
                write!(f, "existential node `{node}` has indegree {indegree}, expected 1")
            }
            SliceViolation::TooDeep { depth, nodes, bound } => write!(
                f,
                "depth {depth} exceeds floor(log2 {nodes}) = {bound}"
            ),
        }
    }
}

fn report(violations: Vec<SliceViolation>) -> Result<(), Vec<SliceViolation>> {
    if violations.is_empty() {
        Ok(())
    } else {
        Err(violations)
    }
}

/// Invariants shared by every problem variant: slice-respecting edges,
/// positive outdegree below the last slice, start in `V_0`, targets in `V_m`.
pub fn validate_slice_graph(g: &AltSliceGraph) -> Result<(), Vec<SliceViolation>> {
    report(base_violations(g))
}

fn base_violations(g: &AltSliceGraph) -> Vec<SliceViolation> {
    let mut out = Vec::new();
    if g.slice_count() == 0 {
        out.push(SliceViolation::NoSlices);
        return out;
    }
    let mut seen = BTreeSet::new();
    for name in &g.names {
        if !seen.insert(name.as_str()) {
            out.push(SliceViolation::DuplicateNode(name.clone()));
        }
    }
    match g.start {
        None => out.push(SliceViolation::MissingStart),
        Some(s) if g.slice_of(s) != 0 => {
            out.push(SliceViolation::StartOutsideFirstSlice(g.name(s).to_string()))
        }
        Some(_) => {}
    }
    let m = g.depth();
    for &t in &g.targets {
        if g.slice_of(t) != m {
            out.push(SliceViolation::TargetOutsideLastSlice(g.name(t).to_string()));
        }
    }
    for x in g.nodes() {
        for &z in g.successors(x) {
            if g.slice_of(z) != g.slice_of(x) + 1 {
                out.push(SliceViolation::EdgeSkipsSlice {
                    from: g.name(x).to_string(),
                    to: g.name(z).to_string(),
                });
            }
        }
        if g.slice_of(x) < m && g.successors(x).is_empty() {
            out.push(SliceViolation::NoSuccessor(g.name(x).to_string()));
        }
    }
    out
}

/// A valid ASAGAP instance: a valid slice graph whose last slice index is even.
pub fn validate_asagap(g: &AltSliceGraph) -> Result<(), Vec<SliceViolation>> {
    let mut out = base_violations(g);
    if g.slice_count() > 0 && g.depth() % 2 == 1 {
        out.push(SliceViolation::OddDepth(g.depth()));
    }
    report(out)
}

/// The bounded-degree variant: universal nodes below the last slice have
/// outdegree exactly 2, existential nodes outside `V_0` have indegree exactly 1.
pub fn validate_restricted(g: &AltSliceGraph) -> Result<(), Vec<SliceViolation>> {
    let mut out = base_violations(g);
    let m = g.depth();
    for x in g.nodes() {
        let slice = g.slice_of(x);
        match g.quantifier(x) {
            Quantifier::Forall if slice < m && g.successors(x).len() != 2 => {
                out.push(SliceViolation::UniversalOutdegree {
                    node: g.name(x).to_string(),
                    outdegree: g.successors(x).len(),
                });
            }
            Quantifier::Exists if slice > 0 && g.predecessors(x).len() != 1 => {
                out.push(SliceViolation::ExistentialIndegree {
                    node: g.name(x).to_string(),
                    indegree: g.predecessors(x).len(),
                });
            }
            _ => {}
        }
    }
    report(out)
}

/// `⌊log₂ n⌋`, with `n = 0` mapped to 0.
pub fn log_depth_bound(nodes: usize) -> usize {
    if nodes == 0 {
        0
    } else {
        nodes.ilog2() as usize
    }
}

/// A valid slice graph with `m ≤ ⌊log₂ |V|⌋`.
pub fn validate_logdepth(g: &AltSliceGraph) -> Result<(), Vec<SliceViolation>> {
    let mut out = base_violations(g);
    let bound = log_depth_bound(g.len());
    if g.slice_count() > 0 && g.depth() > bound {
        out.push(SliceViolation::TooDeep {
            depth: g.depth(),
            nodes: g.len(),
            bound,
        });
    }
    report(out)
}
