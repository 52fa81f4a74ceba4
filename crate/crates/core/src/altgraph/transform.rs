//! The totalizing transforms `G♯` (sink slice) and `G♭` (serialized
//! universal successors with looped copies).

use std::collections::{BTreeMap, HashSet};

use serde::Serialize;

use super::{validate_restricted, AltSliceGraph, NodeId, Quantifier, SliceViolation};
use crate::kripke::KripkeModel;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum NodeKind {
    Original(NodeId),
    Copy(NodeId),
    Sink,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TotalNode {
    pub name: String,
    pub slice: usize,
    pub kind: NodeKind,
}

/// A total graph derived from an alternating slice graph. Node `i < |V|` is
/// always the original node `NodeId(i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TotalGraph {
    nodes: Vec<TotalNode>,
    succ: Vec<Vec<usize>>,
    copies: Vec<Option<usize>>,
    sink: Option<usize>,
    order: BTreeMap<NodeId, (NodeId, NodeId)>,
}

impl TotalGraph {
    fn from_originals(g: &AltSliceGraph) -> TotalGraph {
        let nodes = g
            .nodes()
            .map(|v| TotalNode {
                name: g.name(v).to_string(),
                slice: g.slice_of(v),
                kind: NodeKind::Original(v),
            })
            .collect::<Vec<_>>();
        let mut out = TotalGraph {
            succ: vec![Vec::new(); nodes.len()],
            copies: vec![None; nodes.len()],
            nodes,
            sink: None,
            order: BTreeMap::new(),
        };
        for v in g.nodes() {
            for &z in g.successors(v) {
                out.add_edge(v.0, z.0);
            }
        }
        out
    }

    fn push(&mut self, node: TotalNode) -> usize {
        self.nodes.push(node);
        self.succ.push(Vec::new());
        self.nodes.len() - 1
    }

    fn add_edge(&mut self, from: usize, to: usize) {
        if !self.succ[from].contains(&to) {
            self.succ[from].push(to);
        }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[TotalNode] {
        &self.nodes
    }

    pub fn node(&self, i: usize) -> &TotalNode {
        &self.nodes[i]
    }

    pub fn successors(&self, i: usize) -> &[usize] {
        &self.succ[i]
    }

    pub fn edge_count(&self) -> usize {
        self.succ.iter().map(Vec::len).sum()
    }

    pub fn has_edge(&self, from: usize, to: usize) -> bool {
        self.succ[from].contains(&to)
    }

    pub fn has_self_loop(&self, i: usize) -> bool {
        self.has_edge(i, i)
    }

    pub fn is_total(&self) -> bool {
        self.succ.iter().all(|s| !s.is_empty())
    }

    /// Index of the copy `v̂` (only in `G♭`).
    pub fn copy_of(&self, v: NodeId) -> Option<usize> {
        self.copies[v.0]
    }

    /// Index of the sink `e` (only in `G♯`).
    pub fn sink(&self) -> Option<usize> {
        self.sink
    }

    /// The fixed successor order `(v_{u,1}, v_{u,2})` of a universal node
    /// below the last slice (only in `G♭`).
    pub fn successor_order(&self, u: NodeId) -> Option<(NodeId, NodeId)> {
        self.order.get(&u).copied()
    }

    pub fn slice_count(&self) -> usize {
        self.nodes.iter().map(|n| n.slice + 1).max().unwrap_or(0)
    }

    /// Unlabelled Kripke model with the same node indices.
    pub fn to_kripke(&self) -> KripkeModel {
        let mut m = KripkeModel::new();
        for n in &self.nodes {
            m.add_state(n.name.clone());
        }
        for (i, succ) in self.succ.iter().enumerate() {
            for &j in succ {
                m.add_edge(crate::kripke::StateId(i), crate::kripke::StateId(j));
            }
        }
        m
    }
}

fn fresh_name(taken: &HashSet<&str>, base: &str) -> String {
    let mut name = base.to_string();
    while taken.contains(name.as_str()) {
        name.push('\'');
    }
    name
}

/// `G♯`: adds the singleton slice `V_{m+1} = {e}` and the edges
/// `(V_m ∪ {e}) × {e}`.
pub fn sharp(g: &AltSliceGraph) -> TotalGraph {
    let mut out = TotalGraph::from_originals(g);
    let taken: HashSet<&str> = g.nodes().map(|v| g.name(v)).collect();
    let m = g.depth();
    let e = out.push(TotalNode {
        name: fresh_name(&taken, "e"),
        slice: if g.slice_count() == 0 { 0 } else { m + 1 },
        kind: NodeKind::Sink,
    });
    for &v in g.slice(m) {
        out.add_edge(v.0, e);
    }
    out.add_edge(e, e);
    out.sink = Some(e);
    out
}

/// `G♭`: every node `v` gets a copy `v̂` in its own slice. Edges leaving
/// existential nodes are kept; a universal node `u` with successors
/// `v_{u,1} < v_{u,2}` gets `u → v_{u,1}` and the chain
/// `v_{u,1} → v̂_{u,1} → v_{u,2} → v̂_{u,2}` with a loop on `v̂_{u,2}`;
/// every `u ∈ V_∀ ∪ V_0` gets `u → û` with a loop on `û`.
pub fn flat(g: &AltSliceGraph) -> Result<TotalGraph, Vec<SliceViolation>> {
    validate_restricted(g)?;
    let n = g.len();
    let mut out = TotalGraph::from_originals(g);
    // drop the universal edges; they are re-added in serialized form
    for u in g.nodes() {
        if g.quantifier(u) == Quantifier::Forall {
            out.succ[u.0].clear();
        }
    }
    for v in g.nodes() {
        let c = out.push(TotalNode {
            name: format!("{}^", g.name(v)),
            slice: g.slice_of(v),
            kind: NodeKind::Copy(v),
        });
        out.copies[v.0] = Some(c);
        debug_assert_eq!(c, n + v.0);
    }
    let hat = |v: NodeId| n + v.0;
    for u in g.nodes() {
        let universal = g.quantifier(u) == Quantifier::Forall;
        if universal && g.slice_of(u) < g.depth() {
            let ordered = g.ordered_successors(u);
            let (v1, v2) = (ordered[0], ordered[1]);
            out.order.insert(u, (v1, v2));
            out.add_edge(u.0, v1.0);
            out.add_edge(v1.0, hat(v1));
            out.add_edge(hat(v1), v2.0);
            out.add_edge(v2.0, hat(v2));
            out.add_edge(hat(v2), hat(v2));
        }
        if universal || g.slice_of(u) == 0 {
            out.add_edge(u.0, hat(u));
            out.add_edge(hat(u), hat(u));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sharp_of_single_node() {
        let mut g = AltSliceGraph::new();
        let s = g.add_node("s", 0);
        g.set_start(s);
        let t = sharp(&g);
        assert_eq!(t.len(), 2);
        assert_eq!(t.node(1).name, "e");
        assert!(t.has_edge(0, 1) && t.has_edge(1, 1));
        assert_eq!(t.edge_count(), 2);
    }

    #[test]
    fn sink_name_avoids_collisions() {
        let mut g = AltSliceGraph::new();
        let s = g.add_node("e", 0);
        g.set_start(s);
        assert_eq!(sharp(&g).node(1).name, "e'");
    }

    #[test]
    fn flat_of_single_node() {
        let mut g = AltSliceGraph::new();
        let s = g.add_node("s", 0);
        g.set_start(s);
        let t = flat(&g).unwrap();
        assert_eq!(t.len(), 2);
        assert_eq!(t.node(1).name, "s^");
        assert_eq!(t.edge_count(), 2);
        assert!(t.has_edge(0, 1) && t.has_self_loop(1));
    }

    #[test]
    fn flat_serializes_universal_successors() {
        let mut g = AltSliceGraph::new();
        let s = g.add_node("s", 0);
        let u = g.add_node("u", 1);
        let b = g.add_node("b", 2);
        let a = g.add_node("a", 2);
        g.set_start(s);
        g.add_edge(s, u);
        g.add_edge(u, b);
        g.add_edge(u, a);
        let t = flat(&g).unwrap();
        assert!(t.is_total());
        assert_eq!(t.successor_order(u), Some((a, b)));
        let (ha, hb, hu) = (t.copy_of(a).unwrap(), t.copy_of(b).unwrap(), t.copy_of(u).unwrap());
        assert_eq!(t.successors(u.0), &[a.0, hu]);
        assert_eq!(t.successors(a.0), &[ha]);
        assert_eq!(t.successors(ha), &[b.0]);
        assert_eq!(t.successors(b.0), &[hb]);
        assert!(t.has_self_loop(hb) && t.has_self_loop(hu));
        assert!(!t.has_self_loop(ha));
    }

    #[test]
    fn flat_rejects_unrestricted_input() {
        let mut g = AltSliceGraph::new();
        let s = g.add_node("s", 0);
        let u = g.add_node("u", 1);
        let a = g.add_node("a", 2);
        g.set_start(s);
        g.add_edge(s, u);
        g.add_edge(u, a);
        assert!(flat(&g).is_err());
    }
}
