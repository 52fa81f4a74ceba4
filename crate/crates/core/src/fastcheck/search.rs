//! Graph searches shared by the fragment engines.

use std::collections::VecDeque;

use petgraph::algo::tarjan_scc;
use petgraph::graph::{DiGraph, NodeIndex};

use crate::kripke::{KripkeModel, StateId, StateSet};

/// States reachable from `start` along paths that stay inside `region`
/// (`start` itself included when it lies in `region`).
pub fn reach_within(model: &KripkeModel, region: &StateSet, start: StateId) -> StateSet {
    let mut seen = model.empty_set();
    if !region.contains(start) {
        return seen;
    }
    seen.insert(start);
    let mut queue = VecDeque::from([start]);
    while let Some(w) = queue.pop_front() {
        for &v in model.successors(w) {
            if region.contains(v) && seen.insert(v) {
                queue.push_back(v);
            }
        }
    }
    seen
}

/// States `w` with a path `w = v_1 … v_n` (`n ≥ 1`) such that `v_n ∈ target`
/// and `v_1 … v_{n-1} ∈ region`.
pub fn backward_reach(model: &KripkeModel, region: &StateSet, target: &StateSet) -> StateSet {
    let mut seen = target.clone();
    let mut queue: VecDeque<StateId> = target.iter().collect();
    while let Some(w) = queue.pop_front() {
        for &p in model.predecessors(w) {
            if region.contains(p) && seen.insert(p) {
                queue.push_back(p);
            }
        }
    }
    seen
}

/// States of `region` that lie on a cycle of the subgraph induced by `region`.
pub fn cyclic_within(model: &KripkeModel, region: &StateSet) -> StateSet {
    let mut graph: DiGraph<StateId, ()> = DiGraph::new();
    let mut node = vec![None; model.len()];
    for w in region.iter() {
        node[w.index()] = Some(graph.add_node(w));
    }
    for w in region.iter() {
        for &v in model.successors(w) {
            if let (Some(a), Some(b)) = (node[w.index()], node[v.index()]) {
                graph.add_edge(a, b, ());
            }
        }
    }
    let mut out = model.empty_set();
    for scc in tarjan_scc(&graph) {
        let looped = |n: &NodeIndex| graph.contains_edge(*n, *n);
        if scc.len() > 1 || scc.iter().any(looped) {
            for n in scc {
                out.insert(graph[n]);
            }
        }
    }
    out
}

/// States with an infinite path inside `region` (a lasso: a path within the
/// region into a cycle within the region).
pub fn infinite_within(model: &KripkeModel, region: &StateSet) -> StateSet {
    backward_reach(model, region, &cyclic_within(model, region))
}

#[cfg(test)]
mod tests {
    use super::*;

    // a -> b -> c -> b, d -> d ; region {a, b, c}
    fn model() -> KripkeModel {
        let mut m = KripkeModel::new();
        for n in ["a", "b", "c", "d"] {
            m.add_state(n);
        }
        m.add_edge_by_name("a", "b").unwrap();
        m.add_edge_by_name("b", "c").unwrap();
        m.add_edge_by_name("c", "b").unwrap();
        m.add_edge_by_name("d", "d").unwrap();
        m
    }

    #[test]
    fn lassos() {
        let m = model();
        let region = StateSet::from_ids(4, [StateId(0), StateId(1), StateId(2)]);
        assert_eq!(infinite_within(&m, &region), region);
        let region = StateSet::from_ids(4, [StateId(0), StateId(1)]);
        assert!(infinite_within(&m, &region).is_empty());
        let d = StateSet::from_ids(4, [StateId(3)]);
        assert_eq!(cyclic_within(&m, &d), d);
    }

    #[test]
    fn reachability() {
        let m = model();
        let all = m.full_set();
        assert_eq!(reach_within(&m, &all, StateId(0)).len(), 3);
        let target = StateSet::from_ids(4, [StateId(2)]);
        let only_a = StateSet::from_ids(4, [StateId(0)]);
        assert_eq!(backward_reach(&m, &only_a, &target), target);
        assert_eq!(backward_reach(&m, &all, &target).len(), 3);
    }
}
