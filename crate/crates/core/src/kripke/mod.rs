//! Explicit-state Kripke models, their validation, and the text format.

mod format;

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use fixedbitset::FixedBitSet;
use serde::Serialize;
use thiserror::Error;

use crate::syntax::Formula;

pub use format::{parse_model, write_model, KripkeFile};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct StateId(pub usize);

impl StateId {
    pub fn index(self) -> usize {
        self.0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KripkeError {
    #[error("unknown state `{0}`")]
    UnknownState(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// A set of states of one model, stored as a bitset indexed by `StateId`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StateSet(FixedBitSet);

impl StateSet {
    pub fn empty(len: usize) -> StateSet {
        StateSet(FixedBitSet::with_capacity(len))
    }

    pub fn full(len: usize) -> StateSet {
        let mut bits = FixedBitSet::with_capacity(len);
        bits.insert_range(..);
        StateSet(bits)
    }

    pub fn from_ids(len: usize, ids: impl IntoIterator<Item = StateId>) -> StateSet {
        let mut set = StateSet::empty(len);
        for id in ids {
            set.insert(id);
        }
        set
    }

    pub fn universe(&self) -> usize {
        self.0.len()
    }

    pub fn contains(&self, id: StateId) -> bool {
        self.0.contains(id.0)
    }

    pub fn insert(&mut self, id: StateId) -> bool {
        !self.0.put(id.0)
    }

    pub fn remove(&mut self, id: StateId) {
        self.0.set(id.0, false);
    }

    pub fn len(&self) -> usize {
        self.0.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_clear()
    }

    pub fn iter(&self) -> impl Iterator<Item = StateId> + '_ {
        self.0.ones().map(StateId)
    }

    pub fn complement(&self) -> StateSet {
        let mut bits = self.0.clone();
        bits.toggle_range(..);
        StateSet(bits)
    }

    pub fn union(&self, other: &StateSet) -> StateSet {
        let mut bits = self.0.clone();
        bits.union_with(&other.0);
        StateSet(bits)
    }

    pub fn intersection(&self, other: &StateSet) -> StateSet {
        let mut bits = self.0.clone();
        bits.intersect_with(&other.0);
        StateSet(bits)
    }

    pub fn symmetric_difference(&self, other: &StateSet) -> StateSet {
        let mut bits = self.0.clone();
        bits.symmetric_difference_with(&other.0);
        StateSet(bits)
    }

    pub fn is_subset(&self, other: &StateSet) -> bool {
        self.0.is_subset(&other.0)
    }
}

/// A Kripke model `(W, R, ξ)`.
///
/// The model is built incrementally and may be malformed while under
/// construction (states without successors, repeated identifiers, labels
/// addressed to undeclared states); [`KripkeModel::validate`] reports all of
/// these. Checking algorithms assume a valid model.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct KripkeModel {
    names: Vec<String>,
    index: HashMap<String, StateId>,
    succ: Vec<Vec<StateId>>,
    pred: Vec<Vec<StateId>>,
    labels: Vec<BTreeSet<String>>,
    stray_labels: Vec<(String, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Violation {
    NoSuccessor(String),
    DuplicateState(String),
    LabelOnUnknownState { state: String, atom: String },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NoSuccessor(s) => write!(f, "state `{s}` has no successor"),
            Violation::DuplicateState(s) => write!(f, "state `{s}` is declared more than once"),
            Violation::LabelOnUnknownState { state, atom } => {
                write!(f, "atom `{atom}` assigned to undeclared state `{state}`")
            }
        }
    }
}

impl KripkeModel {
    pub fn new() -> KripkeModel {
        KripkeModel::default()
    }

    /// Appends a state. A repeated name still creates a new state (reported by
    /// `validate`); name lookups resolve to the first one.
    pub fn add_state(&mut self, name: impl Into<String>) -> StateId {
        let name = name.into();
        let id = StateId(self.names.len());
        self.index.entry(name.clone()).or_insert(id);
        self.names.push(name);
        self.succ.push(Vec::new());
        self.pred.push(Vec::new());
        self.labels.push(BTreeSet::new());
        id
    }

    pub fn add_edge(&mut self, from: StateId, to: StateId) {
        if !self.succ[from.0].contains(&to) {
            self.succ[from.0].push(to);
            self.pred[to.0].push(from);
        }
    }

    pub fn add_edge_by_name(&mut self, from: &str, to: &str) -> Result<(), KripkeError> {
        let from = self.require(from)?;
        let to = self.require(to)?;
        self.add_edge(from, to);
        Ok(())
    }

    pub fn add_label(&mut self, state: StateId, atom: impl Into<String>) {
        self.labels[state.0].insert(atom.into());
    }

    /// Labels a state by name; an unknown name is recorded and reported by
    /// `validate` instead of failing here.
    pub fn add_label_by_name(&mut self, state: &str, atom: impl Into<String>) {
        match self.state(state) {
            Some(id) => self.add_label(id, atom),
            None => self.stray_labels.push((state.to_string(), atom.into())),
        }
    }

    fn require(&self, name: &str) -> Result<StateId, KripkeError> {
        self.state(name)
            .ok_or_else(|| KripkeError::UnknownState(name.to_string()))
    }

    pub fn state(&self, name: &str) -> Option<StateId> {
        self.index.get(name).copied()
    }

    pub fn name(&self, id: StateId) -> &str {
        &self.names[id.0]
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn states(&self) -> impl Iterator<Item = StateId> {
        (0..self.names.len()).map(StateId)
    }

    pub fn successors(&self, id: StateId) -> &[StateId] {
        &self.succ[id.0]
    }

    pub fn predecessors(&self, id: StateId) -> &[StateId] {
        &self.pred[id.0]
    }

    pub fn has_edge(&self, from: StateId, to: StateId) -> bool {
        self.succ[from.0].contains(&to)
    }

    pub fn edge_count(&self) -> usize {
        self.succ.iter().map(Vec::len).sum()
    }

    pub fn labels(&self, id: StateId) -> &BTreeSet<String> {
        &self.labels[id.0]
    }

    pub fn has_label(&self, id: StateId, atom: &str) -> bool {
        self.labels[id.0].contains(atom)
    }

    /// States labelled with `atom`; empty for atoms the model never mentions.
    pub fn atom_set(&self, atom: &str) -> StateSet {
        StateSet::from_ids(
            self.len(),
            self.states().filter(|&s| self.has_label(s, atom)),
        )
    }

    pub fn empty_set(&self) -> StateSet {
        StateSet::empty(self.len())
    }

    pub fn full_set(&self) -> StateSet {
        StateSet::full(self.len())
    }

    /// `{w | some successor of w is in target}`.
    pub fn pre_exists(&self, target: &StateSet) -> StateSet {
        let mut out = self.empty_set();
        for t in target.iter() {
            for &p in self.predecessors(t) {
                out.insert(p);
            }
        }
        out
    }

    pub fn validate(&self) -> Result<(), Vec<Violation>> {
        let mut report = Vec::new();
        let mut seen = BTreeSet::new();
        for name in &self.names {
            if !seen.insert(name.as_str()) {
                report.push(Violation::DuplicateState(name.clone()));
            }
        }
        for s in self.states() {
            if self.succ[s.0].is_empty() {
                report.push(Violation::NoSuccessor(self.names[s.0].clone()));
            }
        }
        for (state, atom) in &self.stray_labels {
            report.push(Violation::LabelOnUnknownState {
                state: state.clone(),
                atom: atom.clone(),
            });
        }
        if report.is_empty() {
            Ok(())
        } else {
            Err(report)
        }
    }
}

/// A model-checking question: does `model, start ⊨ formula` hold?
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckInstance {
    pub model: KripkeModel,
    pub start: StateId,
    pub formula: Formula,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_looped_state_is_valid() {
        let mut m = KripkeModel::new();
        let w = m.add_state("w");
        m.add_edge(w, w);
        assert_eq!(m.validate(), Ok(()));
    }

    #[test]
    fn states_without_successors_are_reported() {
        let mut m = KripkeModel::new();
        m.add_state("a");
        m.add_state("b");
        let report = m.validate().unwrap_err();
        assert_eq!(
            report,
            vec![
                Violation::NoSuccessor("a".into()),
                Violation::NoSuccessor("b".into())
            ]
        );
    }

    #[test]
    fn duplicates_and_stray_labels_are_reported() {
        let mut m = KripkeModel::new();
        let a = m.add_state("a");
        let a2 = m.add_state("a");
        m.add_edge(a, a);
        m.add_edge(a2, a2);
        m.add_label_by_name("ghost", "p");
        let report = m.validate().unwrap_err();
        assert!(report.contains(&Violation::DuplicateState("a".into())));
        assert!(report.contains(&Violation::LabelOnUnknownState {
            state: "ghost".into(),
            atom: "p".into()
        }));
        assert_eq!(m.state("a"), Some(a));
    }

    #[test]
    fn edges_to_unknown_states_fail() {
        let mut m = KripkeModel::new();
        m.add_state("a");
        assert_eq!(
            m.add_edge_by_name("a", "b"),
            Err(KripkeError::UnknownState("b".into()))
        );
    }

    #[test]
    fn pre_image() {
        let mut m = KripkeModel::new();
        let a = m.add_state("a");
        let b = m.add_state("b");
        let c = m.add_state("c");
        m.add_edge(a, b);
        m.add_edge(b, c);
        m.add_edge(c, c);
        let pre = m.pre_exists(&StateSet::from_ids(3, [c]));
        assert_eq!(pre.iter().collect::<Vec<_>>(), vec![b, c]);
        assert_eq!(StateSet::from_ids(3, [a]).complement().len(), 2);
    }
}
