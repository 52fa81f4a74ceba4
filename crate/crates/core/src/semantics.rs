//! The general CTL model checker: bottom-up labelling with explicit-state
//! fixpoints. Every fragment engine is tested against this module.
//!
//! * `E[ψ U φ]` is the least fixpoint of `Z = Sat(φ) ∪ (Sat(ψ) ∩ pre∃(Z))`,
//! * `EG φ` the greatest fixpoint of `Z = Sat(φ) ∩ pre∃(Z)`,
//! * `E[ψ R φ]` the greatest fixpoint of `Z = Sat(φ) ∩ (Sat(ψ) ∪ pre∃(Z))`,
//! * `EF φ = E[⊤ U φ]`, and universal operators are complements of their
//!   existential duals.
//!
//! Atoms that label no state simply hold nowhere.

use std::collections::HashMap;

use crate::kripke::{KripkeModel, StateId, StateSet};
use crate::syntax::{BinaryOp, Formula, UnaryOp};

/// The states of a model where a formula holds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SatSet {
    pub formula: Formula,
    pub states: StateSet,
}

impl SatSet {
    pub fn contains(&self, state: StateId) -> bool {
        self.states.contains(state)
    }
}

pub fn check(model: &KripkeModel, state: StateId, phi: &Formula) -> bool {
    states_satisfying(model, phi).contains(state)
}

pub fn sat_set(model: &KripkeModel, phi: &Formula) -> SatSet {
    SatSet {
        formula: phi.clone(),
        states: states_satisfying(model, phi),
    }
}

pub fn states_satisfying(model: &KripkeModel, phi: &Formula) -> StateSet {
    Labeller {
        model,
        memo: HashMap::new(),
    }
    .eval(phi)
}

struct Labeller<'m> {
    model: &'m KripkeModel,
    // keyed by node address; shared subformulas are labelled once
    memo: HashMap<*const Formula, StateSet>,
}

impl Labeller<'_> {
    fn eval(&mut self, phi: &Formula) -> StateSet {
        let key = phi as *const Formula;
        if let Some(set) = self.memo.get(&key) {
            return set.clone();
        }
        let m = self.model;
        let set = match phi {
            Formula::Top => m.full_set(),
            Formula::Atom(p) => m.atom_set(p),
            Formula::Not(a) => self.eval(a).complement(),
            Formula::And(a, b) => self.eval(a).intersection(&self.eval(b)),
            Formula::Or(a, b) => self.eval(a).union(&self.eval(b)),
            Formula::Xor(a, b) => self.eval(a).symmetric_difference(&self.eval(b)),
            Formula::Unary(op, a) => {
                let inner = self.eval(a);
                match op {
                    UnaryOp::EX => m.pre_exists(&inner),
                    UnaryOp::AX => m.pre_exists(&inner.complement()).complement(),
                    UnaryOp::EF => eu(m, &m.full_set(), &inner),
                    UnaryOp::AG => eu(m, &m.full_set(), &inner.complement()).complement(),
                    UnaryOp::EG => eg(m, &inner),
                    UnaryOp::AF => eg(m, &inner.complement()).complement(),
                }
            }
            Formula::Binary(op, a, b) => {
                let lhs = self.eval(a);
                let rhs = self.eval(b);
                match op {
                    BinaryOp::EU => eu(m, &lhs, &rhs),
                    BinaryOp::ER => er(m, &lhs, &rhs),
                    // A[ψ R φ] ≡ ¬E[¬ψ U ¬φ],  A[ψ U φ] ≡ ¬E[¬ψ R ¬φ]
                    BinaryOp::AR => eu(m, &lhs.complement(), &rhs.complement()).complement(),
                    BinaryOp::AU => er(m, &lhs.complement(), &rhs.complement()).complement(),
                }
            }
        };
        self.memo.insert(key, set.clone());
        set
    }
}

fn last(stages: Vec<StateSet>) -> StateSet {
    stages.into_iter().last().expect("fixpoint iteration has at least one stage")
}

fn eu(m: &KripkeModel, hold: &StateSet, goal: &StateSet) -> StateSet {
    last(eu_stages(m, hold, goal))
}

fn eg(m: &KripkeModel, hold: &StateSet) -> StateSet {
    last(eg_stages(m, hold))
}

fn er(m: &KripkeModel, release: &StateSet, hold: &StateSet) -> StateSet {
    last(er_stages(m, release, hold))
}

fn iterate(start: StateSet, mut step: impl FnMut(&StateSet) -> StateSet) -> Vec<StateSet> {
    let mut stages = vec![start];
    loop {
        let next = step(stages.last().unwrap());
        if &next == stages.last().unwrap() {
            return stages;
        }
        stages.push(next);
    }
}

/// Kleene iterates of `E[hold U goal]`, starting from ∅ and ending at the
/// least fixpoint (the last element).
pub fn eu_stages(m: &KripkeModel, hold: &StateSet, goal: &StateSet) -> Vec<StateSet> {
    iterate(m.empty_set(), |z| goal.union(&hold.intersection(&m.pre_exists(z))))
}

/// Iterates of `EG hold`, starting from all states and ending at the greatest
/// fixpoint.
pub fn eg_stages(m: &KripkeModel, hold: &StateSet) -> Vec<StateSet> {
    iterate(m.full_set(), |z| hold.intersection(&m.pre_exists(z)))
}

/// Iterates of `E[release R hold]`, starting from all states and ending at
/// the greatest fixpoint.
pub fn er_stages(m: &KripkeModel, release: &StateSet, hold: &StateSet) -> Vec<StateSet> {
    iterate(m.full_set(), |z| hold.intersection(&release.union(&m.pre_exists(z))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_formula;

    fn looped_p() -> KripkeModel {
        let mut m = KripkeModel::new();
        let w = m.add_state("w");
        m.add_edge(w, w);
        m.add_label(w, "p");
        m
    }

    fn holds(m: &KripkeModel, text: &str) -> bool {
        check(m, StateId(0), &parse_formula(text).unwrap())
    }

    #[test]
    fn constant_path() {
        let m = looped_p();
        assert!(holds(&m, "EG p"));
        assert!(!holds(&m, "E[p U q]"));
        assert!(holds(&m, "E[q R p]"));
        assert!(!holds(&m, "EX q"));
        assert!(holds(&m, "AX p & AG p & AF p & A[q R p]"));
        assert!(!holds(&m, "A[p U q]"));
    }

    #[test]
    fn top_and_negation() {
        let m = looped_p();
        assert_eq!(sat_set(&m, &Formula::Top).states, m.full_set());
        let q = Formula::atom("q");
        assert_eq!(
            sat_set(&m, &q.clone().not()).states,
            sat_set(&m, &q).states.complement()
        );
    }

    #[test]
    fn until_on_a_chain() {
        // a -> b -> c (loop); p on a, b; q on c
        let mut m = KripkeModel::new();
        let a = m.add_state("a");
        let b = m.add_state("b");
        let c = m.add_state("c");
        m.add_edge(a, b);
        m.add_edge(b, c);
        m.add_edge(c, c);
        m.add_label(a, "p");
        m.add_label(b, "p");
        m.add_label(c, "q");
        let phi = parse_formula("E[p U q]").unwrap();
        assert_eq!(sat_set(&m, &phi).states.len(), 3);
        let phi = parse_formula("E[p U EX q]").unwrap();
        assert!(check(&m, a, &phi));
        let phi = parse_formula("EG p").unwrap();
        assert!(!check(&m, a, &phi));
        let stages = eu_stages(&m, &m.atom_set("p"), &m.atom_set("q"));
        assert_eq!(stages.len(), 4);
    }
}
