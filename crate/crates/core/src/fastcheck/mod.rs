//! Decision procedures for single-operator fragments, built on their normal
//! forms. Every engine returns the same verdict as [`crate::semantics::check`]
//! on its fragment and rejects formulas outside of it.

mod ef;
mod eg;
mod er;
pub mod search;

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::kripke::{KripkeModel, StateId, StateSet};
use crate::semantics;
use crate::syntax::{signature, BooleanOp, Formula, TemporalOp, UnaryOp};

pub use ef::{check_ef_frag, ef_or_form, ef_prefix_form, EfOrForm, EfSubfragment};
pub use eg::{check_eg_frag, eg_and_form, eg_or_form, eg_prefix_form, EgAndForm, EgOrForm, EgSubfragment};
pub use er::{atomic_right_form, check_er, RightForm};

/// An atom or `true`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Leaf {
    Top,
    Atom(String),
}

impl Leaf {
    pub fn of(phi: &Formula) -> Option<Leaf> {
        match phi {
            Formula::Top => Some(Leaf::Top),
            Formula::Atom(p) => Some(Leaf::Atom(p.clone())),
            _ => None,
        }
    }

    pub fn to_formula(&self) -> Formula {
        match self {
            Leaf::Top => Formula::Top,
            Leaf::Atom(p) => Formula::atom(p.clone()),
        }
    }

    pub fn states(&self, model: &KripkeModel) -> StateSet {
        match self {
            Leaf::Top => model.full_set(),
            Leaf::Atom(p) => model.atom_set(p),
        }
    }

    pub fn holds(&self, model: &KripkeModel, state: StateId) -> bool {
        match self {
            Leaf::Top => true,
            Leaf::Atom(p) => model.has_label(state, p),
        }
    }
}

/// A possibly negated leaf.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Literal {
    pub positive: bool,
    pub leaf: Leaf,
}

impl Literal {
    pub fn to_formula(&self) -> Formula {
        let f = self.leaf.to_formula();
        if self.positive {
            f
        } else {
            f.not()
        }
    }

    pub fn states(&self, model: &KripkeModel) -> StateSet {
        let s = self.leaf.states(model);
        if self.positive {
            s
        } else {
            s.complement()
        }
    }
}

/// A chain of unary operators (outermost first) over a literal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrefixForm {
    pub ops: Vec<UnaryOp>,
    pub literal: Literal,
}

impl PrefixForm {
    /// Rebuilds the formula using only the existential operator and `¬`
    /// (universal operators become `¬E¬`).
    pub fn to_formula(&self) -> Formula {
        let mut f = self.literal.to_formula();
        for op in self.ops.iter().rev() {
            f = match op {
                UnaryOp::AF => Formula::eg(f.not()).not(),
                UnaryOp::AG => Formula::ef(f.not()).not(),
                UnaryOp::AX => Formula::ex(f.not()).not(),
                _ => Formula::unary(*op, f),
            };
        }
        f
    }
}

/// Pushes negations through `exist`/`univ` chains down to a literal.
fn prefix_form(phi: &Formula, exist: UnaryOp, univ: UnaryOp) -> Option<PrefixForm> {
    let mut positive = true;
    let mut ops = Vec::new();
    let mut cur = phi;
    loop {
        match cur {
            Formula::Not(a) => {
                positive = !positive;
                cur = a;
            }
            Formula::Unary(op, a) if *op == exist || *op == univ => {
                let flipped = if *op == exist { univ } else { exist };
                ops.push(if positive { *op } else { flipped });
                cur = a;
            }
            _ => {
                let leaf = Leaf::of(cur)?;
                return Some(PrefixForm {
                    ops,
                    literal: Literal { positive, leaf },
                });
            }
        }
    }
}

/// Removes repeated operators and rewrites each window of `window` operators
/// that alternates between two operators into its last `keep` operators.
fn collapse(ops: &mut Vec<UnaryOp>, window: usize) {
    loop {
        let before = ops.len();
        ops.dedup();
        if let Some(i) = (0..ops.len().saturating_sub(window - 1)).find(|&i| {
            (i..i + window - 2).all(|k| ops[k] == ops[k + 2]) && ops[i] != ops[i + 1]
        }) {
            match window {
                3 => {
                    ops.remove(i);
                }
                _ => {
                    ops.drain(i + 2..i + window);
                }
            }
        }
        if ops.len() == before {
            return;
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FragmentError {
    #[error("formula with operators {signature} is outside the {engine} fragment")]
    OutOfFragment {
        engine: &'static str,
        signature: String,
    },
}

fn reject(engine: &'static str, phi: &Formula) -> FragmentError {
    FragmentError::OutOfFragment {
        engine,
        signature: signature(phi).to_string(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Engine {
    Er,
    EgFrag,
    EfFrag,
    Generic,
}

impl Engine {
    pub fn name(self) -> &'static str {
        match self {
            Engine::Er => "er",
            Engine::EgFrag => "eg-frag",
            Engine::EfFrag => "ef-frag",
            Engine::Generic => "generic",
        }
    }
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The engine [`route`] uses for a formula.
pub fn engine_for(phi: &Formula) -> Engine {
    let sig = signature(phi);
    let t = &sig.temporal_ops;
    let b = &sig.boolean_ops;
    let only = |ops: &[TemporalOp]| !t.is_empty() && t.iter().all(|op| ops.contains(op));
    if only(&[TemporalOp::ER]) && b.is_empty() {
        return Engine::Er;
    }
    if eg::subfragment(&sig).is_some() && !t.is_empty() {
        return Engine::EgFrag;
    }
    match ef::subfragment(&sig) {
        Some(EfSubfragment::And) | None => Engine::Generic,
        Some(_) if t.is_empty() => Engine::Generic,
        Some(_) => Engine::EfFrag,
    }
}

/// Decides `model, state ⊨ phi` with the most specialized applicable engine.
pub fn route(model: &KripkeModel, state: StateId, phi: &Formula) -> (bool, Engine) {
    let engine = engine_for(phi);
    let verdict = match engine {
        Engine::Er => check_er(model, state, phi),
        Engine::EgFrag => check_eg_frag(model, state, phi),
        Engine::EfFrag => check_ef_frag(model, state, phi),
        Engine::Generic => Ok(semantics::check(model, state, phi)),
    };
    (verdict.expect("routing only selects engines whose fragment contains phi"), engine)
}

fn leaves_conj(leaves: &BTreeSet<Leaf>) -> Formula {
    let mut it = leaves.iter().map(Leaf::to_formula);
    match it.next() {
        None => Formula::Top,
        Some(first) => it.fold(first, Formula::and),
    }
}

fn leaves_states(model: &KripkeModel, leaves: &BTreeSet<Leaf>, conj: bool) -> StateSet {
    let start = if conj { model.full_set() } else { model.empty_set() };
    leaves.iter().fold(start, |acc, l| {
        let s = l.states(model);
        if conj {
            acc.intersection(&s)
        } else {
            acc.union(&s)
        }
    })
}

fn boolean_subset(sig_ops: &BTreeSet<BooleanOp>, allowed: &[BooleanOp]) -> bool {
    sig_ops.iter().all(|op| allowed.contains(op))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_formula;

    #[test]
    fn routing() {
        let e = |s: &str| engine_for(&parse_formula(s).unwrap());
        assert_eq!(e("EG p"), Engine::EgFrag);
        assert_eq!(e("E[p U q] & r"), Engine::Generic);
        assert_eq!(e("E[p R E[q R r]]"), Engine::Er);
        assert_eq!(e("EF (p | EF q)"), Engine::EfFrag);
        assert_eq!(e("EF (p & q)"), Engine::Generic);
        assert_eq!(e("!AG !EF p"), Engine::EfFrag);
        assert_eq!(e("AF EG p"), Engine::EgFrag);
        assert_eq!(e("p & q"), Engine::Generic);
        assert_eq!(e("EG (p ^ q)"), Engine::Generic);
    }

    #[test]
    fn collapsing() {
        use UnaryOp::*;
        let mut ops = vec![EG, EG, AF, EG, AF, AF];
        collapse(&mut ops, 3);
        assert!(ops.len() <= 2);
        let mut ops = vec![EF, AG, EF, AG, EF, AG, AG];
        collapse(&mut ops, 4);
        assert_eq!(ops, vec![EF, AG]);
        let mut ops = vec![AG, EF, AG];
        collapse(&mut ops, 4);
        assert_eq!(ops, vec![AG, EF, AG]);
    }
}
