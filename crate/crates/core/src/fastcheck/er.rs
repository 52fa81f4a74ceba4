//! The pure release fragment: atomic right forms and their decision procedure.

use std::collections::HashMap;

use super::search::{infinite_within, reach_within};
use super::{reject, FragmentError, Leaf};
use crate::kripke::{KripkeModel, StateId, StateSet};
use crate::syntax::{BinaryOp, Formula};

/// `⟨α_1, …, α_m, β⟩` with `φ = α_1 R (α_2 R (… (α_m R β)…))` and `β` a leaf.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RightForm {
    pub alphas: Vec<Formula>,
    pub beta: Leaf,
}

impl RightForm {
    pub fn reassemble(&self) -> Formula {
        self.alphas
            .iter()
            .rev()
            .fold(self.beta.to_formula(), |acc, a| Formula::er(a.clone(), acc))
    }

    /// Number of components including `β`.
    pub fn len(&self) -> usize {
        self.alphas.len() + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

fn only_er(phi: &Formula) -> bool {
    match phi {
        Formula::Top | Formula::Atom(_) => true,
        Formula::Binary(BinaryOp::ER, a, b) => only_er(a) && only_er(b),
        _ => false,
    }
}

fn spine_leaf(mut phi: &Formula) -> &Formula {
    while let Formula::Binary(BinaryOp::ER, _, b) = phi {
        phi = b;
    }
    phi
}

/// Peels the right spine of an `{ER}`-formula down to its leaf.
pub fn atomic_right_form(phi: &Formula) -> Result<RightForm, FragmentError> {
    if !only_er(phi) {
        return Err(reject("er", phi));
    }
    let mut alphas = Vec::new();
    let mut cur = phi;
    while let Formula::Binary(BinaryOp::ER, a, b) = cur {
        alphas.push((**a).clone());
        cur = b;
    }
    let beta = Leaf::of(cur).expect("the spine of an {ER}-formula ends in a leaf");
    Ok(RightForm { alphas, beta })
}

/// Decides an `{ER}`-formula through its right form
/// `⟨α_1, …, α_m, β⟩`: false when `β` fails at the state; true when `m = 0`
/// or an infinite `β`-path starts here; otherwise true iff some state `v`
/// reachable through `β`-states satisfies `α_1` and `⟨α_2, …, α_m, β⟩`.
pub fn check_er(model: &KripkeModel, state: StateId, phi: &Formula) -> Result<bool, FragmentError> {
    if !only_er(phi) {
        return Err(reject("er", phi));
    }
    let mut checker = ErChecker {
        model,
        memo: HashMap::new(),
        regions: HashMap::new(),
    };
    Ok(checker.holds(state, phi))
}

struct ErChecker<'m> {
    model: &'m KripkeModel,
    memo: HashMap<(*const Formula, StateId), bool>,
    // leaf -> (states satisfying it, states with an infinite path inside them)
    regions: HashMap<Leaf, (StateSet, StateSet)>,
}

impl ErChecker<'_> {
    fn region(&mut self, leaf: &Leaf) -> &(StateSet, StateSet) {
        let model = self.model;
        self.regions.entry(leaf.clone()).or_insert_with(|| {
            let sat = leaf.states(model);
            let inf = infinite_within(model, &sat);
            (sat, inf)
        })
    }

    fn holds(&mut self, w: StateId, phi: &Formula) -> bool {
        let (alpha, rest) = match phi {
            Formula::Binary(BinaryOp::ER, a, b) => (&**a, &**b),
            leaf => return Leaf::of(leaf).expect("checked fragment").holds(self.model, w),
        };
        let key = (phi as *const Formula, w);
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let beta = Leaf::of(spine_leaf(rest)).expect("checked fragment");
        let (sat, inf) = self.region(&beta).clone();
        let verdict = if !sat.contains(w) {
            false
        } else if inf.contains(w) {
            true
        } else {
            reach_within(self.model, &sat, w)
                .iter()
                .any(|v| self.holds(v, alpha) && self.holds(v, rest))
        };
        self.memo.insert(key, verdict);
        verdict
    }
}
