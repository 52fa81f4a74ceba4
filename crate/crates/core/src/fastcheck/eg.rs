//! The `EG` fragments with `∧`, with `∨`, and with `¬` (or no Boolean
//! operator at all).

use std::collections::BTreeSet;

use super::search::{backward_reach, infinite_within};
use super::{
    boolean_subset, collapse, leaves_conj, leaves_states, prefix_form, reject, FragmentError,
    Leaf, PrefixForm,
};
use crate::kripke::{KripkeModel, StateId, StateSet};
use crate::syntax::{signature, BooleanOp, FragmentSignature, Formula, TemporalOp, UnaryOp};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EgSubfragment {
    /// Only `EG`, or `EG`/`AF` with `¬`.
    Not,
    And,
    Or,
}

pub(super) fn subfragment(sig: &FragmentSignature) -> Option<EgSubfragment> {
    let b = &sig.boolean_ops;
    let eg_only = sig.temporal_within(&[TemporalOp::EG]);
    if boolean_subset(b, &[BooleanOp::Not]) && sig.temporal_within(&[TemporalOp::EG, TemporalOp::AF]) {
        Some(EgSubfragment::Not)
    } else if eg_only && boolean_subset(b, &[BooleanOp::And]) {
        Some(EgSubfragment::And)
    } else if eg_only && boolean_subset(b, &[BooleanOp::Or]) {
        Some(EgSubfragment::Or)
    } else {
        None
    }
}

/// `α ∧ ⋀_l EG β_l` with `α` and every `β_l` conjunctions of leaves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EgAndForm {
    pub now: BTreeSet<Leaf>,
    pub globally: Vec<BTreeSet<Leaf>>,
}

impl EgAndForm {
    pub fn to_formula(&self) -> Formula {
        self.globally
            .iter()
            .map(|b| Formula::eg(leaves_conj(b)))
            .fold(leaves_conj(&self.now), Formula::and)
    }
}

/// Normalizes an `{EG,∧}`-formula using `EG(α ∧ ⋀ EG β_l) ≡ EG(α ∧ ⋀ β_l)`.
pub fn eg_and_form(phi: &Formula) -> Option<EgAndForm> {
    match phi {
        Formula::Top | Formula::Atom(_) => Some(EgAndForm {
            now: BTreeSet::from([Leaf::of(phi)?]),
            globally: Vec::new(),
        }),
        Formula::And(a, b) => {
            let mut x = eg_and_form(a)?;
            let y = eg_and_form(b)?;
            x.now.extend(y.now);
            x.globally.extend(y.globally);
            Some(x)
        }
        Formula::Unary(UnaryOp::EG, a) => {
            let inner = eg_and_form(a)?;
            let mut all = inner.now;
            for g in inner.globally {
                all.extend(g);
            }
            Some(EgAndForm {
                now: BTreeSet::new(),
                globally: vec![all],
            })
        }
        _ => None,
    }
}

/// `α ∨ ⋁_l EG β_l` with `α` a disjunction of leaves and every `β_l` again
/// of this form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EgOrForm {
    pub now: BTreeSet<Leaf>,
    pub globally: Vec<EgOrForm>,
}

impl EgOrForm {
    pub fn to_formula(&self) -> Formula {
        let mut parts = self.now.iter().map(Leaf::to_formula).collect::<Vec<_>>();
        parts.extend(self.globally.iter().map(|b| Formula::eg(b.to_formula())));
        let mut it = parts.into_iter();
        match it.next() {
            // the empty disjunction is false; EG of it is false as well
            None => Formula::Top.not(),
            Some(first) => it.fold(first, Formula::or),
        }
    }

    /// States satisfying the form. `EG β` holds where an infinite path runs
    /// through `α'`-states, or an `α'`-prefix leads to a state satisfying
    /// one of the nested `EG β'_q`.
    fn states(&self, model: &KripkeModel) -> StateSet {
        let mut sat = leaves_states(model, &self.now, false);
        for g in &self.globally {
            sat = sat.union(&eg_of_or_form(model, g));
        }
        sat
    }
}

fn eg_of_or_form(model: &KripkeModel, f: &EgOrForm) -> StateSet {
    let alpha = leaves_states(model, &f.now, false);
    let mut target = infinite_within(model, &alpha);
    for g in &f.globally {
        target = target.union(&eg_of_or_form(model, g));
    }
    backward_reach(model, &alpha, &target)
}

pub fn eg_or_form(phi: &Formula) -> Option<EgOrForm> {
    match phi {
        Formula::Top | Formula::Atom(_) => Some(EgOrForm {
            now: BTreeSet::from([Leaf::of(phi)?]),
            globally: Vec::new(),
        }),
        Formula::Or(a, b) => {
            let mut x = eg_or_form(a)?;
            let y = eg_or_form(b)?;
            x.now.extend(y.now);
            x.globally.extend(y.globally);
            Some(x)
        }
        Formula::Unary(UnaryOp::EG, a) => {
            let inner = eg_or_form(a)?;
            // a disjunction of EG's is closed under EG
            if inner.now.is_empty() && !inner.globally.is_empty() {
                return Some(inner);
            }
            Some(EgOrForm {
                now: BTreeSet::new(),
                globally: vec![inner],
            })
        }
        _ => None,
    }
}

/// Pushes negations inward (`¬EG = AF¬`, `¬AF = EG¬`) and collapses the
/// prefix with `EG EG ≡ EG`, `AF AF ≡ AF`, `EG AF EG ≡ AF EG` and
/// `AF EG AF ≡ EG AF`, leaving at most two operators.
pub fn eg_prefix_form(phi: &Formula) -> Option<PrefixForm> {
    let mut form = prefix_form(phi, UnaryOp::EG, UnaryOp::AF)?;
    collapse(&mut form.ops, 3);
    Some(form)
}

fn prefix_states(model: &KripkeModel, form: &PrefixForm) -> StateSet {
    let mut set = form.literal.states(model);
    for op in form.ops.iter().rev() {
        set = match op {
            UnaryOp::EG => infinite_within(model, &set),
            _ => infinite_within(model, &set.complement()).complement(),
        };
    }
    set
}

pub fn check_eg_frag(model: &KripkeModel, state: StateId, phi: &Formula) -> Result<bool, FragmentError> {
    let sig = signature(phi);
    let err = || reject("eg-frag", phi);
    match subfragment(&sig).ok_or_else(err)? {
        EgSubfragment::Not => {
            let form = eg_prefix_form(phi).ok_or_else(err)?;
            Ok(prefix_states(model, &form).contains(state))
        }
        EgSubfragment::And => {
            let form = eg_and_form(phi).ok_or_else(err)?;
            if !form.now.iter().all(|l| l.holds(model, state)) {
                return Ok(false);
            }
            Ok(form.globally.iter().all(|b| {
                let region = leaves_states(model, b, true);
                infinite_within(model, &region).contains(state)
            }))
        }
        EgSubfragment::Or => {
            let form = eg_or_form(phi).ok_or_else(err)?;
            Ok(form.states(model).contains(state))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_formula;

    fn f(s: &str) -> Formula {
        parse_formula(s).unwrap()
    }

    #[test]
    fn and_form_flattens_nested_globally() {
        let form = eg_and_form(&f("p & EG (q & EG r & EG s)")).unwrap();
        assert_eq!(form.now.len(), 1);
        assert_eq!(form.globally.len(), 1);
        assert_eq!(form.globally[0].len(), 3);
    }

    #[test]
    fn prefix_forms() {
        let form = eg_prefix_form(&f("!EG !EG EG p")).unwrap();
        assert_eq!(form.ops, vec![UnaryOp::AF, UnaryOp::EG]);
        assert!(form.literal.positive);
        let form = eg_prefix_form(&f("EG AF EG AF EG !p")).unwrap();
        assert!(form.ops.len() <= 2);
        assert!(!form.literal.positive);
    }

    #[test]
    fn or_form_nesting() {
        let form = eg_or_form(&f("p | EG (q | EG r)")).unwrap();
        assert_eq!(form.globally[0].globally.len(), 1);
        assert_eq!(form.to_formula(), f("p | EG (q | EG r)"));
    }
}
