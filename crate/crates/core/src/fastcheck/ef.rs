//! The `EF` fragments. `{EF,∧}` has no normal form with a cheap check and
//! is handed to the generic checker.

use std::collections::BTreeSet;

use super::search::backward_reach;
use super::{boolean_subset, collapse, leaves_states, prefix_form, reject, FragmentError, Leaf, PrefixForm};
use crate::kripke::{KripkeModel, StateId, StateSet};
use crate::semantics;
use crate::syntax::{signature, BooleanOp, FragmentSignature, Formula, TemporalOp, UnaryOp};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EfSubfragment {
    /// Only `EF`, or `EF`/`AG` with `¬`.
    Not,
    Or,
    And,
}

pub(super) fn subfragment(sig: &FragmentSignature) -> Option<EfSubfragment> {
    let b = &sig.boolean_ops;
    let ef_only = sig.temporal_within(&[TemporalOp::EF]);
    if boolean_subset(b, &[BooleanOp::Not]) && sig.temporal_within(&[TemporalOp::EF, TemporalOp::AG]) {
        Some(EfSubfragment::Not)
    } else if ef_only && boolean_subset(b, &[BooleanOp::Or]) {
        Some(EfSubfragment::Or)
    } else if ef_only && boolean_subset(b, &[BooleanOp::And]) {
        Some(EfSubfragment::And)
    } else {
        None
    }
}

/// `α ∨ EF β` with `α` and `β` disjunctions of leaves.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EfOrForm {
    pub now: BTreeSet<Leaf>,
    pub eventually: BTreeSet<Leaf>,
}

impl EfOrForm {
    pub fn to_formula(&self) -> Formula {
        let mut parts = self.now.iter().map(Leaf::to_formula).collect::<Vec<_>>();
        let mut ev = self.eventually.iter().map(Leaf::to_formula);
        if let Some(first) = ev.next() {
            parts.push(Formula::ef(ev.fold(first, Formula::or)));
        }
        let mut it = parts.into_iter();
        match it.next() {
            None => Formula::Top.not(),
            Some(first) => it.fold(first, Formula::or),
        }
    }

    pub fn states(&self, model: &KripkeModel) -> StateSet {
        let target = leaves_states(model, &self.eventually, false);
        let ev = backward_reach(model, &model.full_set(), &target);
        leaves_states(model, &self.now, false).union(&ev)
    }
}

/// Normalizes an `{EF,∨}`-formula with `EF(α ∨ EF β) ≡ EF(α ∨ β)`.
pub fn ef_or_form(phi: &Formula) -> Option<EfOrForm> {
    match phi {
        Formula::Top | Formula::Atom(_) => Some(EfOrForm {
            now: BTreeSet::from([Leaf::of(phi)?]),
            eventually: BTreeSet::new(),
        }),
        Formula::Or(a, b) => {
            let mut x = ef_or_form(a)?;
            let y = ef_or_form(b)?;
            x.now.extend(y.now);
            x.eventually.extend(y.eventually);
            Some(x)
        }
        Formula::Unary(UnaryOp::EF, a) => {
            let inner = ef_or_form(a)?;
            let mut eventually = inner.now;
            eventually.extend(inner.eventually);
            Some(EfOrForm {
                now: BTreeSet::new(),
                eventually,
            })
        }
        _ => None,
    }
}

/// Pushes negations inward (`¬EF = AG¬`) and collapses the prefix with
/// `EF EF ≡ EF`, `AG AG ≡ AG`, `EF AG EF AG ≡ EF AG` and
/// `AG EF AG EF ≡ AG EF`, leaving at most three operators.
pub fn ef_prefix_form(phi: &Formula) -> Option<PrefixForm> {
    let mut form = prefix_form(phi, UnaryOp::EF, UnaryOp::AG)?;
    collapse(&mut form.ops, 4);
    Some(form)
}

fn prefix_states(model: &KripkeModel, form: &PrefixForm) -> StateSet {
    let all = model.full_set();
    let mut set = form.literal.states(model);
    for op in form.ops.iter().rev() {
        set = match op {
            UnaryOp::EF => backward_reach(model, &all, &set),
            _ => backward_reach(model, &all, &set.complement()).complement(),
        };
    }
    set
}

pub fn check_ef_frag(model: &KripkeModel, state: StateId, phi: &Formula) -> Result<bool, FragmentError> {
    let sig = signature(phi);
    let err = || reject("ef-frag", phi);
    match subfragment(&sig).ok_or_else(err)? {
        EfSubfragment::Not => {
            let form = ef_prefix_form(phi).ok_or_else(err)?;
            Ok(prefix_states(model, &form).contains(state))
        }
        EfSubfragment::Or => {
            let form = ef_or_form(phi).ok_or_else(err)?;
            Ok(form.states(model).contains(state))
        }
        EfSubfragment::And => Ok(semantics::check(model, state, phi)),
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
    fn or_form_absorbs_nested_eventually() {
        let form = ef_or_form(&f("p | EF (q | EF (r | EF p))")).unwrap();
        assert_eq!(form.now.len(), 1);
        assert_eq!(form.eventually.len(), 3);
        assert_eq!(form.to_formula(), f("p | EF (p | q | r)"));
    }

    #[test]
    fn prefix_keeps_three() {
        let form = ef_prefix_form(&f("!EF !EF !EF !EF !EF p")).unwrap();
        assert_eq!(form.ops, vec![UnaryOp::AG, UnaryOp::EF, UnaryOp::AG]);
        assert!(!form.literal.positive);
        let form = ef_prefix_form(&f("EF !EF !EF !EF p")).unwrap();
        assert_eq!(form.ops, vec![UnaryOp::EF, UnaryOp::AG]);
    }
}
