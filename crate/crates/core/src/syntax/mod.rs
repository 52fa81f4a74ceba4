//! CTL abstract syntax, the surface grammar, and structural rewrites.

mod formula;
mod parser;

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

pub use formula::{BinaryOp, BooleanOp, Formula, TemporalOp, UnaryOp};
pub use parser::{is_valid_atom, parse_formula, ParseError, KEYWORDS};

/// The operators occurring in a formula.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct FragmentSignature {
    pub temporal_ops: BTreeSet<TemporalOp>,
    pub boolean_ops: BTreeSet<BooleanOp>,
}

impl FragmentSignature {
    /// The single temporal operator, if exactly one occurs.
    pub fn sole_temporal(&self) -> Option<TemporalOp> {
        match self.temporal_ops.len() {
            1 => self.temporal_ops.iter().next().copied(),
            _ => None,
        }
    }

    pub fn temporal_within(&self, allowed: &[TemporalOp]) -> bool {
        self.temporal_ops.iter().all(|op| allowed.contains(op))
    }

    pub fn boolean_within(&self, allowed: &[BooleanOp]) -> bool {
        self.boolean_ops.iter().all(|op| allowed.contains(op))
    }
}

fn write_set<T: fmt::Display>(f: &mut fmt::Formatter<'_>, items: &BTreeSet<T>) -> fmt::Result {
    f.write_str("{")?;
    for (i, item) in items.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{item}")?;
    }
    f.write_str("}")
}

impl fmt::Display for FragmentSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_set(f, &self.temporal_ops)?;
        f.write_str(" ")?;
        write_set(f, &self.boolean_ops)
    }
}

pub fn format_op_set<T: fmt::Display>(items: &BTreeSet<T>) -> String {
    struct Wrap<'a, T>(&'a BTreeSet<T>);
    impl<T: fmt::Display> fmt::Display for Wrap<'_, T> {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            write_set(f, self.0)
        }
    }
    Wrap(items).to_string()
}

pub fn signature(phi: &Formula) -> FragmentSignature {
    let mut sig = FragmentSignature::default();
    collect_signature(phi, &mut sig);
    sig
}

fn collect_signature(phi: &Formula, sig: &mut FragmentSignature) {
    match phi {
        Formula::Top | Formula::Atom(_) => {}
        Formula::Not(a) => {
            sig.boolean_ops.insert(BooleanOp::Not);
            collect_signature(a, sig);
        }
        Formula::And(a, b) | Formula::Or(a, b) | Formula::Xor(a, b) => {
            sig.boolean_ops.insert(match phi {
                Formula::And(..) => BooleanOp::And,
                Formula::Or(..) => BooleanOp::Or,
                _ => BooleanOp::Xor,
            });
            collect_signature(a, sig);
            collect_signature(b, sig);
        }
        Formula::Unary(op, a) => {
            sig.temporal_ops.insert(op.temporal());
            collect_signature(a, sig);
        }
        Formula::Binary(op, a, b) => {
            sig.temporal_ops.insert(op.temporal());
            collect_signature(a, sig);
            collect_signature(b, sig);
        }
    }
}

/// Rewrites every universal operator into the negation of its existential
/// dual: `AX φ → ¬EX¬φ`, `AF φ → ¬EG¬φ`, `AG φ → ¬EF¬φ`,
/// `A[ψ R φ] → ¬E[¬ψ U ¬φ]`, `A[ψ U φ] → ¬E[¬ψ R ¬φ]`.
pub fn dualize(phi: &Formula) -> Formula {
    match phi {
        Formula::Top | Formula::Atom(_) => phi.clone(),
        Formula::Not(a) => dualize(a).not(),
        Formula::And(a, b) => dualize(a).and(dualize(b)),
        Formula::Or(a, b) => dualize(a).or(dualize(b)),
        Formula::Xor(a, b) => dualize(a).xor(dualize(b)),
        Formula::Unary(op, a) => {
            let a = dualize(a);
            match op {
                UnaryOp::EX | UnaryOp::EF | UnaryOp::EG => Formula::unary(*op, a),
                UnaryOp::AX => Formula::ex(a.not()).not(),
                UnaryOp::AF => Formula::eg(a.not()).not(),
                UnaryOp::AG => Formula::ef(a.not()).not(),
            }
        }
        Formula::Binary(op, a, b) => {
            let (a, b) = (dualize(a), dualize(b));
            match op {
                BinaryOp::EU | BinaryOp::ER => Formula::binary(*op, a, b),
                BinaryOp::AR => Formula::eu(a.not(), b.not()).not(),
                BinaryOp::AU => Formula::er(a.not(), b.not()).not(),
            }
        }
    }
}
