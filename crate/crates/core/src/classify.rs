//! Boolean clones, complexity fingerprints of single-operator fragments and
//! the mc-strength preorder.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::fastcheck::{engine_for, Engine};
use crate::syntax::{format_op_set, signature, BooleanOp, Formula, TemporalOp};

/// The seven clones that matter for model checking, named after their
/// standard bases. `⊤` is always available, so `¬x = x ⊕ ⊤`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum BooleanClone {
    /// Generated by the empty set.
    Id,
    /// `{∨}`
    Or,
    /// `{∧}`
    And,
    /// `{∧,∨}`
    AndOr,
    /// `{¬}`
    Not,
    /// `{⊕}`
    Xor,
    /// `{∧,⊕}`, every Boolean function.
    Bf,
}

impl BooleanClone {
    pub const ALL: [BooleanClone; 7] = [
        BooleanClone::Id,
        BooleanClone::Or,
        BooleanClone::And,
        BooleanClone::AndOr,
        BooleanClone::Not,
        BooleanClone::Xor,
        BooleanClone::Bf,
    ];

    pub fn base(self) -> &'static [BooleanOp] {
        use BooleanOp::*;
        match self {
            BooleanClone::Id => &[],
            BooleanClone::Or => &[Or],
            BooleanClone::And => &[And],
            BooleanClone::AndOr => &[And, Or],
            BooleanClone::Not => &[Not],
            BooleanClone::Xor => &[Xor],
            BooleanClone::Bf => &[And, Xor],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            BooleanClone::Id => "id",
            BooleanClone::Or => "V",
            BooleanClone::And => "E",
            BooleanClone::AndOr => "M",
            BooleanClone::Not => "N",
            BooleanClone::Xor => "L",
            BooleanClone::Bf => "BF",
        }
    }

    /// The clone of the dual functions `f(¬x̄)` negated: `∧ ↔ ∨`, the rest
    /// map to themselves.
    pub fn dual(self) -> BooleanClone {
        match self {
            BooleanClone::Or => BooleanClone::And,
            BooleanClone::And => BooleanClone::Or,
            other => other,
        }
    }

    /// Inclusion in the lattice of the seven clones.
    pub fn is_subclone_of(self, other: BooleanClone) -> bool {
        use BooleanClone::*;
        self == other
            || other == Bf
            || self == Id
            || matches!((self, other), (Or | And, AndOr) | (Not, Xor))
    }
}

impl fmt::Display for BooleanClone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub fn clone_of(ops: &BTreeSet<BooleanOp>) -> BooleanClone {
    use BooleanOp::*;
    let has = |op| ops.contains(&op);
    let monotone = has(And) || has(Or);
    let linear = has(Not) || has(Xor);
    match (monotone, linear) {
        (true, true) => BooleanClone::Bf,
        (false, true) if has(Xor) => BooleanClone::Xor,
        (false, true) => BooleanClone::Not,
        (true, false) if has(And) && has(Or) => BooleanClone::AndOr,
        (true, false) if has(And) => BooleanClone::And,
        (true, false) => BooleanClone::Or,
        (false, false) => BooleanClone::Id,
    }
}

/// Complexity classes ordered by inclusion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ComplexityClass {
    NL,
    LOGCFL,
    AC1,
    P,
}

impl fmt::Display for ComplexityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Qualifier {
    Complete,
    /// Hard for the class, with `P` as the best known upper bound.
    HardOnly,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Fingerprint {
    pub class: ComplexityClass,
    pub qualifier: Qualifier,
}

impl Fingerprint {
    const fn complete(class: ComplexityClass) -> Fingerprint {
        Fingerprint {
            class,
            qualifier: Qualifier::Complete,
        }
    }

    const fn hard(class: ComplexityClass) -> Fingerprint {
        Fingerprint {
            class,
            qualifier: Qualifier::HardOnly,
        }
    }
}

impl fmt::Display for Fingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.qualifier {
            Qualifier::Complete => write!(f, "{}-complete", self.class),
            Qualifier::HardOnly => write!(f, "{}-hard (in P)", self.class),
        }
    }
}

/// Fingerprint cell of an existential operator; `None` for universal ones.
pub fn fingerprint(op: TemporalOp, clone: BooleanClone) -> Option<Fingerprint> {
    use BooleanClone::*;
    use ComplexityClass::*;
    let c = Fingerprint::complete;
    let cell = match op {
        TemporalOp::EX => match clone {
            Id | Or => c(NL),
            And | AndOr => c(LOGCFL),
            Not | Xor | Bf => c(P),
        },
        TemporalOp::EU => c(P),
        TemporalOp::ER => match clone {
            Id => c(LOGCFL),
            And => Fingerprint::hard(LOGCFL),
            _ => c(P),
        },
        TemporalOp::EG => match clone {
            Id | Or | And | Not => c(NL),
            AndOr | Xor | Bf => c(P),
        },
        TemporalOp::EF => match clone {
            Id | Or | Not => c(NL),
            And | AndOr => c(LOGCFL),
            Xor => Fingerprint::hard(AC1),
            Bf => c(P),
        },
        _ => return None,
    };
    Some(cell)
}

/// Fingerprint cell of a universal operator through its existential dual
/// and the dual clone; `None` for existential operators. All four classes
/// are closed under complement, so the class carries over unchanged.
pub fn fingerprint_dual(op: TemporalOp, clone: BooleanClone) -> Option<Fingerprint> {
    if op.is_existential() {
        return None;
    }
    fingerprint(op.dual(), clone.dual())
}

/// The cell of any operator.
pub fn cell(op: TemporalOp, clone: BooleanClone) -> Fingerprint {
    fingerprint(op, clone)
        .or_else(|| fingerprint_dual(op, clone))
        .expect("every operator is existential or universal")
}

/// `s ≼ t`: on every clone the class of `s` is at most the class of `t`
/// (open cells count with their hardness class).
pub fn mc_stronger(s: TemporalOp, t: TemporalOp) -> bool {
    BooleanClone::ALL
        .iter()
        .all(|&c| cell(s, c).class <= cell(t, c).class)
}

/// What `classify` reports for a formula.
#[derive(Debug, Clone, Serialize)]
pub struct Classification {
    pub temporal_ops: BTreeSet<TemporalOp>,
    pub boolean_ops: BTreeSet<BooleanOp>,
    pub clone: BooleanClone,
    /// Present when exactly one temporal operator occurs.
    pub fingerprint: Option<Fingerprint>,
    pub engine: Engine,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ops={} clone={} fingerprint=", format_op_set(&self.temporal_ops), self.clone)?;
        match self.fingerprint {
            Some(fp) => write!(f, "{fp}")?,
            None => f.write_str("none")?,
        }
        write!(f, " engine={}", self.engine)
    }
}

pub fn classify(phi: &Formula) -> Classification {
    let sig = signature(phi);
    let clone = clone_of(&sig.boolean_ops);
    Classification {
        fingerprint: sig.sole_temporal().map(|op| cell(op, clone)),
        clone,
        temporal_ops: sig.temporal_ops,
        boolean_ops: sig.boolean_ops,
        engine: engine_for(phi),
    }
}
