use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

/// Unary CTL operators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum UnaryOp {
    EX,
    AX,
    EF,
    AG,
    EG,
    AF,
}

/// Binary CTL operators, written `E[φ U ψ]` and so on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum BinaryOp {
    EU,
    AU,
    ER,
    AR,
}

/// Any of the ten CTL operators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum TemporalOp {
    EX,
    AX,
    EF,
    AG,
    EG,
    AF,
    EU,
    AU,
    ER,
    AR,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum BooleanOp {
    Not,
    And,
    Or,
    Xor,
}

impl UnaryOp {
    pub const ALL: [UnaryOp; 6] = [
        UnaryOp::EX,
        UnaryOp::AX,
        UnaryOp::EF,
        UnaryOp::AG,
        UnaryOp::EG,
        UnaryOp::AF,
    ];

    pub fn keyword(self) -> &'static str {
        match self {
            UnaryOp::EX => "EX",
            UnaryOp::AX => "AX",
            UnaryOp::EF => "EF",
            UnaryOp::AG => "AG",
            UnaryOp::EG => "EG",
            UnaryOp::AF => "AF",
        }
    }

    pub fn temporal(self) -> TemporalOp {
        match self {
            UnaryOp::EX => TemporalOp::EX,
            UnaryOp::AX => TemporalOp::AX,
            UnaryOp::EF => TemporalOp::EF,
            UnaryOp::AG => TemporalOp::AG,
            UnaryOp::EG => TemporalOp::EG,
            UnaryOp::AF => TemporalOp::AF,
        }
    }
}

impl BinaryOp {
    pub const ALL: [BinaryOp; 4] = [BinaryOp::EU, BinaryOp::AU, BinaryOp::ER, BinaryOp::AR];

    pub fn temporal(self) -> TemporalOp {
        match self {
            BinaryOp::EU => TemporalOp::EU,
            BinaryOp::AU => TemporalOp::AU,
            BinaryOp::ER => TemporalOp::ER,
            BinaryOp::AR => TemporalOp::AR,
        }
    }

    fn quantifier(self) -> char {
        match self {
            BinaryOp::EU | BinaryOp::ER => 'E',
            BinaryOp::AU | BinaryOp::AR => 'A',
        }
    }

    fn connective(self) -> char {
        match self {
            BinaryOp::EU | BinaryOp::AU => 'U',
            BinaryOp::ER | BinaryOp::AR => 'R',
        }
    }
}

impl TemporalOp {
    pub const ALL: [TemporalOp; 10] = [
        TemporalOp::EX,
        TemporalOp::AX,
        TemporalOp::EF,
        TemporalOp::AG,
        TemporalOp::EG,
        TemporalOp::AF,
        TemporalOp::EU,
        TemporalOp::AU,
        TemporalOp::ER,
        TemporalOp::AR,
    ];

    pub fn is_existential(self) -> bool {
        matches!(
            self,
            TemporalOp::EX | TemporalOp::EF | TemporalOp::EG | TemporalOp::EU | TemporalOp::ER
        )
    }

    /// The operator of the opposite path quantifier, `AX ↔ EX`, `AG ↔ EF`,
    /// `AF ↔ EG`, `AR ↔ EU`, `AU ↔ ER`.
    pub fn dual(self) -> TemporalOp {
        match self {
            TemporalOp::EX => TemporalOp::AX,
            TemporalOp::AX => TemporalOp::EX,
            TemporalOp::EF => TemporalOp::AG,
            TemporalOp::AG => TemporalOp::EF,
            TemporalOp::EG => TemporalOp::AF,
            TemporalOp::AF => TemporalOp::EG,
            TemporalOp::EU => TemporalOp::AR,
            TemporalOp::AR => TemporalOp::EU,
            TemporalOp::ER => TemporalOp::AU,
            TemporalOp::AU => TemporalOp::ER,
        }
    }
}

impl fmt::Display for TemporalOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl fmt::Display for BooleanOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BooleanOp::Not => "!",
            BooleanOp::And => "&",
            BooleanOp::Or => "|",
            BooleanOp::Xor => "^",
        })
    }
}

/// A CTL formula. Children are reference counted so that large formula
/// families can share subformulas.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Formula {
    Top,
    Atom(String),
    Not(Arc<Formula>),
    And(Arc<Formula>, Arc<Formula>),
    Or(Arc<Formula>, Arc<Formula>),
    Xor(Arc<Formula>, Arc<Formula>),
    Unary(UnaryOp, Arc<Formula>),
    Binary(BinaryOp, Arc<Formula>, Arc<Formula>),
}

impl Formula {
    pub fn atom(name: impl Into<String>) -> Formula {
        Formula::Atom(name.into())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(self) -> Formula {
        Formula::Not(Arc::new(self))
    }

    pub fn and(self, rhs: Formula) -> Formula {
        Formula::And(Arc::new(self), Arc::new(rhs))
    }

    pub fn or(self, rhs: Formula) -> Formula {
        Formula::Or(Arc::new(self), Arc::new(rhs))
    }

    pub fn xor(self, rhs: Formula) -> Formula {
        Formula::Xor(Arc::new(self), Arc::new(rhs))
    }

    pub fn unary(op: UnaryOp, inner: Formula) -> Formula {
        Formula::Unary(op, Arc::new(inner))
    }

    pub fn binary(op: BinaryOp, lhs: Formula, rhs: Formula) -> Formula {
        Formula::Binary(op, Arc::new(lhs), Arc::new(rhs))
    }

    pub fn ex(inner: Formula) -> Formula {
        Formula::unary(UnaryOp::EX, inner)
    }

    pub fn ax(inner: Formula) -> Formula {
        Formula::unary(UnaryOp::AX, inner)
    }

    pub fn ef(inner: Formula) -> Formula {
        Formula::unary(UnaryOp::EF, inner)
    }

    pub fn ag(inner: Formula) -> Formula {
        Formula::unary(UnaryOp::AG, inner)
    }

    pub fn eg(inner: Formula) -> Formula {
        Formula::unary(UnaryOp::EG, inner)
    }

    pub fn af(inner: Formula) -> Formula {
        Formula::unary(UnaryOp::AF, inner)
    }

    pub fn eu(lhs: Formula, rhs: Formula) -> Formula {
        Formula::binary(BinaryOp::EU, lhs, rhs)
    }

    pub fn au(lhs: Formula, rhs: Formula) -> Formula {
        Formula::binary(BinaryOp::AU, lhs, rhs)
    }

    pub fn er(lhs: Formula, rhs: Formula) -> Formula {
        Formula::binary(BinaryOp::ER, lhs, rhs)
    }

    pub fn ar(lhs: Formula, rhs: Formula) -> Formula {
        Formula::binary(BinaryOp::AR, lhs, rhs)
    }

    /// Left-nested exclusive or of all items; `None` for an empty iterator.
    pub fn xor_all(items: impl IntoIterator<Item = Formula>) -> Option<Formula> {
        items.into_iter().reduce(Formula::xor)
    }

    /// Number of atom occurrences (⊤ is not counted).
    pub fn atom_count(&self) -> usize {
        match self {
            Formula::Top => 0,
            Formula::Atom(_) => 1,
            Formula::Not(a) | Formula::Unary(_, a) => a.atom_count(),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Xor(a, b) | Formula::Binary(_, a, b) => {
                a.atom_count() + b.atom_count()
            }
        }
    }

    /// Number of nodes in the syntax tree.
    pub fn size(&self) -> usize {
        match self {
            Formula::Top | Formula::Atom(_) => 1,
            Formula::Not(a) | Formula::Unary(_, a) => 1 + a.size(),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Xor(a, b) | Formula::Binary(_, a, b) => {
                1 + a.size() + b.size()
            }
        }
    }

    /// Nesting depth of the syntax tree; leaves have depth 0.
    pub fn depth(&self) -> usize {
        match self {
            Formula::Top | Formula::Atom(_) => 0,
            Formula::Not(a) | Formula::Unary(_, a) => 1 + a.depth(),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Xor(a, b) | Formula::Binary(_, a, b) => {
                1 + a.depth().max(b.depth())
            }
        }
    }

    pub fn atoms(&self) -> BTreeSet<&str> {
        let mut out = BTreeSet::new();
        self.collect_atoms(&mut out);
        out
    }

    fn collect_atoms<'a>(&'a self, out: &mut BTreeSet<&'a str>) {
        match self {
            Formula::Top => {}
            Formula::Atom(p) => {
                out.insert(p.as_str());
            }
            Formula::Not(a) | Formula::Unary(_, a) => a.collect_atoms(out),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Xor(a, b) | Formula::Binary(_, a, b) => {
                a.collect_atoms(out);
                b.collect_atoms(out);
            }
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            Formula::Xor(..) => 1,
            Formula::Or(..) => 2,
            Formula::And(..) => 3,
            _ => 4,
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_formula(self, 0, f)
    }
}

fn write_formula(phi: &Formula, min_prec: u8, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let prec = phi.precedence();
    if prec < min_prec {
        f.write_str("(")?;
        write_formula(phi, 0, f)?;
        return f.write_str(")");
    }
    match phi {
        Formula::Top => f.write_str("true"),
        Formula::Atom(p) => f.write_str(p),
        Formula::Not(a) => {
            f.write_str("!")?;
            write_formula(a, 4, f)
        }
        Formula::And(a, b) | Formula::Or(a, b) | Formula::Xor(a, b) => {
            // left-associative: the right operand needs strictly higher precedence
            let sym = match phi {
                Formula::And(..) => " & ",
                Formula::Or(..) => " | ",
                _ => " ^ ",
            };
            write_formula(a, prec, f)?;
            f.write_str(sym)?;
            write_formula(b, prec + 1, f)
        }
        Formula::Unary(op, a) => {
            write!(f, "{} ", op.keyword())?;
            write_formula(a, 4, f)
        }
        Formula::Binary(op, a, b) => {
            write!(f, "{}[", op.quantifier())?;
            write_formula(a, 0, f)?;
            write!(f, " {} ", op.connective())?;
            write_formula(b, 0, f)?;
            f.write_str("]")
        }
    }
}
