//! Seeded random models and formulas for oracle comparisons.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::kripke::{KripkeModel, StateId};
use crate::syntax::{BinaryOp, BooleanOp, Formula, TemporalOp, UnaryOp};

pub const ATOMS: [&str; 3] = ["p", "q", "r"];

/// A total model with `1..=max_states` states, one to three successors per
/// state and each atom of [`ATOMS`] labelled with probability 1/2.
pub fn random_model<R: Rng>(rng: &mut R, max_states: usize) -> KripkeModel {
    let n = rng.gen_range(1..=max_states.max(1));
    let mut m = KripkeModel::new();
    for i in 0..n {
        m.add_state(format!("w{i}"));
    }
    for i in 0..n {
        let out = rng.gen_range(1..=3.min(n));
        let mut targets: Vec<usize> = (0..n).collect();
        targets.shuffle(rng);
        for &j in &targets[..out] {
            m.add_edge(StateId(i), StateId(j));
        }
        for a in ATOMS {
            if rng.gen_bool(0.5) {
                m.add_label(StateId(i), a);
            }
        }
    }
    m
}

/// Operators a random formula may use.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fragment {
    pub temporal: Vec<TemporalOp>,
    pub boolean: Vec<BooleanOp>,
}

impl Fragment {
    pub fn new(temporal: &[TemporalOp], boolean: &[BooleanOp]) -> Fragment {
        Fragment {
            temporal: temporal.to_vec(),
            boolean: boolean.to_vec(),
        }
    }

    pub fn label(&self) -> String {
        let t: Vec<String> = self.temporal.iter().map(ToString::to_string).collect();
        let b: Vec<String> = self.boolean.iter().map(ToString::to_string).collect();
        format!("{{{}}} {{{}}}", t.join(","), b.join(","))
    }
}

fn temporal_node(op: TemporalOp, mut sub: impl FnMut() -> Formula) -> Formula {
    let unary = match op {
        TemporalOp::EX => UnaryOp::EX,
        TemporalOp::AX => UnaryOp::AX,
        TemporalOp::EF => UnaryOp::EF,
        TemporalOp::AG => UnaryOp::AG,
        TemporalOp::EG => UnaryOp::EG,
        TemporalOp::AF => UnaryOp::AF,
        _ => {
            let b = match op {
                TemporalOp::EU => BinaryOp::EU,
                TemporalOp::AU => BinaryOp::AU,
                TemporalOp::ER => BinaryOp::ER,
                _ => BinaryOp::AR,
            };
            let lhs = sub();
            return Formula::binary(b, lhs, sub());
        }
    };
    Formula::unary(unary, sub())
}

/// A formula over [`ATOMS`] (and occasionally `⊤`) of depth at most `depth`
/// that uses only the operators of `fragment`.
pub fn random_formula<R: Rng>(rng: &mut R, fragment: &Fragment, depth: usize) -> Formula {
    let ops = fragment.temporal.len() + fragment.boolean.len();
    if depth == 0 || ops == 0 || rng.gen_bool(0.25) {
        return if rng.gen_bool(0.1) {
            Formula::Top
        } else {
            Formula::atom(*ATOMS.choose(rng).expect("non-empty"))
        };
    }
    let k = rng.gen_range(0..ops);
    if k < fragment.temporal.len() {
        temporal_node(fragment.temporal[k], || random_formula(rng, fragment, depth - 1))
    } else {
        let sub = |rng: &mut R| random_formula(rng, fragment, depth - 1);
        match fragment.boolean[k - fragment.temporal.len()] {
            BooleanOp::Not => sub(rng).not(),
            BooleanOp::And => sub(rng).and(sub(rng)),
            BooleanOp::Or => sub(rng).or(sub(rng)),
            BooleanOp::Xor => sub(rng).xor(sub(rng)),
        }
    }
}
