//! The fixpoint checker against a path-enumeration evaluator.
//!
//! In a finite total graph every existential path property used by CTL has a
//! witness among the simple lassos: paths `w_0 … w_k` of distinct states
//! closed by an edge `w_k → w_j`. Universal operators hold iff every simple
//! lasso satisfies the path property, since a counterexample is again an
//! existential witness of the same shape.

use std::collections::HashMap;
use std::rc::Rc;

use ctl_fragments::kripke::{KripkeModel, StateId};
use ctl_fragments::sampling::{random_formula, random_model, Fragment};
use ctl_fragments::semantics::check;
use ctl_fragments::syntax::{parse_formula, BinaryOp, BooleanOp, Formula, TemporalOp, UnaryOp};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// A lasso as the sequence of states it visits: `prefix` then
/// `prefix[back..]` forever.
struct Lasso {
    states: Vec<StateId>,
    back: usize,
}

impl Lasso {
    fn at(&self, i: usize) -> StateId {
        if i < self.states.len() {
            self.states[i]
        } else {
            let period = self.states.len() - self.back;
            self.states[self.back + (i - self.back) % period]
        }
    }

    /// Every distinct position class is covered by `0..len`.
    fn horizon(&self) -> usize {
        self.states.len()
    }
}

fn lassos_from(m: &KripkeModel, w: StateId) -> Vec<Lasso> {
    fn go(m: &KripkeModel, path: &mut Vec<StateId>, out: &mut Vec<Lasso>) {
        let last = *path.last().unwrap();
        for &v in m.successors(last) {
            if let Some(j) = path.iter().position(|&u| u == v) {
                out.push(Lasso {
                    states: path.clone(),
                    back: j,
                });
            } else {
                path.push(v);
                go(m, path, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(m, &mut vec![w], &mut out);
    out
}

struct Oracle<'m> {
    m: &'m KripkeModel,
    lassos: Vec<Rc<Vec<Lasso>>>,
    memo: HashMap<(Formula, StateId), bool>,
}

impl<'m> Oracle<'m> {
    fn new(m: &'m KripkeModel) -> Self {
        let lassos = m.states().map(|w| Rc::new(lassos_from(m, w))).collect();
        Oracle {
            m,
            lassos,
            memo: HashMap::new(),
        }
    }

    fn path_holds(&mut self, l: &Lasso, op: TemporalOp, a: &Formula, b: Option<&Formula>) -> bool {
        let h = l.horizon();
        match op {
            TemporalOp::EX | TemporalOp::AX => self.holds(l.at(1), a),
            TemporalOp::EF | TemporalOp::AF => (0..h).any(|i| self.holds(l.at(i), a)),
            TemporalOp::EG | TemporalOp::AG => (0..h).all(|i| self.holds(l.at(i), a)),
            // a U b
            TemporalOp::EU | TemporalOp::AU => {
                let b = b.unwrap();
                for i in 0..h {
                    if self.holds(l.at(i), b) {
                        return true;
                    }
                    if !self.holds(l.at(i), a) {
                        return false;
                    }
                }
                false
            }
            // a R b: b holds until and including the first a, or forever
            TemporalOp::ER | TemporalOp::AR => {
                let b = b.unwrap();
                for i in 0..h {
                    if !self.holds(l.at(i), b) {
                        return false;
                    }
                    if self.holds(l.at(i), a) {
                        return true;
                    }
                }
                true
            }
        }
    }

    fn quantified(&mut self, w: StateId, op: TemporalOp, a: &Formula, b: Option<&Formula>) -> bool {
        let lassos = Rc::clone(&self.lassos[w.index()]);
        if op.is_existential() {
            lassos.iter().any(|l| self.path_holds(l, op, a, b))
        } else {
            lassos.iter().all(|l| self.path_holds(l, op, a, b))
        }
    }

    fn holds(&mut self, w: StateId, phi: &Formula) -> bool {
        if let Some(&v) = self.memo.get(&(phi.clone(), w)) {
            return v;
        }
        let v = match phi {
            Formula::Top => true,
            Formula::Atom(p) => self.m.has_label(w, p),
            Formula::Not(a) => !self.holds(w, a),
            Formula::And(a, b) => self.holds(w, a) && self.holds(w, b),
            Formula::Or(a, b) => self.holds(w, a) || self.holds(w, b),
            Formula::Xor(a, b) => self.holds(w, a) != self.holds(w, b),
            Formula::Unary(op, a) => self.quantified(w, op.temporal(), a, None),
            Formula::Binary(op, a, b) => self.quantified(w, op.temporal(), a, Some(b)),
        };
        self.memo.insert((phi.clone(), w), v);
        v
    }
}

#[test]
fn fixpoints_match_lasso_enumeration() {
    let all = Fragment::new(&TemporalOp::ALL, &[BooleanOp::Not, BooleanOp::And, BooleanOp::Or, BooleanOp::Xor]);
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for case in 0..600 {
        let m = random_model(&mut rng, 6);
        let phi = random_formula(&mut rng, &all, 4);
        let mut oracle = Oracle::new(&m);
        for w in m.states() {
            assert_eq!(check(&m, w, &phi), oracle.holds(w, &phi), "case {case}: {phi} at {}", m.name(w));
        }
    }
}

#[test]
fn every_operator_is_exercised() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for op in TemporalOp::ALL {
        let frag = Fragment::new(&[op], &[BooleanOp::Not]);
        for _ in 0..150 {
            let m = random_model(&mut rng, 5);
            let phi = random_formula(&mut rng, &frag, 3);
            let mut oracle = Oracle::new(&m);
            for w in m.states() {
                assert_eq!(check(&m, w, &phi), oracle.holds(w, &phi), "{phi}");
            }
        }
    }
}

// w0 -> w1 -> w2 -> w2, w0 -> w0 ; p on w0,w1 ; q on w2
fn chain() -> KripkeModel {
    let mut m = KripkeModel::new();
    for n in ["w0", "w1", "w2"] {
        m.add_state(n);
    }
    for (a, b) in [("w0", "w1"), ("w1", "w2"), ("w2", "w2"), ("w0", "w0")] {
        m.add_edge_by_name(a, b).unwrap();
    }
    m.add_label_by_name("w0", "p");
    m.add_label_by_name("w1", "p");
    m.add_label_by_name("w2", "q");
    m
}

#[test]
fn hand_checked_chain() {
    let m = chain();
    let w0 = StateId(0);
    let cases = [
        ("EG p", true),
        ("AG p", false),
        ("AF q", false),
        ("EF q", true),
        ("E[p U q]", true),
        ("A[p U q]", false),
        ("E[q R p]", true),
        ("A[q R p]", false),
        ("A[q R (p | q)]", true),
        ("EX EX q", true),
        ("AX p", true),
        ("AX AX q", false),
    ];
    let mut oracle = Oracle::new(&m);
    for (text, expected) in cases {
        let phi = parse_formula(text).unwrap();
        assert_eq!(check(&m, w0, &phi), expected, "{text}");
        assert_eq!(oracle.holds(w0, &phi), expected, "oracle {text}");
    }
}

#[test]
fn release_semantics_counts_the_releasing_position() {
    // a single looped state with q but not p: q R p needs p at the first position
    let mut m = KripkeModel::new();
    let w = m.add_state("w");
    m.add_edge(w, w);
    m.add_label(w, "q");
    let phi = Formula::binary(BinaryOp::ER, Formula::atom("q"), Formula::atom("p"));
    assert!(!check(&m, w, &phi));
    let phi = Formula::binary(BinaryOp::ER, Formula::atom("q"), Formula::atom("q"));
    assert!(check(&m, w, &phi));
    assert!(check(&m, w, &Formula::unary(UnaryOp::EG, Formula::atom("q"))));
}
