//! Oracles shared by several test targets.
#![allow(dead_code)]

use std::collections::BTreeSet;

use ctl_fragments::kripke::KripkeModel;
use ctl_fragments::sampling::{random_formula, random_model, Fragment};
use ctl_fragments::semantics::states_satisfying;
use ctl_fragments::syntax::{BooleanOp, Formula, TemporalOp};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type Law = (&'static str, fn(Formula, Formula) -> (Formula, Formula));

pub fn rewrites() -> Vec<Law> {
    vec![
        ("EG(a & EG b) = EG(a & b)", |a, b| {
            (Formula::eg(a.clone().and(Formula::eg(b.clone()))), Formula::eg(a.and(b)))
        }),
        ("EG EG a = EG a", |a, _| (Formula::eg(Formula::eg(a.clone())), Formula::eg(a))),
        ("AF AF a = AF a", |a, _| (Formula::af(Formula::af(a.clone())), Formula::af(a))),
        ("EG AF EG a = AF EG a", |a, _| {
            (
                Formula::eg(Formula::af(Formula::eg(a.clone()))),
                Formula::af(Formula::eg(a)),
            )
        }),
        ("AF EG AF a = EG AF a", |a, _| {
            (
                Formula::af(Formula::eg(Formula::af(a.clone()))),
                Formula::eg(Formula::af(a)),
            )
        }),
        ("EF(a | EF b) = EF(a | b)", |a, b| {
            (Formula::ef(a.clone().or(Formula::ef(b.clone()))), Formula::ef(a.or(b)))
        }),
        ("EF a | EF b = EF(a | b)", |a, b| {
            (Formula::ef(a.clone()).or(Formula::ef(b.clone())), Formula::ef(a.or(b)))
        }),
        ("EF EF a = EF a", |a, _| (Formula::ef(Formula::ef(a.clone())), Formula::ef(a))),
        ("AG AG a = AG a", |a, _| (Formula::ag(Formula::ag(a.clone())), Formula::ag(a))),
        ("EF AG EF AG a = EF AG a", |a, _| {
            let efag = |x| Formula::ef(Formula::ag(x));
            (efag(efag(a.clone())), efag(a))
        }),
    ]
}

pub fn dualities() -> Vec<Law> {
    vec![
        ("AX a = !EX !a", |a, _| (Formula::ax(a.clone()), Formula::ex(a.not()).not())),
        ("AF a = !EG !a", |a, _| (Formula::af(a.clone()), Formula::eg(a.not()).not())),
        ("AG a = !EF !a", |a, _| (Formula::ag(a.clone()), Formula::ef(a.not()).not())),
        ("A[b R a] = !E[!b U !a]", |a, b| {
            (Formula::ar(b.clone(), a.clone()), Formula::eu(b.not(), a.not()).not())
        }),
        ("A[b U a] = !E[!b R !a]", |a, b| {
            (Formula::au(b.clone(), a.clone()), Formula::er(b.not(), a.not()).not())
        }),
    ]
}

pub fn full() -> Fragment {
    Fragment::new(
        &TemporalOp::ALL,
        &[BooleanOp::Not, BooleanOp::And, BooleanOp::Or, BooleanOp::Xor],
    )
}

/// First law that fails on a random model, as `(law, lhs, rhs)`.
pub fn first_violation(laws: Vec<Law>, seed: u64, models: usize) -> Option<(String, Formula, Formula)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for (name, law) in laws {
        for _ in 0..models {
            let m: KripkeModel = random_model(&mut rng, 8);
            let a = random_formula(&mut rng, &full(), 2);
            let b = random_formula(&mut rng, &full(), 2);
            let (lhs, rhs) = law(a, b);
            if states_satisfying(&m, &lhs) != states_satisfying(&m, &rhs) {
                return Some((name.to_string(), lhs, rhs));
            }
        }
    }
    None
}

/// Ternary Boolean functions as 8-bit truth tables.
pub type Table = u8;

pub const X: [Table; 3] = [0b1010_1010, 0b1100_1100, 0b1111_0000];
pub const TOP: Table = 0xff;

/// Every ternary function obtained from the projections and `⊤` by
/// composing the given connectives.
pub fn closure(ops: &BTreeSet<BooleanOp>) -> BTreeSet<Table> {
    let mut set: BTreeSet<Table> = X.iter().copied().chain([TOP]).collect();
    loop {
        let items: Vec<Table> = set.iter().copied().collect();
        let before = set.len();
        for &op in ops {
            for &a in &items {
                match op {
                    BooleanOp::Not => {
                        set.insert(!a);
                    }
                    _ => {
                        for &b in &items {
                            set.insert(match op {
                                BooleanOp::And => a & b,
                                BooleanOp::Or => a | b,
                                _ => a ^ b,
                            });
                        }
                    }
                }
            }
        }
        if set.len() == before {
            return set;
        }
    }
}

pub fn subsets() -> Vec<BTreeSet<BooleanOp>> {
    let ops = [BooleanOp::Not, BooleanOp::And, BooleanOp::Or, BooleanOp::Xor];
    (0..16u32)
        .map(|mask| (0..4).filter(|i| mask >> i & 1 == 1).map(|i| ops[i]).collect())
        .collect()
}

