mod common;

use std::collections::BTreeSet;

use common::{closure, subsets, Table};
use ctl_fragments::classify::*;
use ctl_fragments::syntax::{BooleanOp, TemporalOp};

#[test]
fn clone_of_matches_brute_force_closure() {
    for s in subsets() {
        let c = clone_of(&s);
        let base: BTreeSet<BooleanOp> = c.base().iter().copied().collect();
        assert_eq!(closure(&s), closure(&base), "{s:?} -> {c}");
    }
}

#[test]
fn seven_distinct_clones() {
    let closures: BTreeSet<BTreeSet<Table>> = BooleanClone::ALL
        .iter()
        .map(|c| closure(&c.base().iter().copied().collect()))
        .collect();
    assert_eq!(closures.len(), 7);
    for a in BooleanClone::ALL {
        for b in BooleanClone::ALL {
            let ca = closure(&a.base().iter().copied().collect());
            let cb = closure(&b.base().iter().copied().collect());
            assert_eq!(a.is_subclone_of(b), ca.is_subset(&cb), "{a} {b}");
        }
    }
}

#[test]
fn and_xor_is_complete() {
    let s = BTreeSet::from([BooleanOp::And, BooleanOp::Xor]);
    assert_eq!(closure(&s).len(), 256);
    assert_eq!(clone_of(&s), BooleanClone::Bf);
    assert_eq!(clone_of(&BTreeSet::new()), BooleanClone::Id);
    assert_eq!(clone_of(&BTreeSet::from([BooleanOp::Not, BooleanOp::Or])), BooleanClone::Bf);
}

fn fp(class: ComplexityClass, qualifier: Qualifier) -> Option<Fingerprint> {
    Some(Fingerprint { class, qualifier })
}

#[test]
fn existential_cells() {
    use BooleanClone::*;
    use ComplexityClass::*;
    use Qualifier::*;
    assert_eq!(fingerprint(TemporalOp::EU, Id), fp(P, Complete));
    assert_eq!(fingerprint(TemporalOp::EF, AndOr), fp(LOGCFL, Complete));
    assert_eq!(fingerprint(TemporalOp::EG, Xor), fp(P, Complete));
    assert_eq!(fingerprint(TemporalOp::ER, Id), fp(LOGCFL, Complete));
    assert_eq!(fingerprint(TemporalOp::ER, And), fp(LOGCFL, HardOnly));
    assert_eq!(fingerprint(TemporalOp::EF, Xor), fp(AC1, HardOnly));
    assert_eq!(fingerprint(TemporalOp::EG, And), fp(NL, Complete));
    assert_eq!(fingerprint(TemporalOp::EX, Not), fp(P, Complete));
    for c in BooleanClone::ALL {
        assert_eq!(fingerprint(TemporalOp::EU, c), fp(P, Complete));
    }
}

#[test]
fn universal_cells_through_duality() {
    use BooleanClone::*;
    use ComplexityClass::*;
    use Qualifier::*;
    assert_eq!(fingerprint_dual(TemporalOp::AX, Or), fp(LOGCFL, Complete));
    assert_eq!(fingerprint_dual(TemporalOp::AG, Xor), fp(AC1, HardOnly));
    assert_eq!(fingerprint_dual(TemporalOp::AR, Id), fp(P, Complete));
    assert_eq!(fingerprint_dual(TemporalOp::AU, Or), fp(LOGCFL, HardOnly));
}

#[test]
fn strength_preorder() {
    assert!(mc_stronger(TemporalOp::EG, TemporalOp::ER));
    assert!(mc_stronger(TemporalOp::EX, TemporalOp::EU));
    assert!(!mc_stronger(TemporalOp::EU, TemporalOp::EX));
    for s in TemporalOp::ALL {
        assert!(mc_stronger(s, s));
        if s.is_existential() {
            assert!(mc_stronger(s, TemporalOp::EU), "{s}");
        }
        for t in TemporalOp::ALL {
            for u in TemporalOp::ALL {
                if mc_stronger(s, t) && mc_stronger(t, u) {
                    assert!(mc_stronger(s, u));
                }
            }
        }
    }
}
