//! Operator sets, Boolean clones and complexity fingerprints.

use ctl_fragments::classify::{classify, fingerprint, BooleanClone};
use ctl_fragments::syntax::{parse_formula, TemporalOp};

fn main() {
    for text in [
        "E[p U q]",
        "EF (p & EF q)",
        "EF (p ^ EF q)",
        "EG (p | q)",
        "AX (p | q)",
        "AG (p ^ q)",
        "E[p R !q]",
        "EX p & EG q",
    ] {
        let c = classify(&parse_formula(text).unwrap());
        println!("{text:<16} {c}");
    }

    println!();
    print!("{:<4}", "");
    for c in BooleanClone::ALL {
        print!("{:>20}", c.name());
    }
    println!();
    for op in [TemporalOp::EX, TemporalOp::EU, TemporalOp::ER, TemporalOp::EG, TemporalOp::EF] {
        print!("{:<4}", op.to_string());
        for c in BooleanClone::ALL {
            let cell = fingerprint(op, c).map_or("-".to_string(), |f| f.to_string());
            print!("{cell:>20}");
        }
        println!();
    }
}
