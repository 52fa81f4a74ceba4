//! Which engine `route` picks for formulas from different fragments, and
//! that it agrees with the fixpoint checker.

use ctl_fragments::fastcheck::route;
use ctl_fragments::sampling::random_model;
use ctl_fragments::semantics::check;
use ctl_fragments::syntax::parse_formula;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let m = random_model(&mut rng, 8);
    let w = m.states().next().unwrap();
    let formulas = [
        "E[E[p R q] R r]",
        "EG (p & EG (q & r))",
        "EG p | EG (q | EG r)",
        "!EG !EG !EG p",
        "EF (p | EF q)",
        "!EF !EF !EF !EF q",
        "EF (p & EF q)",
        "E[p U q]",
        "EX (p ^ q)",
    ];
    for text in formulas {
        let phi = parse_formula(text).unwrap();
        let (v, engine) = route(&m, w, &phi);
        assert_eq!(v, check(&m, w, &phi));
        println!("{text:<24} engine={engine:<8} verdict={v}");
    }
}
