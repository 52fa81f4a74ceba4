//! Parse a model file and decide a few formulas with the fixpoint checker.

use ctl_fragments::kripke::parse_model;
use ctl_fragments::semantics::{check, states_satisfying};
use ctl_fragments::syntax::parse_formula;

const MODEL: &str = "\
# a request is eventually granted unless the system idles forever
states:
idle
req
grant
edges:
idle -> idle
idle -> req
req -> grant
req -> req
grant -> idle
labels:
req : r
grant : g
start: idle
";

fn main() {
    let file = parse_model(MODEL).expect("well-formed model");
    let m = file.model;
    let start = file.start.expect("model has a start");
    for text in ["EF g", "AG (!r | AF g)", "AG (!r | EF g)", "E[!g U r]", "A[g R !r]", "EG !g"] {
        let phi = parse_formula(text).expect("well-formed formula");
        let sat: Vec<&str> = states_satisfying(&m, &phi).iter().map(|w| m.name(w)).collect();
        println!("{:<18} at idle: {:<5} holds in {:?}", text, check(&m, start, &phi), sat);
    }
}
