//! Times a fragment engine against the fixpoint checker on growing
//! reachability instances of the `{EG,∨}` construction.

use std::time::Instant;

use ctl_fragments::altgraph::random_gap;
use ctl_fragments::fastcheck::route;
use ctl_fragments::reductions::reduce_gap_eg;
use ctl_fragments::semantics::check;

fn main() {
    for n in [8, 16, 32, 64] {
        let inst = reduce_gap_eg(&random_gap(n, 2.0 / n as f64, 1)).instance;
        let t = Instant::now();
        let (fast, engine) = route(&inst.model, inst.start, &inst.formula);
        let fast_t = t.elapsed();
        let t = Instant::now();
        let slow = check(&inst.model, inst.start, &inst.formula);
        let slow_t = t.elapsed();
        assert_eq!(fast, slow);
        println!(
            "n={n:<3} states={:<5} |phi|={:<5} {engine}={fast_t:?} fixpoint={slow_t:?}",
            inst.model.len(),
            inst.formula.size()
        );
    }
}
