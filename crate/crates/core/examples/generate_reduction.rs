//! Build a random slice graph, reduce it with every construction and
//! compare the model-checking verdict with `apath`.

use ctl_fragments::altgraph::{apath, gen_random, GenParams};
use ctl_fragments::reductions::{reduce_slice_graph, Construction};
use ctl_fragments::semantics::check;

fn main() {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(7);
    let general = gen_random(GenParams::new(3, 4, seed)).unwrap();
    let restricted = gen_random(GenParams::new(3, 6, seed).restricted()).unwrap();
    let restricted_log = gen_random(GenParams::new(3, 6, seed).restricted().log_depth()).unwrap();
    let general_log = gen_random(GenParams::new(3, 4, seed).log_depth()).unwrap();
    for c in Construction::ALL {
        let g = match c {
            Construction::Eu | Construction::ErOr | Construction::EgXor => &restricted,
            Construction::ErOnly => &restricted_log,
            Construction::EfXor => &general_log,
            _ => &general,
        };
        let Some(out) = reduce_slice_graph(c, g) else {
            continue;
        };
        let out = out.expect("generated graphs are valid inputs");
        let inst = &out.instance;
        println!(
            "{:<15} nodes={:<3} states={:<3} |phi|={:<4} check={:<5} apath={}",
            c.to_string(),
            g.len(),
            inst.model.len(),
            inst.formula.size(),
            check(&inst.model, inst.start, &inst.formula),
            apath(g, g.start().unwrap())
        );
    }
}
