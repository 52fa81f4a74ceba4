//! `apath` on a hand-written slice graph: existential nodes need one good
//! successor, universal nodes need all of them.

use ctl_fragments::altgraph::{apath_all, parse_slice_graph};

const GRAPH: &str = "\
slice 0: s
slice 1: u v
slice 2: a b c
edges:
s -> u
s -> v
u -> a
u -> b
v -> c
start: s
targets: a c
";

fn main() {
    let g = parse_slice_graph(GRAPH).unwrap();
    let table = apath_all(&g);
    for v in g.nodes() {
        println!("{:<2} slice {} {:?} apath={}", g.name(v), g.slice_of(v), g.quantifier(v), table[v.0]);
    }
}
