//! Seeded random slice graphs.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use super::{log_depth_bound, AltSliceGraph, NodeId, Quantifier};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Shape {
    /// Any slice-respecting edges.
    General,
    /// Universal outdegree 2, existential indegree 1 outside `V_0`.
    Restricted,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GenParams {
    /// Number of slices `m + 1`.
    pub slices: usize,
    /// Upper bound on the number of nodes per slice (before log-depth padding).
    pub width: usize,
    pub seed: u64,
    pub shape: Shape,
    /// Pad `V_0` with extra existential nodes until `m ≤ ⌊log₂ |V|⌋`.
    pub log_depth: bool,
}

impl GenParams {
    pub fn new(slices: usize, width: usize, seed: u64) -> GenParams {
        GenParams {
            slices,
            width,
            seed,
            shape: Shape::General,
            log_depth: false,
        }
    }

    pub fn restricted(mut self) -> GenParams {
        self.shape = Shape::Restricted;
        self
    }

    pub fn log_depth(mut self) -> GenParams {
        self.log_depth = true;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("infeasible parameters: {0}")]
    Infeasible(String),
}

/// Deterministic for a fixed `GenParams`; the result passes the validator
/// matching the requested shape. Node `v{i}_{k}` is the `k`-th node of
/// slice `i`, the start is `v0_0`, and each last-slice node is a target with
/// probability 1/2.
pub fn gen_random(params: GenParams) -> Result<AltSliceGraph, GenError> {
    if params.slices == 0 || params.width == 0 {
        return Err(GenError::Infeasible(
            "slices and width must be positive".into(),
        ));
    }
    if params.shape == Shape::Restricted && params.slices >= 3 && params.width < 2 {
        return Err(GenError::Infeasible(
            "a restricted graph with an inner universal slice needs width >= 2".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let mut g = AltSliceGraph::new();
    let m = params.slices - 1;

    let first = rng.gen_range(1..=params.width);
    for k in 0..first {
        g.add_node(format!("v0_{k}"), 0);
    }
    g.set_start(NodeId(0));

    for i in 1..=m {
        let prev: Vec<NodeId> = g.slice(i - 1).to_vec();
        let restricted = params.shape == Shape::Restricted;
        if restricted && Quantifier::of_slice(i) == Quantifier::Exists {
            // two fresh children per universal parent
            let mut k = 0;
            for &u in &prev {
                for _ in 0..2 {
                    let v = g.add_node(format!("v{i}_{k}"), i);
                    g.add_edge(u, v);
                    k += 1;
                }
            }
            continue;
        }
        let cap = if restricted && i < m {
            (params.width / 2).max(1)
        } else {
            params.width
        };
        let size = rng.gen_range(1..=cap);
        let cur: Vec<NodeId> = (0..size)
            .map(|k| g.add_node(format!("v{i}_{k}"), i))
            .collect();
        connect(&mut g, &mut rng, &prev, &cur);
    }

    if params.log_depth {
        let mut k = g.slice(0).len();
        while m > log_depth_bound(g.len()) {
            let v = g.add_node(format!("v0_{k}"), 0);
            k += 1;
            if m >= 1 {
                let next = g.slice(1).to_vec();
                let z = *next.choose(&mut rng).expect("slice 1 is nonempty");
                g.add_edge(v, z);
            }
        }
    }

    let last: Vec<NodeId> = g.slice(m).to_vec();
    for v in last {
        if rng.gen_bool(0.5) {
            g.add_target(v);
        }
    }
    Ok(g)
}

/// Every node of `prev` gets one to three successors in `cur`, and every
/// node of `cur` gets at least one predecessor.
fn connect(g: &mut AltSliceGraph, rng: &mut ChaCha8Rng, prev: &[NodeId], cur: &[NodeId]) {
    for &x in prev {
        let k = rng.gen_range(1..=cur.len().min(3));
        for &z in cur.choose_multiple(rng, k) {
            g.add_edge(x, z);
        }
    }
    for &z in cur {
        if g.predecessors(z).is_empty() {
            let &x = prev.choose(rng).expect("previous slice is nonempty");
            g.add_edge(x, z);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::altgraph::{apath, validate_logdepth, validate_restricted, validate_slice_graph};

    #[test]
    fn same_seed_same_graph() {
        let p = GenParams::new(5, 4, 17);
        assert_eq!(gen_random(p).unwrap(), gen_random(p).unwrap());
    }

    #[test]
    fn shapes_pass_their_validators() {
        for seed in 0..100 {
            let g = gen_random(GenParams::new(4, 5, seed)).unwrap();
            assert_eq!(validate_slice_graph(&g), Ok(()));
            let g = gen_random(GenParams::new(5, 6, seed).restricted()).unwrap();
            assert_eq!(validate_restricted(&g), Ok(()), "seed {seed}");
            let g = gen_random(GenParams::new(5, 6, seed).restricted().log_depth()).unwrap();
            assert_eq!(validate_logdepth(&g), Ok(()));
            assert_eq!(validate_restricted(&g), Ok(()));
            let _ = apath(&g, g.start().unwrap());
        }
    }

    #[test]
    fn infeasible_parameters() {
        assert!(gen_random(GenParams::new(0, 3, 1)).is_err());
        assert!(gen_random(GenParams::new(3, 1, 1).restricted()).is_err());
        assert!(gen_random(GenParams::new(2, 1, 1).restricted()).is_ok());
    }
}
