//! Oracle comparison suites: reductions against `apath`/reachability and
//! fragment engines against the fixpoint checker.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::altgraph::{apath, gen_random, random_gap, reachable, AltSliceGraph, GapInstance, GenParams};
use crate::fastcheck::{check_ef_frag, check_eg_frag, check_er, route, Engine};
use crate::reductions::{reduce_digraph, reduce_slice_graph, Construction, ReductionOutput};
use crate::sampling::{random_formula, random_model, Fragment};
use crate::semantics;
use crate::syntax::{BooleanOp, TemporalOp};

/// Input of a construction.
#[derive(Debug, Clone)]
pub enum ReductionInput {
    Slices(AltSliceGraph),
    Gap(GapInstance),
}

impl ReductionInput {
    /// `apath` of the start node, or reachability of the target.
    pub fn oracle(&self) -> bool {
        match self {
            ReductionInput::Slices(g) => apath(g, g.start().expect("generated graphs have a start")),
            ReductionInput::Gap(inst) => reachable(&inst.graph, inst.source, inst.target),
        }
    }

    pub fn reduce(&self, c: Construction) -> Result<ReductionOutput, String> {
        match self {
            ReductionInput::Slices(g) => reduce_slice_graph(c, g)
                .ok_or_else(|| format!("{c} takes a digraph"))?
                .map_err(|e| e.to_string()),
            ReductionInput::Gap(inst) => {
                reduce_digraph(c, inst).ok_or_else(|| format!("{c} takes a slice graph"))
            }
        }
    }
}

/// The generator parameters each construction is tested with: 1, 3 or 5
/// slices; restricted degrees for the `G♭`-based constructions; log depth
/// for `er-only` and `ef-xor`.
pub fn gen_params(c: Construction, seed: u64) -> GenParams {
    let slices = 1 + 2 * (seed as usize % 3);
    match c {
        Construction::Eu | Construction::ErOr | Construction::EgXor => {
            GenParams::new(slices, 6, seed).restricted()
        }
        Construction::ErOnly => GenParams::new(slices, 6, seed).restricted().log_depth(),
        Construction::EfXor => GenParams::new(slices, 4, seed).log_depth(),
        _ => GenParams::new(slices, 4, seed),
    }
}

pub fn reduction_input(c: Construction, seed: u64) -> ReductionInput {
    if c.takes_digraph() {
        ReductionInput::Gap(random_gap(1 + seed as usize % 7, 0.25, seed))
    } else {
        ReductionInput::Slices(gen_random(gen_params(c, seed)).expect("parameters are feasible"))
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Mismatch {
    pub case: String,
    pub seed: u64,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub name: String,
    pub cases: usize,
    pub mismatches: Vec<Mismatch>,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct CompareReport {
    pub suites: Vec<SuiteReport>,
}

impl CompareReport {
    pub fn total_mismatches(&self) -> usize {
        self.suites.iter().map(|s| s.mismatches.len()).sum()
    }

    pub fn suite(&self, name: &str) -> Option<&SuiteReport> {
        self.suites.iter().find(|s| s.name == name)
    }
}

fn reduction_case(c: Construction, seed: u64) -> Option<Mismatch> {
    let input = reduction_input(c, seed);
    let expected = input.oracle();
    let detail = match input.reduce(c) {
        Err(e) => e,
        Ok(out) => {
            let inst = &out.instance;
            if let Err(v) = inst.model.validate() {
                format!("model is not valid: {v:?}")
            } else {
                let got = semantics::check(&inst.model, inst.start, &inst.formula);
                if got == expected {
                    return None;
                }
                format!("model checking says {got}, oracle says {expected}")
            }
        }
    };
    Some(Mismatch {
        case: c.name().to_string(),
        seed,
        detail,
    })
}

/// One suite per construction, seeds `0..seeds`.
pub fn reduction_suites(constructions: &[Construction], seeds: u64) -> Vec<SuiteReport> {
    constructions
        .par_iter()
        .map(|&c| {
            let mismatches: Vec<Mismatch> = (0..seeds)
                .into_par_iter()
                .filter_map(|seed| reduction_case(c, seed))
                .collect();
            SuiteReport {
                name: format!("reduction {c}"),
                cases: seeds as usize,
                mismatches,
            }
        })
        .collect()
}

/// The fragments each engine is exercised on; `Generic` stands for [`route`]
/// on a mixed fragment.
pub fn engine_fragments() -> Vec<(Engine, Fragment)> {
    use BooleanOp::*;
    use TemporalOp::*;
    vec![
        (Engine::Er, Fragment::new(&[ER], &[])),
        (Engine::EgFrag, Fragment::new(&[EG], &[])),
        (Engine::EgFrag, Fragment::new(&[EG], &[And])),
        (Engine::EgFrag, Fragment::new(&[EG], &[Or])),
        (Engine::EgFrag, Fragment::new(&[EG], &[Not])),
        (Engine::EgFrag, Fragment::new(&[EG, AF], &[Not])),
        (Engine::EfFrag, Fragment::new(&[EF], &[])),
        (Engine::EfFrag, Fragment::new(&[EF], &[Or])),
        (Engine::EfFrag, Fragment::new(&[EF], &[Not])),
        (Engine::EfFrag, Fragment::new(&[EF, AG], &[Not])),
        (Engine::EfFrag, Fragment::new(&[EF], &[And])),
        (Engine::Generic, Fragment::new(&[EX, EU, AF, AR, EG], &[Not, And, Or, Xor])),
    ]
}

/// Compares an engine with the fixpoint checker on one random model and
/// formula, at every state.
pub fn engine_case(engine: Engine, fragment: &Fragment, seed: u64) -> Option<Mismatch> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let model = random_model(&mut rng, 8);
    let depth = rng.gen_range(1..=4);
    let phi = random_formula(&mut rng, fragment, depth);
    let expected = semantics::states_satisfying(&model, &phi);
    for w in model.states() {
        let got = match engine {
            Engine::Er => check_er(&model, w, &phi),
            Engine::EgFrag => check_eg_frag(&model, w, &phi),
            Engine::EfFrag => check_ef_frag(&model, w, &phi),
            Engine::Generic => Ok(route(&model, w, &phi).0),
        };
        let detail = match got {
            Ok(v) if v == expected.contains(w) => continue,
            Ok(v) => format!("{phi} at {}: engine {v}, fixpoint {}", model.name(w), !v),
            Err(e) => format!("{phi}: {e}"),
        };
        return Some(Mismatch {
            case: format!("{engine} {}", fragment.label()),
            seed,
            detail,
        });
    }
    None
}

/// One suite per engine fragment, seeds `0..seeds`.
pub fn engine_suites(seeds: u64) -> Vec<SuiteReport> {
    engine_fragments()
        .par_iter()
        .enumerate()
        .map(|(k, (engine, fragment))| {
            let mismatches: Vec<Mismatch> = (0..seeds)
                .into_par_iter()
                .filter_map(|seed| engine_case(*engine, fragment, seed.wrapping_mul(31).wrapping_add(k as u64)))
                .collect();
            SuiteReport {
                name: format!("engine {engine} {}", fragment.label()),
                cases: seeds as usize,
                mismatches,
            }
        })
        .collect()
}

/// Both suite families over every construction.
pub fn compare(seeds: u64) -> CompareReport {
    let mut suites = reduction_suites(&Construction::ALL, seeds);
    suites.extend(engine_suites(seeds));
    CompareReport { suites }
}

