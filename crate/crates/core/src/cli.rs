//! The `ctlfrag` command line. [`run`] returns the process exit code:
//! 0 for a true verdict or success, 1 for a false verdict or reported
//! mismatches, 2 for usage and input errors.

use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use crate::altgraph::{
    apath, gen_random, parse_gap, parse_slice_graph, random_gap, reachable, write_gap,
    write_slice_graph, GenParams,
};
use crate::classify::classify;
use crate::compare::{compare, reduction_input, ReductionInput};
use crate::fastcheck::route;
use crate::kripke::{parse_model, write_model, KripkeModel, StateId};
use crate::reductions::Construction;
use crate::semantics;
use crate::syntax::{parse_formula, Formula};

#[derive(Debug, Parser)]
#[command(name = "ctlfrag", version, about = "Model checking for single-operator CTL fragments")]
struct Cli {
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide a formula with the fixpoint checker.
    Check(CheckArgs),
    /// Decide a formula with the most specialized fragment engine.
    Fastcheck(CheckArgs),
    /// Operators, Boolean clone, fingerprint and engine of a formula.
    Classify {
        #[arg(short, long)]
        formula: String,
    },
    /// Build a hard instance from a slice graph or digraph.
    Gen {
        #[arg(short, long)]
        construction: Construction,
        /// Input graph; a random one is generated from `--seed` when absent.
        #[arg(long = "in")]
        input: Option<PathBuf>,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Alternating accessibility (or plain reachability) of an input graph.
    Apath {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Run the reduction and engine oracle suites.
    Compare {
        #[arg(long, default_value_t = 50)]
        seeds: u64,
    },
    /// Time the engines on generated instance families.
    Bench {
        #[arg(long, value_delimiter = ',', default_value = "8,16,32")]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 5)]
        repeat: u32,
    },
}

#[derive(Debug, Args)]
struct CheckArgs {
    #[arg(short, long)]
    model: PathBuf,
    /// Defaults to the model file's `start:` state.
    #[arg(short, long)]
    state: Option<String>,
    #[arg(short, long)]
    formula: String,
}

struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Failure {
        Failure(e.to_string())
    }
}

type Outcome = Result<i32, Failure>;

pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let json = cli.json;
    let result = match cli.command {
        Command::Check(args) => cmd_check(&args, json, false),
        Command::Fastcheck(args) => cmd_check(&args, json, true),
        Command::Classify { formula } => cmd_classify(&formula, json),
        Command::Gen {
            construction,
            input,
            out,
            seed,
        } => cmd_gen(construction, input.as_deref(), &out, seed, json),
        Command::Apath { input } => cmd_apath(&input, json),
        Command::Compare { seeds } => cmd_compare(seeds, json),
        Command::Bench { sizes, seed, repeat } => cmd_bench(&sizes, seed, repeat.max(1), json),
    };
    match result {
        Ok(code) => code,
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            2
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn print_json(value: &impl Serialize) {
    println!("{}", serde_json::to_string_pretty(value).expect("serializable"));
}

fn verdict_code(v: bool) -> i32 {
    if v {
        0
    } else {
        1
    }
}

fn load_instance(args: &CheckArgs) -> Result<(KripkeModel, StateId, Formula), Failure> {
    let file = parse_model(&read(&args.model)?)?;
    let model = file.model;
    model
        .validate()
        .map_err(|v| Failure(format!("invalid model: {v:?}")))?;
    let state = match &args.state {
        Some(name) => model
            .state(name)
            .ok_or_else(|| Failure(format!("unknown state `{name}`")))?,
        None => file
            .start
            .ok_or_else(|| Failure("no --state given and the model has no start".into()))?,
    };
    let formula = parse_formula(&args.formula)?;
    Ok((model, state, formula))
}

fn cmd_check(args: &CheckArgs, json: bool, fast: bool) -> Outcome {
    let (model, state, formula) = load_instance(args)?;
    let (verdict, engine) = if fast {
        let (v, e) = route(&model, state, &formula);
        (v, Some(e))
    } else {
        (semantics::check(&model, state, &formula), None)
    };
    if json {
        print_json(&json!({
            "state": model.name(state),
            "formula": formula.to_string(),
            "verdict": verdict,
            "engine": engine.map(|e| e.name()),
        }));
    } else if let Some(e) = engine {
        println!("{verdict} engine={e}");
    } else {
        println!("{verdict}");
    }
    Ok(verdict_code(verdict))
}

fn cmd_classify(text: &str, json: bool) -> Outcome {
    let c = classify(&parse_formula(text)?);
    if json {
        print_json(&json!({
            "temporal_ops": c.temporal_ops,
            "boolean_ops": c.boolean_ops,
            "clone": c.clone.name(),
            "fingerprint": c.fingerprint.map(|f| f.to_string()),
            "engine": c.engine.name(),
        }));
    } else {
        println!("{c}");
    }
    Ok(0)
}

fn load_input(construction: Construction, path: &Path) -> Result<ReductionInput, Failure> {
    let text = read(path)?;
    Ok(if construction.takes_digraph() {
        ReductionInput::Gap(parse_gap(&text)?)
    } else {
        ReductionInput::Slices(parse_slice_graph(&text)?)
    })
}

fn cmd_gen(construction: Construction, input: Option<&Path>, out: &Path, seed: u64, json: bool) -> Outcome {
    let input = match input {
        Some(path) => load_input(construction, path)?,
        None => reduction_input(construction, seed),
    };
    let reduced = input.reduce(construction).map_err(Failure)?;
    fs::create_dir_all(out)?;
    let inst = &reduced.instance;
    let (graph_file, graph_text) = match &input {
        ReductionInput::Slices(g) => ("input.slices", write_slice_graph(g)),
        ReductionInput::Gap(g) => ("input.gap", write_gap(g)),
    };
    fs::write(out.join(graph_file), graph_text)?;
    fs::write(out.join("model.kripke"), write_model(&inst.model, Some(inst.start)))?;
    fs::write(out.join("formula.ctl"), format!("{}\n", inst.formula))?;
    let summary = json!({
        "construction": construction.name(),
        "states": inst.model.len(),
        "edges": inst.model.edge_count(),
        "formula_size": inst.formula.size(),
        "start": inst.model.name(inst.start),
        "expected": input.oracle(),
        "out": out.display().to_string(),
    });
    if json {
        print_json(&summary);
    } else {
        println!(
            "{construction}: {} states, {} edges, formula size {}, expected {} -> {}",
            inst.model.len(),
            inst.model.edge_count(),
            inst.formula.size(),
            input.oracle(),
            out.display()
        );
    }
    Ok(0)
}

fn cmd_apath(path: &Path, json: bool) -> Outcome {
    let text = read(path)?;
    let verdict = match parse_slice_graph(&text) {
        Ok(g) => {
            let s = g.start().ok_or_else(|| Failure("graph has no start node".into()))?;
            apath(&g, s)
        }
        Err(slice_err) => match parse_gap(&text) {
            Ok(inst) => reachable(&inst.graph, inst.source, inst.target),
            Err(_) => return Err(slice_err.into()),
        },
    };
    if json {
        print_json(&json!({ "verdict": verdict }));
    } else {
        println!("{verdict}");
    }
    Ok(verdict_code(verdict))
}

fn cmd_compare(seeds: u64, json: bool) -> Outcome {
    let report = compare(seeds);
    if json {
        print_json(&report);
    } else {
        for s in &report.suites {
            println!("{:<44} cases={:<6} mismatches={}", s.name, s.cases, s.mismatches.len());
            for m in s.mismatches.iter().take(3) {
                println!("    seed {}: {}", m.seed, m.detail);
            }
        }
        println!("total mismatches: {}", report.total_mismatches());
    }
    Ok(if report.total_mismatches() == 0 { 0 } else { 1 })
}

#[derive(Debug, Serialize)]
struct BenchRow {
    family: &'static str,
    size: usize,
    states: usize,
    formula_size: usize,
    engine: &'static str,
    micros: u128,
    verdict: bool,
}

fn time_best(repeat: u32, mut f: impl FnMut() -> bool) -> (u128, bool) {
    let mut best = u128::MAX;
    let mut verdict = false;
    for _ in 0..repeat {
        let t = Instant::now();
        verdict = f();
        best = best.min(t.elapsed().as_micros());
    }
    (best, verdict)
}

fn cmd_bench(sizes: &[usize], seed: u64, repeat: u32, json: bool) -> Outcome {
    let mut rows = Vec::new();
    for &size in sizes {
        let size = size.max(1);
        let families: [(&'static str, Construction, ReductionInput); 3] = [
            (
                "gap-eg",
                Construction::GapEg,
                ReductionInput::Gap(random_gap(size, 2.0 / size as f64, seed)),
            ),
            (
                "gap-ef",
                Construction::GapEf,
                ReductionInput::Gap(random_gap(size, 2.0 / size as f64, seed)),
            ),
            (
                "er-only",
                Construction::ErOnly,
                ReductionInput::Slices(gen_random(
                    GenParams::new(5, size.max(2), seed).restricted().log_depth(),
                )?),
            ),
        ];
        for (family, construction, input) in families {
            let out = input.reduce(construction).map_err(Failure)?;
            let inst = &out.instance;
            let (fast, fast_v) = time_best(repeat, || route(&inst.model, inst.start, &inst.formula).0);
            let engine = route(&inst.model, inst.start, &inst.formula).1;
            let (slow, slow_v) =
                time_best(repeat, || semantics::check(&inst.model, inst.start, &inst.formula));
            for (engine, micros, verdict) in [(engine.name(), fast, fast_v), ("fixpoint", slow, slow_v)] {
                rows.push(BenchRow {
                    family,
                    size,
                    states: inst.model.len(),
                    formula_size: inst.formula.size(),
                    engine,
                    micros,
                    verdict,
                });
            }
        }
    }
    if json {
        print_json(&rows);
    } else {
        println!("{:<8} {:>5} {:>7} {:>6} {:<9} {:>10} verdict", "family", "size", "states", "|phi|", "engine", "micros");
        for r in &rows {
            println!(
                "{:<8} {:>5} {:>7} {:>6} {:<9} {:>10} {}",
                r.family, r.size, r.states, r.formula_size, r.engine, r.micros, r.verdict
            );
        }
    }
    Ok(0)
}
