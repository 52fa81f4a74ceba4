//! Reductions from alternating slice graph accessibility (and plain graph
//! accessibility) to single-operator model checking.
//!
//! Each `reduce_*` function builds a Kripke model, a start state and a
//! formula such that the formula holds at the start state iff the start node
//! of the input graph is alternating-accessible (resp. reaches the target).
//! State names are the node ids of the input; copies get the suffix `^`.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::altgraph::{
    flat, sharp, validate_asagap, validate_logdepth, validate_restricted, AltSliceGraph,
    GapInstance, NodeId, NodeKind, Quantifier, SliceViolation, TotalGraph,
};
use crate::kripke::{CheckInstance, KripkeModel, StateId};
use crate::syntax::{BooleanOp, Formula, TemporalOp};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Construction {
    Eu,
    ErOr,
    ErNeg,
    ErNegGuarded,
    ErOnly,
    EgXor,
    EfXor,
    GapEg,
    GapEf,
}

impl Construction {
    pub const ALL: [Construction; 9] = [
        Construction::Eu,
        Construction::ErOr,
        Construction::ErNeg,
        Construction::ErNegGuarded,
        Construction::ErOnly,
        Construction::EgXor,
        Construction::EfXor,
        Construction::GapEg,
        Construction::GapEf,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Construction::Eu => "eu",
            Construction::ErOr => "er-or",
            Construction::ErNeg => "er-neg",
            Construction::ErNegGuarded => "er-neg-guarded",
            Construction::ErOnly => "er-only",
            Construction::EgXor => "eg-xor",
            Construction::EfXor => "ef-xor",
            Construction::GapEg => "gap-eg",
            Construction::GapEf => "gap-ef",
        }
    }

    /// Whether the input is a plain digraph rather than a slice graph.
    pub fn takes_digraph(self) -> bool {
        matches!(self, Construction::GapEg | Construction::GapEf)
    }

    /// The temporal operator and Boolean operators of the produced formula.
    pub fn fragment(self) -> (TemporalOp, &'static [BooleanOp]) {
        match self {
            Construction::Eu => (TemporalOp::EU, &[]),
            Construction::ErOr => (TemporalOp::ER, &[BooleanOp::Or]),
            Construction::ErNeg | Construction::ErNegGuarded => {
                (TemporalOp::ER, &[BooleanOp::Not])
            }
            Construction::ErOnly => (TemporalOp::ER, &[]),
            Construction::EgXor => (TemporalOp::EG, &[BooleanOp::Xor]),
            Construction::EfXor => (TemporalOp::EF, &[BooleanOp::Xor]),
            Construction::GapEg => (TemporalOp::EG, &[]),
            Construction::GapEf => (TemporalOp::EF, &[]),
        }
    }
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Construction {
    type Err = String;

    fn from_str(s: &str) -> Result<Construction, String> {
        Construction::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| format!("unknown construction `{s}`"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error("invalid input graph: {}", join(.0))]
    InvalidInput(Vec<SliceViolation>),
}

fn join(v: &[SliceViolation]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")
}

impl From<Vec<SliceViolation>> for ReductionError {
    fn from(v: Vec<SliceViolation>) -> ReductionError {
        ReductionError::InvalidInput(v)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionMeta {
    pub construction: Construction,
    /// `φ_0, φ_1, …` indexed by slice (by reversed layer for `ef-xor`).
    pub formulas: Vec<Formula>,
    /// States of each slice or layer, in the same indexing as `formulas`.
    pub layers: Vec<Vec<StateId>>,
    /// Atoms occurring on the states of each layer, sorted.
    pub slice_atoms: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionOutput {
    pub instance: CheckInstance,
    pub meta: ReductionMeta,
}

fn indexed(base: &str, i: usize) -> String {
    format!("{base}_{i}")
}

fn atom(base: &str, i: usize) -> Formula {
    Formula::atom(indexed(base, i))
}

fn finish(
    construction: Construction,
    model: KripkeModel,
    start: StateId,
    formulas: Vec<Formula>,
    layers: Vec<Vec<StateId>>,
    top: usize,
) -> ReductionOutput {
    let slice_atoms = layers
        .iter()
        .map(|layer| {
            layer
                .iter()
                .flat_map(|&w| model.labels(w).iter().cloned())
                .collect::<BTreeSet<_>>()
                .into_iter()
                .collect()
        })
        .collect();
    ReductionOutput {
        instance: CheckInstance {
            model,
            start,
            formula: formulas[top].clone(),
        },
        meta: ReductionMeta {
            construction,
            formulas,
            layers,
            slice_atoms,
        },
    }
}

fn total_layers(tg: &TotalGraph) -> Vec<Vec<StateId>> {
    let mut layers = vec![Vec::new(); tg.slice_count()];
    for (i, n) in tg.nodes().iter().enumerate() {
        layers[n.slice].push(StateId(i));
    }
    layers
}

fn start_of(g: &AltSliceGraph) -> StateId {
    StateId(g.start().expect("validated graphs have a start node").0)
}

fn sid(v: NodeId) -> StateId {
    StateId(v.0)
}

/// The `{EU}` construction on `G♭`: `t` on targets, `s_i` on `V_i`, `sh_i` on
/// copies in slice `i` without a loop and `eh_i` on looped copies;
/// `φ_m = t`, `φ_i = E[s_i U E[E[sh_{i+1} U φ_{i+1}] U eh_{i+1}]]`.
pub fn reduce_eu(g: &AltSliceGraph) -> Result<ReductionOutput, ReductionError> {
    let fg = flat(g)?;
    let mut model = fg.to_kripke();
    for v in g.nodes() {
        model.add_label(sid(v), indexed("s", g.slice_of(v)));
        if g.is_target(v) {
            model.add_label(sid(v), "t");
        }
    }
    for (i, n) in fg.nodes().iter().enumerate() {
        if let NodeKind::Copy(_) = n.kind {
            let base = if fg.has_self_loop(i) { "eh" } else { "sh" };
            model.add_label(StateId(i), indexed(base, n.slice));
        }
    }
    let m = g.depth();
    let mut phi = vec![Formula::atom("t"); m + 1];
    for i in (0..m).rev() {
        phi[i] = Formula::eu(
            atom("s", i),
            Formula::eu(Formula::eu(atom("sh", i + 1), phi[i + 1].clone()), atom("eh", i + 1)),
        );
    }
    Ok(finish(Construction::Eu, model, start_of(g), phi, total_layers(&fg), 0))
}

/// The `{ER,∨}` construction on `G♭`.
pub fn reduce_er_or(g: &AltSliceGraph) -> Result<ReductionOutput, ReductionError> {
    let fg = flat(g)?;
    let mut model = fg.to_kripke();
    for v in g.nodes() {
        let i = g.slice_of(v);
        model.add_label(sid(v), indexed("s", i));
        if i > 0 {
            model.add_label(sid(v), indexed("s", i - 1));
        }
        if g.is_target(v) {
            model.add_label(sid(v), "t");
        }
        if let Some((v1, v2)) = fg.successor_order(v) {
            model.add_label(sid(v2), indexed("t", i));
            let c1 = fg.copy_of(v1).expect("flat graphs copy every node");
            model.add_label(StateId(c1), indexed("sh", i));
        }
    }
    let m = g.depth();
    let mut phi = vec![Formula::atom("t"); m + 1];
    for i in (0..m).rev() {
        let inner = Formula::er(phi[i + 1].clone(), atom("s", i));
        phi[i] = if i % 2 == 0 {
            inner
        } else {
            Formula::er(atom("t", i), inner.or(atom("sh", i)))
        };
    }
    Ok(finish(Construction::ErOr, model, start_of(g), phi, total_layers(&fg), 0))
}

/// The `{ER,¬}` construction on `G♯`: `t` on targets, `s_i` and `s_{i-1}`
/// on `V_i`, nothing on the sink; `φ_i = φ_{i+1} R s_i` on existential
/// slices and `¬(¬φ_{i+1} R s_i)` on universal ones (`R` meaning `E[· R ·]`).
///
/// A universal-slice formula holds at every state without `s_i` and fails
/// at every node of `V_i` (the release already happens at the first state),
/// so for depth `m ≥ 2` the start node always satisfies `φ_0`. See
/// [`reduce_er_neg_guarded`] for a variant that agrees with `apath`.
pub fn reduce_er_neg(g: &AltSliceGraph) -> Result<ReductionOutput, ReductionError> {
    let (model, sg) = er_neg_model(g, false)?;
    let m = g.depth();
    let mut phi = vec![Formula::atom("t"); m + 1];
    for i in (0..m).rev() {
        phi[i] = if i % 2 == 0 {
            Formula::er(phi[i + 1].clone(), atom("s", i))
        } else {
            Formula::er(phi[i + 1].clone().not(), atom("s", i)).not()
        };
    }
    Ok(finish(Construction::ErNeg, model, start_of(g), phi, total_layers(&sg), 0))
}

/// `{ER,¬}` on `G♯` with the labels of [`reduce_er_neg`] plus `g_i` on `V_i`
/// only. Since no edge stays inside a slice, `X R g_i` is `X ∧ g_i`, which
/// keeps every `φ_i` false outside `V_i`:
/// `φ_i = φ_{i+1} R s_i` on existential slices and
/// `φ_i = ¬((¬φ_{i+1} R g_{i+1}) R s_i) R g_i` on universal ones.
pub fn reduce_er_neg_guarded(g: &AltSliceGraph) -> Result<ReductionOutput, ReductionError> {
    let (model, sg) = er_neg_model(g, true)?;
    let m = g.depth();
    let mut phi = vec![Formula::atom("t"); m + 1];
    for i in (0..m).rev() {
        phi[i] = if i % 2 == 0 {
            Formula::er(phi[i + 1].clone(), atom("s", i))
        } else {
            let refuted = Formula::er(phi[i + 1].clone().not(), atom("g", i + 1));
            Formula::er(Formula::er(refuted, atom("s", i)).not(), atom("g", i))
        };
    }
    Ok(finish(Construction::ErNegGuarded, model, start_of(g), phi, total_layers(&sg), 0))
}

fn er_neg_model(
    g: &AltSliceGraph,
    guards: bool,
) -> Result<(KripkeModel, TotalGraph), ReductionError> {
    validate_asagap(g)?;
    let sg = sharp(g);
    let mut model = sg.to_kripke();
    for v in g.nodes() {
        let i = g.slice_of(v);
        model.add_label(sid(v), indexed("s", i));
        if i > 0 {
            model.add_label(sid(v), indexed("s", i - 1));
        }
        if guards {
            model.add_label(sid(v), indexed("g", i));
        }
        if g.is_target(v) {
            model.add_label(sid(v), "t");
        }
    }
    Ok((model, sg))
}

/// The pure `{ER}` construction on `G♯` for restricted graphs of logarithmic
/// depth. A universal node `u ∈ V_i` carries `s_{i-1}`, `sl_i`, `sr_i`; its
/// first and second successors carry `sl_i` and `sr_i`.
pub fn reduce_er_only(g: &AltSliceGraph) -> Result<ReductionOutput, ReductionError> {
    let mut violations = validate_restricted(g).err().unwrap_or_default();
    for v in validate_logdepth(g).err().unwrap_or_default() {
        if !violations.contains(&v) {
            violations.push(v);
        }
    }
    if !violations.is_empty() {
        return Err(violations.into());
    }
    let sg = sharp(g);
    let mut model = sg.to_kripke();
    let m = g.depth();
    for v in g.nodes() {
        let i = g.slice_of(v);
        match g.quantifier(v) {
            Quantifier::Exists => model.add_label(sid(v), indexed("s", i)),
            Quantifier::Forall => {
                model.add_label(sid(v), indexed("s", i - 1));
                model.add_label(sid(v), indexed("sl", i));
                model.add_label(sid(v), indexed("sr", i));
                if i < m {
                    let ordered = g.ordered_successors(v);
                    model.add_label(sid(ordered[0]), indexed("sl", i));
                    model.add_label(sid(ordered[1]), indexed("sr", i));
                }
            }
        }
        if g.is_target(v) {
            model.add_label(sid(v), "t");
        }
    }
    let mut phi = vec![Formula::atom("t"); m + 1];
    for i in (0..m).rev() {
        phi[i] = if i % 2 == 0 {
            Formula::er(phi[i + 1].clone(), atom("s", i))
        } else {
            Formula::er(
                Formula::er(phi[i + 1].clone(), atom("sr", i)),
                Formula::er(phi[i + 1].clone(), atom("sl", i)),
            )
        };
    }
    Ok(finish(Construction::ErOnly, model, start_of(g), phi, total_layers(&sg), 0))
}

/// The `{EG,⊕}` construction on `G♭`: `s_i` on every state of slice `i`,
/// `sh_i` on the copies of slice `i`, `t` on targets;
/// `φ_i = EG(s_i ⊕ s_{i+2} ⊕ sh_i ⊕ sh_{i+1} ⊕ φ_{i+1})`.
pub fn reduce_eg_xor(g: &AltSliceGraph) -> Result<ReductionOutput, ReductionError> {
    let fg = flat(g)?;
    let mut model = fg.to_kripke();
    for (i, n) in fg.nodes().iter().enumerate() {
        model.add_label(StateId(i), indexed("s", n.slice));
        match n.kind {
            NodeKind::Copy(_) => model.add_label(StateId(i), indexed("sh", n.slice)),
            NodeKind::Original(v) if g.is_target(v) => model.add_label(StateId(i), "t"),
            _ => {}
        }
    }
    let m = g.depth();
    let mut phi = vec![Formula::atom("t"); m + 1];
    for i in (0..m).rev() {
        let body = Formula::xor_all([
            atom("s", i),
            atom("s", i + 2),
            atom("sh", i),
            atom("sh", i + 1),
            phi[i + 1].clone(),
        ])
        .expect("five operands");
        phi[i] = Formula::eg(body);
    }
    Ok(finish(Construction::EgXor, model, start_of(g), phi, total_layers(&fg), 0))
}

fn count(lo: i64, hi: i64, parity: i64) -> usize {
    (lo.max(0)..=hi).filter(|m| m % 2 == parity).count()
}

/// The layer indices `j` with `z_j ∈ α(i)` for the `{EF,⊕}` construction.
pub fn ef_alpha(i: usize) -> Vec<usize> {
    if i == 0 {
        return Vec::new();
    }
    let ii = i as i64;
    let top = count(0, ii - 2, 1) % 2 == 1;
    (0..=i)
        .filter(|&j| {
            if j + 1 >= i {
                top
            } else {
                let jj = j as i64;
                let c = count(0, jj - 1, 1) + count(jj + 2, ii - 1, 0);
                (c % 2 == 1) == (i % 2 == 1)
            }
        })
        .collect()
}

/// `φ_0 … φ_l` of the `{EF,⊕}` construction. With `encode_ag` the universal
/// layers use `s ⊕ EF(s ⊕ ·)` instead of `AG`.
pub fn ef_xor_formulas(l: usize, encode_ag: bool) -> Vec<Formula> {
    let mut phi = vec![Formula::atom("t")];
    for i in 1..=l {
        let operands = ef_alpha(i)
            .into_iter()
            .map(|j| atom("z", j))
            .chain(phi.iter().cloned());
        let body = Formula::xor_all(operands).expect("φ_0 is always an operand");
        phi.push(if i % 2 == 1 {
            Formula::ef(body)
        } else if encode_ag {
            let s = Formula::atom("s");
            s.clone().xor(Formula::ef(s.xor(body)))
        } else {
            Formula::ag(body)
        });
    }
    phi
}

fn fresh(taken: &mut HashSet<String>, base: String) -> String {
    let mut name = base;
    while taken.contains(&name) {
        name.push('\'');
    }
    taken.insert(name.clone());
    name
}

/// Appends a universal slice of pass-through copies below the last slice so
/// that the deepest slice is universal; the copies of targets become the
/// targets. `apath` is unchanged on the original nodes.
fn pad_universal(g: &AltSliceGraph) -> AltSliceGraph {
    let mut taken: HashSet<String> = g.nodes().map(|v| g.name(v).to_string()).collect();
    let mut out = AltSliceGraph::new();
    for v in g.nodes() {
        out.add_node(g.name(v), g.slice_of(v));
    }
    for v in g.nodes() {
        for &z in g.successors(v) {
            out.add_edge(v, z);
        }
    }
    if let Some(s) = g.start() {
        out.set_start(s);
    }
    let m = g.depth();
    for &v in g.slice(m) {
        let c = out.add_node(fresh(&mut taken, format!("{}'", g.name(v))), m + 1);
        out.add_edge(v, c);
        if g.is_target(v) {
            out.add_target(c);
        }
    }
    out
}

/// The `{EF,⊕}` construction. Layers are indexed in reverse (`W_0` is the
/// deepest slice), each layer gains the chain states `a_i` and `b_i`, and
/// the formula is `φ_l` with `AG` encoded through the everywhere-true atom
/// `s`. When the deepest slice is existential a universal pass-through slice
/// is appended first, so `l` is the depth of the padded graph.
pub fn reduce_ef_xor(g: &AltSliceGraph) -> Result<ReductionOutput, ReductionError> {
    let mut violations = validate_asagap(g).err().unwrap_or_default();
    for v in validate_logdepth(g).err().unwrap_or_default() {
        if !violations.contains(&v) {
            violations.push(v);
        }
    }
    if !violations.is_empty() {
        return Err(violations.into());
    }
    let padded;
    let g = if g.depth().is_multiple_of(2) {
        padded = pad_universal(g);
        &padded
    } else {
        g
    };
    let l = g.depth();
    let layer_of = |v: NodeId| l - g.slice_of(v);

    let mut model = KripkeModel::new();
    let mut taken: HashSet<String> = g.nodes().map(|v| g.name(v).to_string()).collect();
    for v in g.nodes() {
        model.add_state(g.name(v));
    }
    let a: Vec<StateId> = (0..=l)
        .map(|i| model.add_state(fresh(&mut taken, indexed("a", i))))
        .collect();
    let b: Vec<StateId> = (0..=l)
        .map(|i| model.add_state(fresh(&mut taken, indexed("b", i))))
        .collect();

    let mut layers: Vec<Vec<StateId>> = vec![Vec::new(); l + 1];
    for v in g.nodes() {
        layers[layer_of(v)].push(sid(v));
    }
    for i in 0..=l {
        layers[i].push(a[i]);
        layers[i].push(b[i]);
    }

    for v in g.nodes() {
        for &z in g.successors(v) {
            model.add_edge(sid(v), sid(z));
        }
    }
    for &w in &layers[0] {
        model.add_edge(w, w);
    }
    for i in 1..=l {
        model.add_edge(a[i], a[i - 1]);
        model.add_edge(b[i], b[i - 1]);
        for &w in &layers[i] {
            if i % 2 == 1 {
                model.add_edge(w, a[i - 1]);
            } else {
                model.add_edge(w, b[i - 1]);
            }
        }
    }

    for (i, layer) in layers.iter().enumerate() {
        for &w in layer {
            model.add_label(w, indexed("z", i));
            model.add_label(w, "s");
        }
    }
    for &t in g.targets() {
        model.add_label(sid(t), "t");
    }
    model.add_label(b[0], "t");

    let phi = ef_xor_formulas(l, true);
    Ok(finish(Construction::EfXor, model, start_of(g), phi, layers, l))
}

/// Graph accessibility to `{EG}`: `|V|` layered copies `u@i` of the graph
/// whose edges advance one layer along the reflexive closure of `E`, loops
/// on the last layer, and `a` on every copy except last-layer copies of
/// nodes other than the target. The formula is `EG a` at `s@1`.
pub fn reduce_gap_eg(inst: &GapInstance) -> ReductionOutput {
    let g = &inst.graph;
    let n = g.len();
    let mut model = KripkeModel::new();
    let id = |u: NodeId, i: usize| StateId((i - 1) * n + u.0);
    let mut layers = Vec::with_capacity(n);
    for i in 1..=n {
        let mut layer = Vec::with_capacity(n);
        for u in g.nodes() {
            layer.push(model.add_state(format!("{}@{i}", g.name(u))));
        }
        layers.push(layer);
    }
    for i in 1..=n {
        for u in g.nodes() {
            if i < n {
                model.add_edge(id(u, i), id(u, i + 1));
                for &v in g.successors(u) {
                    model.add_edge(id(u, i), id(v, i + 1));
                }
                model.add_label(id(u, i), "a");
            } else {
                model.add_edge(id(u, i), id(u, i));
                if u == inst.target {
                    model.add_label(id(u, i), "a");
                }
            }
        }
    }
    let phi = vec![Formula::eg(Formula::atom("a"))];
    finish(Construction::GapEg, model, id(inst.source, 1), phi, layers, 0)
}

/// Graph accessibility to `{EF}`: the reflexive closure of the graph with
/// `p` on the target only; the formula is `EF p`.
pub fn reduce_gap_ef(inst: &GapInstance) -> ReductionOutput {
    let g = &inst.graph;
    let mut model = KripkeModel::new();
    for u in g.nodes() {
        model.add_state(g.name(u));
    }
    for u in g.nodes() {
        model.add_edge(sid(u), sid(u));
        for &v in g.successors(u) {
            model.add_edge(sid(u), sid(v));
        }
    }
    model.add_label(sid(inst.target), "p");
    let phi = vec![Formula::ef(Formula::atom("p"))];
    let layers = vec![model.states().collect()];
    finish(Construction::GapEf, model, sid(inst.source), phi, layers, 0)
}

/// Runs a slice-graph construction.
pub fn reduce_slice_graph(
    construction: Construction,
    g: &AltSliceGraph,
) -> Option<Result<ReductionOutput, ReductionError>> {
    Some(match construction {
        Construction::Eu => reduce_eu(g),
        Construction::ErOr => reduce_er_or(g),
        Construction::ErNeg => reduce_er_neg(g),
        Construction::ErNegGuarded => reduce_er_neg_guarded(g),
        Construction::ErOnly => reduce_er_only(g),
        Construction::EgXor => reduce_eg_xor(g),
        Construction::EfXor => reduce_ef_xor(g),
        Construction::GapEg | Construction::GapEf => return None,
    })
}

/// Runs a graph-accessibility construction.
pub fn reduce_digraph(construction: Construction, inst: &GapInstance) -> Option<ReductionOutput> {
    match construction {
        Construction::GapEg => Some(reduce_gap_eg(inst)),
        Construction::GapEf => Some(reduce_gap_ef(inst)),
        _ => None,
    }
}
