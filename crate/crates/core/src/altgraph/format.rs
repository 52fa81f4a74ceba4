//! Slice graph files.
//!
//! ```text
//! slice 0: s
//! slice 1: u
//! slice 2: a b
//! edges:
//! s -> u
//! u -> a
//! u -> b
//! start: s
//! targets: a
//! ```

use std::collections::BTreeMap;
use std::fmt::Write as _;

use thiserror::Error;

use super::AltSliceGraph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct FormatError {
    pub line: usize,
    pub message: String,
}

pub(super) fn err(line: usize, message: impl Into<String>) -> FormatError {
    FormatError {
        line,
        message: message.into(),
    }
}

pub(super) fn strip(raw: &str) -> &str {
    raw.split('#').next().unwrap_or("").trim()
}

pub fn parse_slice_graph(text: &str) -> Result<AltSliceGraph, FormatError> {
    let mut slices: BTreeMap<usize, (usize, Vec<String>)> = BTreeMap::new();
    let mut edges = Vec::new();
    let mut start = None;
    let mut targets = Vec::new();
    let mut in_edges = false;

    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = strip(raw);
        if line.is_empty() {
            continue;
        }
        if line == "edges:" {
            in_edges = true;
            continue;
        }
        if let Some(rest) = line.strip_prefix("slice ") {
            in_edges = false;
            let (idx, ids) = rest
                .split_once(':')
                .ok_or_else(|| err(lineno, "expected `slice i: ids`"))?;
            let idx: usize = idx
                .trim()
                .parse()
                .map_err(|_| err(lineno, format!("bad slice index `{}`", idx.trim())))?;
            if slices.contains_key(&idx) {
                return Err(err(lineno, format!("slice {idx} declared twice")));
            }
            let ids = ids.split_whitespace().map(str::to_string).collect();
            slices.insert(idx, (lineno, ids));
        } else if let Some(rest) = line.strip_prefix("start:") {
            in_edges = false;
            start = Some((lineno, rest.trim().to_string()));
        } else if let Some(rest) = line.strip_prefix("targets:") {
            in_edges = false;
            targets.extend(rest.split_whitespace().map(|t| (lineno, t.to_string())));
        } else if in_edges {
            let (a, b) = line
                .split_once("->")
                .ok_or_else(|| err(lineno, format!("expected `src -> dst`, found `{line}`")))?;
            edges.push((lineno, a.trim().to_string(), b.trim().to_string()));
        } else {
            return Err(err(lineno, format!("unexpected line `{line}`")));
        }
    }

    let mut g = AltSliceGraph::new();
    for (expected, (&idx, (lineno, ids))) in slices.iter().enumerate() {
        if idx != expected {
            return Err(err(*lineno, format!("slice {expected} is missing")));
        }
        for id in ids {
            if g.node(id).is_some() {
                return Err(err(*lineno, format!("node `{id}` declared twice")));
            }
            g.add_node(id.clone(), idx);
        }
    }
    let lookup = |g: &AltSliceGraph, line: usize, name: &str| {
        g.node(name)
            .ok_or_else(|| err(line, format!("unknown node `{name}`")))
    };
    for (lineno, a, b) in edges {
        let a = lookup(&g, lineno, &a)?;
        let b = lookup(&g, lineno, &b)?;
        g.add_edge(a, b);
    }
    if let Some((lineno, name)) = start {
        let s = lookup(&g, lineno, &name)?;
        g.set_start(s);
    }
    for (lineno, name) in targets {
        let t = lookup(&g, lineno, &name)?;
        g.add_target(t);
    }
    Ok(g)
}

pub fn write_slice_graph(g: &AltSliceGraph) -> String {
    let mut out = String::new();
    for i in 0..g.slice_count() {
        let ids: Vec<&str> = g.slice(i).iter().map(|&v| g.name(v)).collect();
        let _ = writeln!(out, "slice {i}: {}", ids.join(" "));
    }
    out.push_str("edges:\n");
    for v in g.nodes() {
        for &z in g.successors(v) {
            let _ = writeln!(out, "{} -> {}", g.name(v), g.name(z));
        }
    }
    if let Some(s) = g.start() {
        let _ = writeln!(out, "start: {}", g.name(s));
    }
    let targets: Vec<&str> = g.targets().iter().map(|&t| g.name(t)).collect();
    let _ = writeln!(out, "targets: {}", targets.join(" "));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::altgraph::{gen_random, GenParams};

    const SAMPLE: &str = "slice 0: s\nslice 1: u\nslice 2: a b\nedges:\ns -> u\nu -> a\nu -> b\nstart: s\ntargets: a\n";

    #[test]
    fn round_trip() {
        let g = parse_slice_graph(SAMPLE).unwrap();
        assert_eq!(g.len(), 4);
        assert_eq!(write_slice_graph(&g), SAMPLE);
        for seed in 0..20 {
            let g = gen_random(GenParams::new(4, 4, seed)).unwrap();
            assert_eq!(parse_slice_graph(&write_slice_graph(&g)).unwrap(), g);
        }
    }

    #[test]
    fn errors() {
        assert_eq!(parse_slice_graph("slice 1: a\n").unwrap_err().line, 1);
        assert_eq!(
            parse_slice_graph("slice 0: a\nedges:\na -> b\n").unwrap_err().line,
            3
        );
        assert_eq!(parse_slice_graph("hello\n").unwrap_err().line, 1);
    }
}
