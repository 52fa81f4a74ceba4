//! Line-oriented model files.
//!
//! ```text
//! # comment
//! states:
//! w0
//! w1
//! edges:
//! w0 -> w1
//! w1 -> w1
//! labels:
//! w1 : p q
//! start: w0
//! ```
//!
//! `start:` may also be a section header followed by the id on its own line.
//! The writer emits states in index order, edges grouped by source, one
//! `labels:` line per labelled state with atoms sorted, and `start:` last.

use std::fmt::Write as _;

use super::{KripkeError, KripkeModel, StateId};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KripkeFile {
    pub model: KripkeModel,
    pub start: Option<StateId>,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Section {
    None,
    States,
    Edges,
    Labels,
    Start,
}

fn valid_id(token: &str) -> bool {
    !token.is_empty() && token != "->" && !token.contains([':', '#']) && !token.contains(char::is_whitespace)
}

pub fn parse_model(text: &str) -> Result<KripkeFile, KripkeError> {
    let mut model = KripkeModel::new();
    let mut start_name: Option<(usize, String)> = None;
    let mut section = Section::None;
    let err = |line: usize, message: String| KripkeError::Parse { line, message };

    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let header = match line {
            "states:" => Some(Section::States),
            "edges:" => Some(Section::Edges),
            "labels:" => Some(Section::Labels),
            "start:" => Some(Section::Start),
            _ => None,
        };
        if let Some(h) = header {
            section = h;
            continue;
        }
        if let Some(rest) = line.strip_prefix("start:") {
            let id = rest.trim();
            if !valid_id(id) {
                return Err(err(lineno, format!("invalid start state `{id}`")));
            }
            start_name = Some((lineno, id.to_string()));
            section = Section::None;
            continue;
        }
        match section {
            Section::None => {
                return Err(err(lineno, format!("content outside of a section: `{line}`")));
            }
            Section::States => {
                if !valid_id(line) {
                    return Err(err(lineno, format!("invalid state id `{line}`")));
                }
                if model.state(line).is_some() {
                    return Err(err(lineno, format!("state `{line}` declared twice")));
                }
                model.add_state(line);
            }
            Section::Edges => {
                let (src, dst) = line
                    .split_once("->")
                    .ok_or_else(|| err(lineno, format!("expected `src -> dst`, found `{line}`")))?;
                let (src, dst) = (src.trim(), dst.trim());
                model
                    .add_edge_by_name(src, dst)
                    .map_err(|e| err(lineno, e.to_string()))?;
            }
            Section::Labels => {
                let (state, atoms) = line
                    .split_once(':')
                    .ok_or_else(|| err(lineno, format!("expected `state : atoms`, found `{line}`")))?;
                let state = state.trim();
                let id = model
                    .state(state)
                    .ok_or_else(|| err(lineno, format!("unknown state `{state}`")))?;
                for atom in atoms.split_whitespace() {
                    model.add_label(id, atom);
                }
            }
            Section::Start => {
                if !valid_id(line) {
                    return Err(err(lineno, format!("invalid start state `{line}`")));
                }
                start_name = Some((lineno, line.to_string()));
                section = Section::None;
            }
        }
    }

    let start = match start_name {
        Some((lineno, name)) => Some(
            model
                .state(&name)
                .ok_or_else(|| err(lineno, format!("unknown start state `{name}`")))?,
        ),
        None => None,
    };
    Ok(KripkeFile { model, start })
}

pub fn write_model(model: &KripkeModel, start: Option<StateId>) -> String {
    let mut out = String::from("states:\n");
    for s in model.states() {
        let _ = writeln!(out, "{}", model.name(s));
    }
    out.push_str("edges:\n");
    for s in model.states() {
        for &t in model.successors(s) {
            let _ = writeln!(out, "{} -> {}", model.name(s), model.name(t));
        }
    }
    out.push_str("labels:\n");
    for s in model.states() {
        let labels = model.labels(s);
        if !labels.is_empty() {
            let atoms: Vec<&str> = labels.iter().map(String::as_str).collect();
            let _ = writeln!(out, "{} : {}", model.name(s), atoms.join(" "));
        }
    }
    if let Some(start) = start {
        let _ = writeln!(out, "start: {}", model.name(start));
    }
    out
}
