//! Line-oriented text formats and DOT export.
//!
//! Three document kinds share one lexical convention: `#` starts a comment
//! running to the end of the line, tokens are separated by whitespace, and
//! labels are plain (no whitespace, `(`, `)`, `,` or `#`).
//!
//! Quiver documents:
//!
//! ```text
//! quiver G          # optional name, first line if present
//! vertex 0
//! vertex 1
//! edge e 0 0        # edge <label> <source> <target>
//! edge f 0 1
//! ```
//!
//! Morphism documents reference their endpoint quivers by file path:
//!
//! ```text
//! dom g.qv
//! cod h.qv
//! vmap 0 -> 2       # one line per domain vertex
//! emap e -> h       # one line per domain edge
//! ```
//!
//! Map documents describe a set function:
//!
//! ```text
//! dom a b
//! cod x y
//! map a -> x
//! map b -> y
//! ```
//!
//! Serialization emits labels in sorted order, so parse and serialize are
//! mutually inverse on canonical documents.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use thiserror::Error;

use crate::quiver::{Quiver, QuiverError};
use crate::set::{FiniteSet, Label, SetError, SetFunction};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("constraint violated: {0}")]
    Constraint(String),
}

impl FormatError {
    fn parse(line: usize, column: usize, message: impl Into<String>) -> FormatError {
        FormatError::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}

/// A parsed quiver file: the quiver plus its optional document name.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuiverDocument {
    pub name: Option<String>,
    pub quiver: Quiver,
}

impl QuiverDocument {
    /// Canonical text: the name line if present, vertices sorted, then
    /// edges sorted by edge label.
    pub fn render(&self) -> String {
        let mut out = String::new();
        if let Some(name) = &self.name {
            let _ = writeln!(out, "quiver {name}");
        }
        out.push_str(&serialize_quiver(&self.quiver));
        out
    }
}

/// A parsed morphism file. The endpoint quivers live in separate files;
/// resolving the pairs against them is a second step
/// ([`resolve_morphism_components`]).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorphismDocument {
    pub dom_path: String,
    pub cod_path: String,
    pub vertex_pairs: Vec<(Label, Label)>,
    pub edge_pairs: Vec<(Label, Label)>,
}

/// A parsed map file: an explicit domain, codomain, and assignment table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MapDocument {
    pub domain: Vec<Label>,
    pub codomain: Vec<Label>,
    pub pairs: Vec<(Label, Label)>,
}

/// Tokens of one line with their 1-based starting columns, comments
/// stripped.
fn tokenize(line: &str) -> Vec<(usize, &str)> {
    let content = match line.find('#') {
        Some(hash) => &line[..hash],
        None => line,
    };
    let mut tokens = Vec::new();
    let mut start = None;
    for (i, ch) in content.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                tokens.push((s + 1, &content[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        tokens.push((s + 1, &content[s..]));
    }
    tokens
}

fn parse_label(token: &str, line: usize, column: usize) -> Result<Label, FormatError> {
    Label::new(token).map_err(|err| match err {
        SetError::ReservedChar(..) | SetError::EmptyLabel => {
            FormatError::Constraint(format!("label {token:?} at line {line}: {err}"))
        }
        other => FormatError::parse(line, column, other.to_string()),
    })
}

fn expect_arity(
    tokens: &[(usize, &str)],
    arity: usize,
    usage: &str,
    line: usize,
) -> Result<(), FormatError> {
    if tokens.len() != arity + 1 {
        let column = tokens
            .get(arity + 1)
            .map(|(c, _)| *c)
            .unwrap_or_else(|| tokens.last().map(|(c, t)| c + t.len()).unwrap_or(1));
        return Err(FormatError::parse(
            line,
            column,
            format!("expected `{usage}`"),
        ));
    }
    Ok(())
}

/// Parses a quiver document. An empty body is the empty quiver.
pub fn parse_quiver(text: &str) -> Result<QuiverDocument, FormatError> {
    let mut name = None;
    let mut vertices: Vec<Label> = Vec::new();
    let mut edge_rows: Vec<(Label, Label, Label)> = Vec::new();
    let mut saw_directive = false;

    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        let tokens = tokenize(raw);
        let Some(&(column, keyword)) = tokens.first() else {
            continue;
        };
        match keyword {
            "quiver" => {
                expect_arity(&tokens, 1, "quiver <name>", line)?;
                if saw_directive || name.is_some() {
                    return Err(FormatError::parse(
                        line,
                        column,
                        "the quiver line must be the first directive and appear once",
                    ));
                }
                name = Some(parse_label(tokens[1].1, line, tokens[1].0)?.to_string());
            }
            "vertex" => {
                expect_arity(&tokens, 1, "vertex <label>", line)?;
                vertices.push(parse_label(tokens[1].1, line, tokens[1].0)?);
            }
            "edge" => {
                expect_arity(&tokens, 3, "edge <label> <source> <target>", line)?;
                let label = parse_label(tokens[1].1, line, tokens[1].0)?;
                let source = parse_label(tokens[2].1, line, tokens[2].0)?;
                let target = parse_label(tokens[3].1, line, tokens[3].0)?;
                edge_rows.push((label, source, target));
            }
            other => {
                return Err(FormatError::parse(
                    line,
                    column,
                    format!("unknown directive {other:?}"),
                ));
            }
        }
        saw_directive = true;
    }

    let vertex_set =
        FiniteSet::new(vertices).map_err(|err| FormatError::Constraint(format!("vertex {err}")))?;
    let edge_set = FiniteSet::new(edge_rows.iter().map(|(label, _, _)| label.clone()))
        .map_err(|err| FormatError::Constraint(format!("edge {err}")))?;
    let mut source_table = BTreeMap::new();
    let mut target_table = BTreeMap::new();
    for (label, source, target) in edge_rows {
        for endpoint in [&source, &target] {
            if !vertex_set.contains(endpoint) {
                return Err(FormatError::Constraint(format!(
                    "edge {label} references undeclared vertex {endpoint}"
                )));
            }
        }
        source_table.insert(label.clone(), source);
        target_table.insert(label, target);
    }
    let source = SetFunction::new(edge_set.clone(), vertex_set.clone(), source_table)
        .expect("edge table is total and endpoint-checked");
    let target = SetFunction::new(edge_set.clone(), vertex_set.clone(), target_table)
        .expect("edge table is total and endpoint-checked");
    let quiver = Quiver::new(vertex_set, edge_set, source, target)
        .expect("structure maps were built with the right carriers");
    Ok(QuiverDocument { name, quiver })
}

/// Canonical unnamed quiver document: vertices sorted, edges sorted by
/// label.
pub fn serialize_quiver(quiver: &Quiver) -> String {
    let mut out = String::new();
    for v in quiver.vertices().iter() {
        let _ = writeln!(out, "vertex {v}");
    }
    for e in quiver.edges().iter() {
        let _ = writeln!(
            out,
            "edge {e} {} {}",
            quiver.source().apply(e),
            quiver.target().apply(e)
        );
    }
    out
}

/// Parses a morphism document. `dom` and `cod` are required exactly once.
pub fn parse_morphism(text: &str) -> Result<MorphismDocument, FormatError> {
    let mut dom_path = None;
    let mut cod_path = None;
    let mut vertex_pairs = Vec::new();
    let mut edge_pairs = Vec::new();

    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        let tokens = tokenize(raw);
        let Some(&(column, keyword)) = tokens.first() else {
            continue;
        };
        match keyword {
            "dom" | "cod" => {
                expect_arity(&tokens, 1, &format!("{keyword} <path>"), line)?;
                let slot = if keyword == "dom" {
                    &mut dom_path
                } else {
                    &mut cod_path
                };
                if slot.is_some() {
                    return Err(FormatError::parse(
                        line,
                        column,
                        format!("duplicate {keyword} line"),
                    ));
                }
                *slot = Some(tokens[1].1.to_string());
            }
            "vmap" | "emap" => {
                expect_arity(&tokens, 3, &format!("{keyword} <from> -> <to>"), line)?;
                if tokens[2].1 != "->" {
                    return Err(FormatError::parse(
                        line,
                        tokens[2].0,
                        format!("expected `->`, found {:?}", tokens[2].1),
                    ));
                }
                let from = parse_label(tokens[1].1, line, tokens[1].0)?;
                let to = parse_label(tokens[3].1, line, tokens[3].0)?;
                if keyword == "vmap" {
                    vertex_pairs.push((from, to));
                } else {
                    edge_pairs.push((from, to));
                }
            }
            other => {
                return Err(FormatError::parse(
                    line,
                    column,
                    format!("unknown directive {other:?}"),
                ));
            }
        }
    }

    let dom_path = dom_path
        .ok_or_else(|| FormatError::Constraint("morphism document has no dom line".to_string()))?;
    let cod_path = cod_path
        .ok_or_else(|| FormatError::Constraint("morphism document has no cod line".to_string()))?;
    Ok(MorphismDocument {
        dom_path,
        cod_path,
        vertex_pairs,
        edge_pairs,
    })
}

/// Builds the vertex and edge components of a morphism document against its
/// resolved endpoint quivers. Totality and membership failures are document
/// constraint violations; whether the components commute with the structure
/// maps is for [`QuiverMorphism::new`] to decide.
///
/// [`QuiverMorphism::new`]: crate::quiver::QuiverMorphism::new
pub fn resolve_morphism_components(
    document: &MorphismDocument,
    dom: &Quiver,
    cod: &Quiver,
) -> Result<(SetFunction, SetFunction), FormatError> {
    let vertex_map = SetFunction::from_pairs(
        dom.vertices().clone(),
        cod.vertices().clone(),
        document.vertex_pairs.iter().cloned(),
    )
    .map_err(|err| FormatError::Constraint(format!("vmap {err}")))?;
    let edge_map = SetFunction::from_pairs(
        dom.edges().clone(),
        cod.edges().clone(),
        document.edge_pairs.iter().cloned(),
    )
    .map_err(|err| FormatError::Constraint(format!("emap {err}")))?;
    Ok((vertex_map, edge_map))
}

/// Renders a morphism's two components as `vmap`/`emap` lines in sorted
/// order, without the `dom`/`cod` references.
pub fn serialize_morphism_components(vertex_map: &SetFunction, edge_map: &SetFunction) -> String {
    let mut out = String::new();
    for (from, to) in vertex_map.pairs() {
        let _ = writeln!(out, "vmap {from} -> {to}");
    }
    for (from, to) in edge_map.pairs() {
        let _ = writeln!(out, "emap {from} -> {to}");
    }
    out
}

/// Parses a map document into its carrier lists and assignment table.
pub fn parse_map(text: &str) -> Result<MapDocument, FormatError> {
    let mut domain = Vec::new();
    let mut codomain = Vec::new();
    let mut pairs = Vec::new();

    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        let tokens = tokenize(raw);
        let Some(&(column, keyword)) = tokens.first() else {
            continue;
        };
        match keyword {
            "dom" | "cod" => {
                let side = if keyword == "dom" {
                    &mut domain
                } else {
                    &mut codomain
                };
                for &(col, token) in &tokens[1..] {
                    side.push(parse_label(token, line, col)?);
                }
            }
            "map" => {
                expect_arity(&tokens, 3, "map <from> -> <to>", line)?;
                if tokens[2].1 != "->" {
                    return Err(FormatError::parse(
                        line,
                        tokens[2].0,
                        format!("expected `->`, found {:?}", tokens[2].1),
                    ));
                }
                pairs.push((
                    parse_label(tokens[1].1, line, tokens[1].0)?,
                    parse_label(tokens[3].1, line, tokens[3].0)?,
                ));
            }
            other => {
                return Err(FormatError::parse(
                    line,
                    column,
                    format!("unknown directive {other:?}"),
                ));
            }
        }
    }

    Ok(MapDocument {
        domain,
        codomain,
        pairs,
    })
}

/// Builds the set function a map document describes.
pub fn resolve_map(document: &MapDocument) -> Result<SetFunction, FormatError> {
    let domain = FiniteSet::new(document.domain.iter().cloned())
        .map_err(|err| FormatError::Constraint(format!("dom {err}")))?;
    let codomain = FiniteSet::new(document.codomain.iter().cloned())
        .map_err(|err| FormatError::Constraint(format!("cod {err}")))?;
    SetFunction::from_pairs(domain, codomain, document.pairs.iter().cloned())
        .map_err(|err| FormatError::Constraint(format!("map {err}")))
}

fn dot_quote(label: &Label) -> String {
    format!(
        "\"{}\"",
        label.as_str().replace('\\', "\\\\").replace('"', "\\\"")
    )
}

/// A DOT digraph with one node per vertex and one labelled arrow per edge,
/// both in canonical order.
pub fn export_dot(quiver: &Quiver) -> String {
    let mut out = String::from("digraph {\n");
    for v in quiver.vertices().iter() {
        let _ = writeln!(out, "    {};", dot_quote(v));
    }
    for e in quiver.edges().iter() {
        let _ = writeln!(
            out,
            "    {} -> {} [label={}];",
            dot_quote(quiver.source().apply(e)),
            dot_quote(quiver.target().apply(e)),
            dot_quote(e)
        );
    }
    out.push_str("}\n");
    out
}

/// Surfaces [`QuiverError`]s with the same rendering the text formats use.
pub fn describe_quiver_error(err: &QuiverError) -> String {
    err.to_string()
}
