//! DOT script emission.
//!
//! Node ids are `n1…nK`, the same ids the full XML schema uses. Root-scope
//! nodes are written first, then each other scope in order of first
//! appearance. Edges follow in document order.

use alloc::format;
use alloc::string::String;
use core::fmt::{self, Write as _};

use thiserror::Error;

use crate::graph::{EdgeTarget, Node, NodeId, Scope, SemanticGraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DotError {
    #[error("edge `{label}` targets scope :{scope}, which has no member nodes")]
    EmptyScope { scope: String, label: String },
    #[error("`{0}` is not a valid DOT identifier")]
    InvalidId(String),
}

/// A bare DOT identifier: `[A-Za-z_][A-Za-z0-9_]*`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DotId(String);

impl DotId {
    pub fn new(s: impl Into<String>) -> Result<Self, DotError> {
        let s = s.into();
        let mut chars = s.chars();
        let ok = chars.next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
            && chars.all(|c| c.is_ascii_alphanumeric() || c == '_');
        if ok {
            Ok(DotId(s))
        } else {
            Err(DotError::InvalidId(s))
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl Default for DotId {
    fn default() -> Self {
        DotId(String::from("unl"))
    }
}

impl fmt::Display for DotId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// How non-root scopes are drawn.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ScopeStyle {
    /// `subgraph cluster_NN`; edges into a scope land on its entry node with `lhead`.
    #[default]
    Cluster,
    /// One box node `sNN` per scope with dashed edges to its members.
    Node,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DotOptions {
    /// Append `@attr` lines to node labels.
    pub show_attributes: bool,
    pub scope_style: ScopeStyle,
    pub graph_name: DotId,
}

/// Quotes a string as a DOT ID, escaping `"`, `\` and newlines.
pub fn escape_dot(text: &str) -> String {
    let mut out = String::with_capacity(text.len() + 2);
    out.push('"');
    for c in text.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

fn node_statement(out: &mut String, indent: &str, id: NodeId, node: &Node, opts: &DotOptions) {
    let mut label = node.lemma.clone();
    if opts.show_attributes && !node.attributes.is_empty() {
        label.push('\n');
        for (i, attr) in node.attributes.iter().enumerate() {
            if i > 0 {
                label.push(' ');
            }
            label.push('@');
            label.push_str(attr);
        }
    }
    let _ = write!(out, "{indent}{id} [label={}", escape_dot(&label));
    if node.is_entry() {
        out.push_str(", peripheries=2");
    }
    out.push_str("];\n");
}

fn scope_anchor(scope: &Scope) -> Option<NodeId> {
    scope.entry.or_else(|| scope.members.first().copied())
}

pub fn emit_dot(graph: &SemanticGraph, opts: &DotOptions) -> Result<String, DotError> {
    let mut out = String::new();
    let _ = writeln!(out, "digraph {} {{", opts.graph_name);

    let inner_scopes = || {
        graph
            .scopes()
            .iter()
            .filter(|s| !s.id.is_root() && !s.members.is_empty())
    };
    let cluster = opts.scope_style == ScopeStyle::Cluster;
    if cluster && inner_scopes().next().is_some() {
        out.push_str("  compound=true;\n");
    }

    for &id in &graph.root().members {
        node_statement(&mut out, "  ", id, graph.node(id), opts);
    }
    for scope in inner_scopes() {
        if cluster {
            let _ = writeln!(out, "  subgraph cluster_{} {{", scope.id);
            let _ = writeln!(out, "    label={};", escape_dot(&format!("scope :{}", scope.id)));
            for &id in &scope.members {
                node_statement(&mut out, "    ", id, graph.node(id), opts);
            }
            out.push_str("  }\n");
        } else {
            let _ = writeln!(
                out,
                "  s{} [label={}, shape=box];",
                scope.id,
                escape_dot(&format!(":{}", scope.id))
            );
            for &id in &scope.members {
                node_statement(&mut out, "  ", id, graph.node(id), opts);
            }
            for &id in &scope.members {
                let _ = writeln!(out, "  s{} -> {id} [style=dashed];", scope.id);
            }
        }
    }

    for edge in graph.edges() {
        let label = escape_dot(edge.label.as_str());
        match &edge.target {
            EdgeTarget::Node(target) => {
                let _ = writeln!(out, "  {} -> {target} [label={label}];", edge.source);
            }
            EdgeTarget::Scope(scope_id) => {
                let empty = || DotError::EmptyScope {
                    scope: String::from(scope_id.as_str()),
                    label: String::from(edge.label.as_str()),
                };
                let scope = graph.scope(scope_id).ok_or_else(empty)?;
                let anchor = scope_anchor(scope).ok_or_else(empty)?;
                if scope.id.is_root() {
                    let _ = writeln!(out, "  {} -> {anchor} [label={label}];", edge.source);
                } else if cluster {
                    let _ = writeln!(
                        out,
                        "  {} -> {anchor} [label={label}, lhead=cluster_{scope_id}];",
                        edge.source
                    );
                } else {
                    let _ = writeln!(out, "  {} -> s{scope_id} [label={label}];", edge.source);
                }
            }
        }
    }

    out.push_str("}\n");
    Ok(out)
}
