//! Resolution of a [`UnlDocument`] into a [`SemanticGraph`].
//!
//! Identity rule: a node is keyed by scope, lemma, restriction signature and
//! instance id. Attributes are not part of the key; repeated occurrences of
//! one key merge into one node whose attributes are the union of all
//! occurrences. A word takes the scope of the relation it appears in
//! (`obj:01(…)` puts both words in scope `01`); un-suffixed relations belong
//! to the root scope `00`. A term-level `:NN` is an instance id and never
//! moves a node into a scope.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::diagnostic::{sort_diagnostics, Code, Diagnostic};
use crate::model::{
    restriction_signature, same_set, DigitId, Label, NodeTerm, Restriction, UniversalWord, UnlDocument,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("unknown scope `{0}`")]
    UnknownScope(String),
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeKey {
    pub scope_id: DigitId,
    pub lemma: String,
    pub restriction_signature: String,
    pub instance_id: Option<DigitId>,
}

impl NodeKey {
    pub fn of(word: &UniversalWord, scope_id: DigitId) -> Self {
        NodeKey {
            scope_id,
            lemma: String::from(word.lemma()),
            restriction_signature: restriction_signature(word.restrictions()),
            instance_id: word.instance_id().cloned(),
        }
    }
}

impl fmt::Display for NodeKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.lemma)?;
        if !self.restriction_signature.is_empty() {
            write!(f, "({})", self.restriction_signature)?;
        }
        if let Some(id) = &self.instance_id {
            write!(f, ":{id}")?;
        }
        Ok(())
    }
}

/// Position of a node in [`SemanticGraph::nodes`]. Renders as `n1`, `n2`, …
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeId(pub usize);

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n{}", self.0 + 1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Node {
    pub key: NodeKey,
    pub lemma: String,
    pub restrictions: Vec<Restriction>,
    /// Union over all occurrences, in first-seen order.
    pub attributes: Vec<String>,
    pub scope_id: DigitId,
    /// Line of the first occurrence.
    pub line: usize,
}

impl Node {
    pub fn is_entry(&self) -> bool {
        self.attributes.iter().any(|a| a == "entry")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EdgeTarget {
    Node(NodeId),
    /// The scope itself, as a hypernode.
    Scope(DigitId),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub label: Label,
    pub source: NodeId,
    pub target: EdgeTarget,
    pub line: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Scope {
    pub id: DigitId,
    pub members: Vec<NodeId>,
    pub entry: Option<NodeId>,
    /// Root, or named by at least one relation's scope suffix. A scope that
    /// is only referenced is undefined and has no members.
    pub defined: bool,
    pub line: usize,
}

/// Nodes, edges and scopes of one document. Scopes are ordered root first,
/// then by first appearance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemanticGraph {
    nodes: Vec<Node>,
    edges: Vec<Edge>,
    scopes: Vec<Scope>,
    diagnostics: Vec<Diagnostic>,
}

impl SemanticGraph {
    /// A graph holding only the empty root scope.
    pub fn empty() -> Self {
        SemanticGraph {
            nodes: Vec::new(),
            edges: Vec::new(),
            scopes: alloc::vec![Scope {
                id: DigitId::root(),
                members: Vec::new(),
                entry: None,
                defined: true,
                line: 1,
            }],
            diagnostics: Vec::new(),
        }
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn node(&self, id: NodeId) -> &Node {
        &self.nodes[id.0]
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn scopes(&self) -> &[Scope] {
        &self.scopes
    }

    pub fn root(&self) -> &Scope {
        &self.scopes[0]
    }

    pub fn scope(&self, id: &DigitId) -> Option<&Scope> {
        self.scopes.iter().find(|s| &s.id == id)
    }

    pub fn find(&self, key: &NodeKey) -> Option<NodeId> {
        self.nodes.iter().position(|n| &n.key == key).map(NodeId)
    }

    pub fn root_entry(&self) -> Option<&NodeKey> {
        self.root().entry.map(|id| &self.node(id).key)
    }

    /// Entry-node, dangling-scope and attribute findings (W001-W004).
    pub fn diagnostics(&self) -> &[Diagnostic] {
        &self.diagnostics
    }
}

/// Entry node of a scope; the first one in document order when several exist.
pub fn entry_of<'g>(graph: &'g SemanticGraph, scope_id: &DigitId) -> Result<Option<&'g NodeKey>, GraphError> {
    let scope = graph
        .scope(scope_id)
        .ok_or_else(|| GraphError::UnknownScope(String::from(scope_id.as_str())))?;
    Ok(scope.entry.map(|id| &graph.node(id).key))
}

struct Builder {
    graph: SemanticGraph,
    index: BTreeMap<NodeKey, NodeId>,
    first_attrs: Vec<Vec<String>>,
}

impl Builder {
    fn scope_mut(&mut self, id: &DigitId, line: usize) -> &mut Scope {
        let pos = match self.graph.scopes.iter().position(|s| &s.id == id) {
            Some(p) => p,
            None => {
                self.graph.scopes.push(Scope {
                    id: id.clone(),
                    members: Vec::new(),
                    entry: None,
                    defined: false,
                    line,
                });
                self.graph.scopes.len() - 1
            }
        };
        &mut self.graph.scopes[pos]
    }

    fn intern(&mut self, word: &UniversalWord, scope: &DigitId, line: usize) -> NodeId {
        let key = NodeKey::of(word, scope.clone());
        if let Some(&id) = self.index.get(&key) {
            if !same_set(&self.first_attrs[id.0], word.attributes()) {
                let msg = format!(
                    "`{}` in scope {} has attributes {{{}}} here but {{{}}} at its first occurrence",
                    key,
                    key.scope_id,
                    word.attributes().join(","),
                    self.first_attrs[id.0].join(","),
                );
                self.graph.diagnostics.push(Diagnostic::new(Code::W004, line, msg));
            }
            let node = &mut self.graph.nodes[id.0];
            for attr in word.attributes() {
                if !node.attributes.contains(attr) {
                    node.attributes.push(attr.clone());
                }
            }
            return id;
        }

        let id = NodeId(self.graph.nodes.len());
        self.graph.nodes.push(Node {
            key: key.clone(),
            lemma: String::from(word.lemma()),
            restrictions: word.restrictions().to_vec(),
            attributes: word.attributes().to_vec(),
            scope_id: scope.clone(),
            line,
        });
        self.first_attrs.push(word.attributes().to_vec());
        self.index.insert(key, id);
        self.scope_mut(scope, line).members.push(id);
        id
    }

    fn resolve_entries(&mut self) {
        let root_line = self.graph.edges.first().map_or(1, |e| e.line);
        for scope in &mut self.graph.scopes {
            let candidates: Vec<NodeId> = scope
                .members
                .iter()
                .copied()
                .filter(|id| self.graph.nodes[id.0].is_entry())
                .collect();
            scope.entry = candidates.first().copied();

            let name = if scope.id.is_root() {
                String::from("root scope")
            } else {
                format!("scope :{}", scope.id)
            };
            match candidates.len() {
                0 if scope.id.is_root() || !scope.members.is_empty() => {
                    let line = if scope.id.is_root() { root_line } else { scope.line };
                    self.graph.diagnostics.push(Diagnostic::new(
                        Code::W001,
                        line,
                        format!("{name} has no @entry node"),
                    ));
                }
                0 | 1 => {}
                _ => {
                    for extra in &candidates[1..] {
                        let node = &self.graph.nodes[extra.0];
                        self.graph.diagnostics.push(Diagnostic::new(
                            Code::W002,
                            node.line,
                            format!(
                                "{name} has more than one @entry node; `{}` is not the first",
                                node.lemma
                            ),
                        ));
                    }
                }
            }
        }
    }
}

/// Builds the graph. Never fails; problems become diagnostics on the graph.
pub fn build_graph(doc: &UnlDocument) -> SemanticGraph {
    let mut b = Builder {
        graph: SemanticGraph::empty(),
        index: BTreeMap::new(),
        first_attrs: Vec::new(),
    };
    if let Some(first) = doc.relations.first() {
        b.graph.scopes[0].line = first.line_span.0;
    }

    for rel in &doc.relations {
        let line = rel.line_span.0;
        let scope = rel.scope_suffix.clone().unwrap_or_else(DigitId::root);
        b.scope_mut(&scope, line).defined = true;

        let source = b.intern(&rel.source, &scope, line);
        let target = match &rel.target {
            NodeTerm::Word(w) => EdgeTarget::Node(b.intern(w, &scope, line)),
            NodeTerm::ScopeRef(id) => {
                b.scope_mut(id, line);
                EdgeTarget::Scope(id.clone())
            }
        };
        b.graph.edges.push(Edge {
            label: rel.label.clone(),
            source,
            target,
            line,
        });
    }

    let mut dangling = Vec::new();
    for edge in &b.graph.edges {
        if let EdgeTarget::Scope(id) = &edge.target {
            if !b.graph.scope(id).is_some_and(|s| s.defined) {
                dangling.push(Diagnostic::new(
                    Code::W003,
                    edge.line,
                    format!("scope :{id} is referenced but no relation defines it"),
                ));
            }
        }
    }
    b.graph.diagnostics.extend(dangling);
    b.resolve_entries();
    sort_diagnostics(&mut b.graph.diagnostics);
    b.graph
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse_document;

    fn lemmas(g: &SemanticGraph, scope: &str) -> Vec<String> {
        let s = g.scope(&DigitId::new(scope).unwrap()).unwrap();
        s.members.iter().map(|id| g.node(*id).lemma.clone()).collect()
    }

    #[test]
    fn merges_identical_sources() {
        let doc = parse_document("agt(dog(icl>animal).@entry, food)\nobj(dog(icl>animal), bone)").unwrap();
        let g = build_graph(&doc);
        assert_eq!(g.nodes().len(), 3);
        let dog = g.find(&NodeKey::of(&doc.relations[0].source, DigitId::root())).unwrap();
        assert_eq!(g.edges().iter().filter(|e| e.source == dog).count(), 2);
    }

    #[test]
    fn attributes_union_with_warning() {
        let doc = parse_document("agt(affect(icl>do).@entry, x)\nobj(affect(icl>do).@past, y)").unwrap();
        let g = build_graph(&doc);
        assert_eq!(g.nodes()[0].attributes, ["entry", "past"]);
        assert!(g.diagnostics().iter().any(|d| d.code == Code::W004 && d.line == 2));
    }

    #[test]
    fn instance_ids_split_nodes() {
        let doc = parse_document("and(book(icl>thing):01.@entry, book(icl>thing):02)").unwrap();
        let g = build_graph(&doc);
        assert_eq!(g.nodes().len(), 2);
    }

    #[test]
    fn term_instance_id_does_not_assign_scope() {
        let doc = parse_document("agt(affect(icl>do).@entry:01, human)").unwrap();
        let g = build_graph(&doc);
        assert_eq!(g.scopes().len(), 1);
        assert_eq!(lemmas(&g, "00"), ["affect", "human"]);
    }

    #[test]
    fn scoped_and_unscoped_occurrences_split() {
        let doc = parse_document("agt(say.@entry, boy)\nagt:01(read.@entry, boy)\nobj(say.@entry, :01)").unwrap();
        let g = build_graph(&doc);
        assert_eq!(lemmas(&g, "00"), ["say", "boy"]);
        assert_eq!(lemmas(&g, "01"), ["read", "boy"]);
        assert!(g.diagnostics().is_empty(), "{:?}", g.diagnostics());
    }

    #[test]
    fn entry_lookup() {
        let doc = parse_document("agt(run(icl>do), dog(icl>animal))").unwrap();
        let g = build_graph(&doc);
        assert_eq!(entry_of(&g, &DigitId::root()).unwrap(), None);
        assert_eq!(
            entry_of(&g, &DigitId::new("05").unwrap()),
            Err(GraphError::UnknownScope(String::from("05")))
        );
    }

    #[test]
    fn multiple_entries_pick_first() {
        let doc = parse_document("agt(a.@entry, b.@entry)").unwrap();
        let g = build_graph(&doc);
        assert_eq!(entry_of(&g, &DigitId::root()).unwrap().unwrap().lemma, "a");
        assert_eq!(g.diagnostics().iter().filter(|d| d.code == Code::W002).count(), 1);
    }

    #[test]
    fn dangling_scope_ref_gets_empty_scope() {
        let doc = parse_document("pur(go(icl>do).@entry, :07)").unwrap();
        let g = build_graph(&doc);
        let s = g.scope(&DigitId::new("07").unwrap()).unwrap();
        assert!(!s.defined);
        assert!(s.members.is_empty());
        assert_eq!(g.edges()[0].target, EdgeTarget::Scope(DigitId::new("07").unwrap()));
    }

    #[test]
    fn empty_graph_has_root_only() {
        let g = build_graph(&UnlDocument::default());
        assert!(g.nodes().is_empty());
        assert_eq!(g.scopes().len(), 1);
        assert!(g.root().id.is_root());
    }
}
