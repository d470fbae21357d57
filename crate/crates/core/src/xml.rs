//! XML serialization in two schemas.
//!
//! `Lite` is the minimal nesting `<UNL><source><label>target</label></source></UNL>`.
//! It drops restrictions, attributes and ids, so it is write-only.
//!
//! `Full` is lossless and is what [`ingest_xml`] reads:
//!
//! ```xml
//! <?xml version="1.0" encoding="UTF-8"?>
//! <unl>
//!   <scope id="00">
//!     <node id="n1" lemma="read" restrictions="icl>do" attrs="entry,present,progress"/>
//!     <node id="n2" lemma="John" restrictions="iof>person"/>
//!     <rel label="agt" from="n1" to="n2" seq="1"/>
//!   </scope>
//! </unl>
//! ```
//!
//! Element and attribute inventory:
//!
//! * `unl`: optional `fenced="true"` when the source text had `{unl}` fences.
//! * `scope`: `id`. The root scope `00` comes first, then scopes in order
//!   of first appearance. Only scopes that own relations are written.
//! * `node`: `id`, `lemma`, then optional `restrictions` (`icl>do,obj>thing`),
//!   `attrs` (`entry,past`, unioned over occurrences), `instance` (digits).
//! * `rel`: `label`, `from` (node id), `to` (node id or `scope:NN`), `seq`
//!   (1-based position in the document), then optional `from-attrs` /
//!   `to-attrs` giving an occurrence's own attributes when they differ
//!   from the node's `attrs`. An empty value means no attributes.
//!
//! Output is UTF-8 with 2-space indentation and `\n` line endings.
//! Attribute values escape `&`, `<` and `"` only.

use alloc::borrow::ToOwned;
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write as _;

use thiserror::Error;

use crate::diagnostic::sort_diagnostics;
use crate::graph::{build_graph, EdgeTarget, NodeId, SemanticGraph};
use crate::lint::lint_document;
use crate::model::{restriction_signature, DigitId, Label, NodeTerm, RelationInstance, UniversalWord, UnlDocument};
use crate::parser::parse_restriction_list;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum XmlSchemaMode {
    Lite,
    #[default]
    Full,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum XmlError {
    #[error("malformed XML: {0}")]
    Malformed(String),
    #[error("schema mismatch: root element `{0}` is not `unl` (lite XML cannot be read back)")]
    SchemaMismatch(String),
    #[error("unknown element `{element}` inside `{parent}`")]
    UnknownElement { element: String, parent: String },
    #[error("unknown attribute `{attribute}` on `{element}`")]
    UnknownAttribute { element: String, attribute: String },
    #[error("`{element}` is missing attribute `{attribute}`")]
    MissingAttribute { element: String, attribute: String },
    #[error("unexpected text `{text}` inside `{element}`")]
    UnexpectedText { element: String, text: String },
    #[error("invalid `{attribute}` value `{value}` on `{element}`: {reason}")]
    InvalidValue {
        element: String,
        attribute: String,
        value: String,
        reason: String,
    },
    #[error("duplicate node id `{0}`")]
    DuplicateNodeId(String),
    #[error("duplicate scope id `{0}`")]
    DuplicateScope(String),
    #[error("duplicate rel seq `{0}`")]
    DuplicateSeq(usize),
    #[error("reference to undefined node `{0}`")]
    DanglingReference(String),
    #[error("rel in scope `{scope}` refers to node `{node}` of another scope")]
    ScopeMismatch { scope: String, node: String },
    #[error("document contains no relations")]
    NoRelations,
}

/// Serializes a document. The document should be free of errors.
pub fn emit_xml(doc: &UnlDocument, mode: XmlSchemaMode) -> String {
    let graph = build_graph(doc);
    match mode {
        XmlSchemaMode::Lite => emit_lite(&graph),
        XmlSchemaMode::Full => emit_full(doc, &graph),
    }
}

fn escape_attr(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '"' => out.push_str("&quot;"),
            c => out.push(c),
        }
    }
    out
}

fn escape_text(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            c => out.push(c),
        }
    }
    out
}

fn emit_lite(graph: &SemanticGraph) -> String {
    let mut out = String::from("<UNL>\n");
    let mut order: Vec<NodeId> = Vec::new();
    for edge in graph.edges() {
        if !order.contains(&edge.source) {
            order.push(edge.source);
        }
    }
    for source in order {
        let name = sanitize_element_name(&graph.node(source).lemma);
        let _ = writeln!(out, "  <{name}>");
        for edge in graph.edges().iter().filter(|e| e.source == source) {
            let text = match &edge.target {
                EdgeTarget::Node(id) => escape_text(&graph.node(*id).lemma),
                EdgeTarget::Scope(id) => format!("scope_{id}"),
            };
            let _ = writeln!(out, "    <{0}>{text}</{0}>", edge.label);
        }
        let _ = writeln!(out, "  </{name}>");
    }
    out.push_str("</UNL>\n");
    out
}

fn emit_full(doc: &UnlDocument, graph: &SemanticGraph) -> String {
    let mut out = String::from("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    out.push_str(if doc.had_delimiters {
        "<unl fenced=\"true\">\n"
    } else {
        "<unl>\n"
    });

    for scope in graph.scopes().iter().filter(|s| s.defined) {
        let rels: Vec<(usize, &RelationInstance)> = doc
            .relations
            .iter()
            .enumerate()
            .filter(|(_, r)| r.scope_suffix.as_ref().unwrap_or(&graph.root().id) == &scope.id)
            .collect();
        if scope.members.is_empty() && rels.is_empty() {
            let _ = writeln!(out, "  <scope id=\"{}\"/>", scope.id);
            continue;
        }
        let _ = writeln!(out, "  <scope id=\"{}\">", scope.id);
        for &id in &scope.members {
            let node = graph.node(id);
            let _ = write!(out, "    <node id=\"{id}\" lemma=\"{}\"", escape_attr(&node.lemma));
            if !node.restrictions.is_empty() {
                let _ = write!(
                    out,
                    " restrictions=\"{}\"",
                    escape_attr(&restriction_signature(&node.restrictions))
                );
            }
            if !node.attributes.is_empty() {
                let _ = write!(out, " attrs=\"{}\"", escape_attr(&node.attributes.join(",")));
            }
            if let Some(inst) = &node.key.instance_id {
                let _ = write!(out, " instance=\"{inst}\"");
            }
            out.push_str("/>\n");
        }
        for (index, rel) in rels {
            let edge = &graph.edges()[index];
            let to = match &edge.target {
                EdgeTarget::Node(id) => format!("{id}"),
                EdgeTarget::Scope(id) => format!("scope:{id}"),
            };
            let _ = write!(
                out,
                "    <rel label=\"{}\" from=\"{}\" to=\"{to}\" seq=\"{}\"",
                rel.label,
                edge.source,
                index + 1
            );
            let source_node = graph.node(edge.source);
            if rel.source.attributes() != source_node.attributes.as_slice() {
                let _ = write!(
                    out,
                    " from-attrs=\"{}\"",
                    escape_attr(&rel.source.attributes().join(","))
                );
            }
            if let (NodeTerm::Word(w), EdgeTarget::Node(id)) = (&rel.target, &edge.target) {
                if w.attributes() != graph.node(*id).attributes.as_slice() {
                    let _ = write!(out, " to-attrs=\"{}\"", escape_attr(&w.attributes().join(",")));
                }
            }
            out.push_str("/>\n");
        }
        out.push_str("  </scope>\n");
    }
    out.push_str("</unl>\n");
    out
}

fn is_name_start_char(c: char) -> bool {
    matches!(c,
        'A'..='Z' | '_' | 'a'..='z'
        | '\u{C0}'..='\u{D6}' | '\u{D8}'..='\u{F6}' | '\u{F8}'..='\u{2FF}'
        | '\u{370}'..='\u{37D}' | '\u{37F}'..='\u{1FFF}' | '\u{200C}'..='\u{200D}'
        | '\u{2070}'..='\u{218F}' | '\u{2C00}'..='\u{2FEF}' | '\u{3001}'..='\u{D7FF}'
        | '\u{F900}'..='\u{FDCF}' | '\u{FDF0}'..='\u{FFFD}' | '\u{10000}'..='\u{EFFFF}')
}

fn is_name_char(c: char) -> bool {
    is_name_start_char(c)
        || matches!(c, '-' | '.' | '0'..='9' | '\u{B7}' | '\u{300}'..='\u{36F}' | '\u{203F}'..='\u{2040}')
}

/// Turns a lemma into an XML element name (namespace colons excluded).
pub fn sanitize_element_name(lemma: &str) -> String {
    let mut out: String = lemma.chars().map(|c| if is_name_char(c) { c } else { '_' }).collect();
    if !out.chars().next().is_some_and(is_name_start_char) {
        out.insert_str(0, "x_");
    }
    out
}

struct NodeDef {
    scope: DigitId,
    lemma: String,
    restrictions: String,
    attrs: Vec<String>,
    instance: Option<DigitId>,
}

struct RelDef {
    scope: DigitId,
    label: Label,
    from: String,
    to: String,
    seq: Option<usize>,
    from_attrs: Option<Vec<String>>,
    to_attrs: Option<Vec<String>>,
}

fn split_list(value: &str) -> Vec<String> {
    if value.is_empty() {
        Vec::new()
    } else {
        value.split(',').map(ToOwned::to_owned).collect()
    }
}

fn check_attributes(node: roxmltree::Node<'_, '_>, allowed: &[&str]) -> Result<(), XmlError> {
    for attr in node.attributes() {
        if attr.namespace().is_some() || !allowed.contains(&attr.name()) {
            return Err(XmlError::UnknownAttribute {
                element: node.tag_name().name().to_owned(),
                attribute: attr.name().to_owned(),
            });
        }
    }
    Ok(())
}

fn required<'a>(node: roxmltree::Node<'a, '_>, name: &str) -> Result<&'a str, XmlError> {
    node.attribute(name).ok_or_else(|| XmlError::MissingAttribute {
        element: node.tag_name().name().to_owned(),
        attribute: name.to_owned(),
    })
}

fn invalid(element: &str, attribute: &str, value: &str, reason: impl core::fmt::Display) -> XmlError {
    XmlError::InvalidValue {
        element: element.to_owned(),
        attribute: attribute.to_owned(),
        value: value.to_owned(),
        reason: format!("{reason}"),
    }
}

/// Element children of `parent`; text other than whitespace is an error.
fn element_children<'a, 'i>(parent: roxmltree::Node<'a, 'i>) -> Result<Vec<roxmltree::Node<'a, 'i>>, XmlError> {
    let mut out = Vec::new();
    for child in parent.children() {
        if child.is_element() {
            out.push(child);
        } else if child.is_text() {
            let text = child.text().unwrap_or("");
            if !text.trim().is_empty() {
                return Err(XmlError::UnexpectedText {
                    element: parent.tag_name().name().to_owned(),
                    text: text.trim().to_owned(),
                });
            }
        }
    }
    Ok(out)
}

/// Reads full-schema XML back into a document.
///
/// Relations are ordered by `seq`; their line spans are the lines they
/// would occupy in the canonical UNL text. Diagnostics are recomputed.
pub fn ingest_xml(text: &str) -> Result<UnlDocument, XmlError> {
    let tree = roxmltree::Document::parse(text).map_err(|e| XmlError::Malformed(format!("{e}")))?;
    let root = tree.root_element();
    if root.tag_name().name() != "unl" || root.tag_name().namespace().is_some() {
        return Err(XmlError::SchemaMismatch(root.tag_name().name().to_owned()));
    }
    check_attributes(root, &["fenced"])?;
    let had_delimiters = match root.attribute("fenced") {
        None | Some("false") => false,
        Some("true") => true,
        Some(other) => return Err(invalid("unl", "fenced", other, "expected `true` or `false`")),
    };

    let mut nodes: BTreeMap<String, NodeDef> = BTreeMap::new();
    let mut rels: Vec<RelDef> = Vec::new();
    let mut scope_ids: Vec<DigitId> = Vec::new();

    for scope_el in element_children(root)? {
        if scope_el.tag_name().name() != "scope" {
            return Err(XmlError::UnknownElement {
                element: scope_el.tag_name().name().to_owned(),
                parent: String::from("unl"),
            });
        }
        check_attributes(scope_el, &["id"])?;
        let raw = required(scope_el, "id")?;
        let scope = DigitId::new(raw).map_err(|e| invalid("scope", "id", raw, e))?;
        if scope_ids.contains(&scope) {
            return Err(XmlError::DuplicateScope(raw.to_owned()));
        }
        scope_ids.push(scope.clone());

        for el in element_children(scope_el)? {
            match el.tag_name().name() {
                "node" => {
                    check_attributes(el, &["id", "lemma", "restrictions", "attrs", "instance"])?;
                    let id = required(el, "id")?;
                    let instance = el
                        .attribute("instance")
                        .map(|v| DigitId::new(v).map_err(|e| invalid("node", "instance", v, e)))
                        .transpose()?;
                    let def = NodeDef {
                        scope: scope.clone(),
                        lemma: required(el, "lemma")?.to_owned(),
                        restrictions: el.attribute("restrictions").unwrap_or("").to_owned(),
                        attrs: split_list(el.attribute("attrs").unwrap_or("")),
                        instance,
                    };
                    if nodes.insert(id.to_owned(), def).is_some() {
                        return Err(XmlError::DuplicateNodeId(id.to_owned()));
                    }
                }
                "rel" => {
                    check_attributes(el, &["label", "from", "to", "seq", "from-attrs", "to-attrs"])?;
                    let raw_label = required(el, "label")?;
                    let label = Label::new(raw_label).map_err(|e| invalid("rel", "label", raw_label, e))?;
                    let seq = el
                        .attribute("seq")
                        .map(|v| {
                            v.parse::<usize>()
                                .map_err(|_| invalid("rel", "seq", v, "expected a positive integer"))
                        })
                        .transpose()?;
                    rels.push(RelDef {
                        scope: scope.clone(),
                        label,
                        from: required(el, "from")?.to_owned(),
                        to: required(el, "to")?.to_owned(),
                        seq,
                        from_attrs: el.attribute("from-attrs").map(split_list),
                        to_attrs: el.attribute("to-attrs").map(split_list),
                    });
                }
                other => {
                    return Err(XmlError::UnknownElement {
                        element: other.to_owned(),
                        parent: String::from("scope"),
                    });
                }
            }
        }
    }

    if rels.is_empty() {
        return Err(XmlError::NoRelations);
    }
    let mut seen = Vec::new();
    for seq in rels.iter().filter_map(|r| r.seq) {
        if seen.contains(&seq) {
            return Err(XmlError::DuplicateSeq(seq));
        }
        seen.push(seq);
    }
    rels.sort_by_key(|r| r.seq.unwrap_or(usize::MAX));

    let word = |id: &str, scope: &DigitId, attrs: &Option<Vec<String>>| -> Result<UniversalWord, XmlError> {
        let def = nodes
            .get(id)
            .ok_or_else(|| XmlError::DanglingReference(id.to_owned()))?;
        if &def.scope != scope {
            return Err(XmlError::ScopeMismatch {
                scope: String::from(scope.as_str()),
                node: id.to_owned(),
            });
        }
        let restrictions = if def.restrictions.is_empty() {
            Vec::new()
        } else {
            parse_restriction_list(&def.restrictions)
                .map_err(|e| invalid("node", "restrictions", &def.restrictions, e.message))?
        };
        let attributes = attrs.clone().unwrap_or_else(|| def.attrs.clone());
        UniversalWord::new(def.lemma.clone(), restrictions, attributes, def.instance.clone())
            .map_err(|e| invalid("node", "lemma", &def.lemma, e))
    };

    let mut doc = UnlDocument {
        relations: Vec::with_capacity(rels.len()),
        had_delimiters,
        diagnostics: Vec::new(),
    };
    for (i, r) in rels.iter().enumerate() {
        let source = word(&r.from, &r.scope, &r.from_attrs)?;
        let target = match r.to.strip_prefix("scope:") {
            Some(id) => NodeTerm::ScopeRef(DigitId::new(id).map_err(|e| invalid("rel", "to", &r.to, e))?),
            None => NodeTerm::Word(word(&r.to, &r.scope, &r.to_attrs)?),
        };
        let suffix = (!r.scope.is_root()).then(|| r.scope.clone());
        let mut rel = RelationInstance::new(r.label.clone(), suffix, source, target);
        let line = doc.canonical_line(i);
        rel.line_span = (line, line);
        doc.relations.push(rel);
    }
    doc.diagnostics = lint_document(&doc);
    sort_diagnostics(&mut doc.diagnostics);
    Ok(doc)
}
