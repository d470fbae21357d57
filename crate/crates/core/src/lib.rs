//! Universal Networking Language (UNL) toolkit.
//!
//! UNL encodes a sentence as a set of binary relations between Universal
//! Words. This crate parses UNL text into a [`UnlDocument`], resolves that
//! into a [`SemanticGraph`] (a hypergraph whose scopes can act as nodes),
//! and renders the result as XML or as a DOT script:
//!
//! ```text
//! UNL text --parse_document--> UnlDocument --build_graph--> SemanticGraph --emit_dot--> DOT
//!                                   |   ^
//!                          emit_xml |   | ingest_xml (full schema only)
//!                                   v   |
//!                                    XML
//! ```
//!
//! The crate is `no_std` and only needs `alloc`. File and stream handling
//! live in the `unl-cli` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod diagnostic;
pub mod dot;
pub mod graph;
pub mod lexer;
pub mod lint;
pub mod model;
pub mod parser;
pub mod xml;

pub use diagnostic::{Code, Diagnostic, Severity};
pub use dot::{emit_dot, escape_dot, DotError, DotId, DotOptions, ScopeStyle};
pub use graph::{build_graph, entry_of, Edge, EdgeTarget, GraphError, Node, NodeId, NodeKey, Scope, SemanticGraph};
pub use lint::lint_document;
pub use model::{DigitId, Label, ModelError, NodeTerm, RelationInstance, Restriction, UniversalWord, UnlDocument};
pub use parser::{parse_document, parse_relation_line, parse_restriction_list, parse_uw_term, ParseError};
pub use xml::{emit_xml, ingest_xml, sanitize_element_name, XmlError, XmlSchemaMode};
