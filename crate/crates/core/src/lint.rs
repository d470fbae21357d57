//! Well-formedness checks over a parsed document.
//!
//! W001 root or scope without an `@entry` node, W002 more than one, W003
//! reference to a scope no relation defines, W004 attribute disagreement
//! between occurrences of one node.

use alloc::vec::Vec;

use crate::diagnostic::Diagnostic;
use crate::graph::build_graph;
use crate::model::UnlDocument;

/// Lint findings ordered by line, then code. Never fails.
pub fn lint_document(doc: &UnlDocument) -> Vec<Diagnostic> {
    build_graph(doc).diagnostics().to_vec()
}
