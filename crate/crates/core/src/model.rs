//! Domain types shared by the parser, the graph builder and the serializers.
//!
//! Values are validated on construction: a [`UniversalWord`] or
//! [`Restriction`] that exists always satisfies its invariants, and its
//! canonical text form (the [`Display`](core::fmt::Display) impl) parses
//! back to an equal value.

use alloc::borrow::ToOwned;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::{self, Write as _};
use core::hash::{Hash, Hasher};

use thiserror::Error;

use crate::diagnostic::Diagnostic;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("label `{0}` must be non-empty ASCII lowercase letters")]
    InvalidLabel(String),
    #[error("id `{0}` must be 1 to 3 ASCII digits")]
    InvalidDigitId(String),
    #[error("empty lemma")]
    EmptyLemma,
    #[error("lemma `{0}` contains a reserved character or irregular spacing")]
    InvalidLemma(String),
    #[error("restriction chain is empty")]
    EmptyChain,
    #[error("restriction term `{0}` is empty or contains a reserved character")]
    InvalidChainElement(String),
    #[error("attribute `{0}` must be ASCII letters, digits, `_` or `-`")]
    InvalidAttribute(String),
    #[error("duplicate attribute `{0}`")]
    DuplicateAttribute(String),
}

/// Characters that terminate a lemma or restriction term.
pub(crate) fn is_reserved(c: char) -> bool {
    matches!(c, '(' | ')' | ',' | ':' | '>' | '@' | '{' | '}') || c.is_whitespace() || c.is_control()
}

/// A run of non-reserved characters with no `.@`, optionally holding
/// single interior spaces between words.
fn is_spaced_text(s: &str) -> bool {
    !s.is_empty() && !s.contains(".@") && s.split(' ').all(|w| !w.is_empty() && !w.chars().any(is_reserved))
}

/// A relation label or restriction tag such as `agt`, `obj`, `icl`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Label(String);

impl Label {
    pub fn new(s: impl Into<String>) -> Result<Self, ModelError> {
        let s = s.into();
        if !s.is_empty() && s.bytes().all(|b| b.is_ascii_lowercase()) {
            Ok(Label(s))
        } else {
            Err(ModelError::InvalidLabel(s))
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// A `:NN` id used for scopes and instances. The digit string is kept
/// verbatim, so `01` and `1` are different ids.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DigitId(String);

impl DigitId {
    pub const ROOT: &'static str = "00";

    pub fn new(s: impl Into<String>) -> Result<Self, ModelError> {
        let s = s.into();
        if (1..=3).contains(&s.len()) && s.bytes().all(|b| b.is_ascii_digit()) {
            Ok(DigitId(s))
        } else {
            Err(ModelError::InvalidDigitId(s))
        }
    }

    /// The root scope id, `00`.
    pub fn root() -> Self {
        DigitId(Self::ROOT.to_owned())
    }

    pub fn is_root(&self) -> bool {
        self.0 == Self::ROOT
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for DigitId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// One `tag>term>term…` qualifier inside a Universal Word's parentheses.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Restriction {
    tag: Label,
    chain: Vec<String>,
}

impl Restriction {
    pub fn new(tag: Label, chain: Vec<String>) -> Result<Self, ModelError> {
        if chain.is_empty() {
            return Err(ModelError::EmptyChain);
        }
        if let Some(bad) = chain.iter().find(|t| !is_spaced_text(t)) {
            return Err(ModelError::InvalidChainElement(bad.clone()));
        }
        Ok(Restriction { tag, chain })
    }

    pub fn tag(&self) -> &Label {
        &self.tag
    }

    pub fn chain(&self) -> &[String] {
        &self.chain
    }
}

impl fmt::Display for Restriction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag.as_str())?;
        for term in &self.chain {
            f.write_char('>')?;
            f.write_str(term)?;
        }
        Ok(())
    }
}

/// Canonical `icl>move>do,plt>place` rendering of a restriction list.
pub fn restriction_signature(restrictions: &[Restriction]) -> String {
    let mut out = String::new();
    for (i, r) in restrictions.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        let _ = write!(out, "{r}");
    }
    out
}

/// A concept: lemma, sense restrictions, `@` attributes and an optional
/// instance id.
///
/// Equality and hashing cover lemma, restrictions and instance id only.
/// Attributes are annotation on an occurrence; use
/// [`identical`](Self::identical) to compare them too.
#[derive(Debug, Clone)]
pub struct UniversalWord {
    lemma: String,
    restrictions: Vec<Restriction>,
    attributes: Vec<String>,
    instance_id: Option<DigitId>,
}

impl UniversalWord {
    pub fn new(
        lemma: impl Into<String>,
        restrictions: Vec<Restriction>,
        attributes: Vec<String>,
        instance_id: Option<DigitId>,
    ) -> Result<Self, ModelError> {
        let lemma = lemma.into();
        if lemma.is_empty() {
            return Err(ModelError::EmptyLemma);
        }
        if !is_spaced_text(&lemma) {
            return Err(ModelError::InvalidLemma(lemma));
        }
        for (i, attr) in attributes.iter().enumerate() {
            if !is_attribute_name(attr) {
                return Err(ModelError::InvalidAttribute(attr.clone()));
            }
            if attributes[..i].contains(attr) {
                return Err(ModelError::DuplicateAttribute(attr.clone()));
            }
        }
        Ok(UniversalWord {
            lemma,
            restrictions,
            attributes,
            instance_id,
        })
    }

    /// A word with just a lemma.
    pub fn bare(lemma: impl Into<String>) -> Result<Self, ModelError> {
        Self::new(lemma, Vec::new(), Vec::new(), None)
    }

    pub fn lemma(&self) -> &str {
        &self.lemma
    }

    pub fn restrictions(&self) -> &[Restriction] {
        &self.restrictions
    }

    /// Attribute tags without the `@`, in first-seen order.
    pub fn attributes(&self) -> &[String] {
        &self.attributes
    }

    pub fn has_attribute(&self, tag: &str) -> bool {
        self.attributes.iter().any(|a| a == tag)
    }

    pub fn instance_id(&self) -> Option<&DigitId> {
        self.instance_id.as_ref()
    }

    /// Equal and carrying the same attribute set.
    pub fn identical(&self, other: &Self) -> bool {
        self == other && same_set(&self.attributes, &other.attributes)
    }
}

pub(crate) fn is_attribute_name(s: &str) -> bool {
    !s.is_empty() && s.bytes().all(|b| b.is_ascii_alphanumeric() || b == b'_' || b == b'-')
}

pub(crate) fn same_set(a: &[String], b: &[String]) -> bool {
    a.len() == b.len() && a.iter().all(|x| b.contains(x))
}

impl PartialEq for UniversalWord {
    fn eq(&self, other: &Self) -> bool {
        self.lemma == other.lemma && self.restrictions == other.restrictions && self.instance_id == other.instance_id
    }
}

impl Eq for UniversalWord {}

impl Hash for UniversalWord {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.lemma.hash(state);
        self.restrictions.hash(state);
        self.instance_id.hash(state);
    }
}

impl fmt::Display for UniversalWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.lemma)?;
        if !self.restrictions.is_empty() {
            write!(f, "({})", restriction_signature(&self.restrictions))?;
        }
        for attr in &self.attributes {
            write!(f, ".@{attr}")?;
        }
        if let Some(id) = &self.instance_id {
            write!(f, ":{id}")?;
        }
        Ok(())
    }
}

/// One argument of a relation: a word, or a bare `:NN` naming a scope.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum NodeTerm {
    Word(UniversalWord),
    ScopeRef(DigitId),
}

impl NodeTerm {
    pub fn as_word(&self) -> Option<&UniversalWord> {
        match self {
            NodeTerm::Word(w) => Some(w),
            NodeTerm::ScopeRef(_) => None,
        }
    }

    pub fn identical(&self, other: &Self) -> bool {
        match (self, other) {
            (NodeTerm::Word(a), NodeTerm::Word(b)) => a.identical(b),
            (NodeTerm::ScopeRef(a), NodeTerm::ScopeRef(b)) => a == b,
            _ => false,
        }
    }
}

impl fmt::Display for NodeTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NodeTerm::Word(w) => w.fmt(f),
            NodeTerm::ScopeRef(id) => write!(f, ":{id}"),
        }
    }
}

/// One `label[:NN](source, target)` entry.
///
/// The source is always a word; a bare scope reference there is rejected
/// by the parser.
#[derive(Debug, Clone)]
pub struct RelationInstance {
    pub label: Label,
    pub scope_suffix: Option<DigitId>,
    pub source: UniversalWord,
    pub target: NodeTerm,
    /// First and last input line of the entry, 1-based.
    pub line_span: (usize, usize),
}

impl RelationInstance {
    pub fn new(label: Label, scope_suffix: Option<DigitId>, source: UniversalWord, target: NodeTerm) -> Self {
        RelationInstance {
            label,
            scope_suffix,
            source,
            target,
            line_span: (1, 1),
        }
    }

    /// Equal ignoring line spans, with attributes compared as sets.
    pub fn same_content(&self, other: &Self) -> bool {
        self.label == other.label
            && self.scope_suffix == other.scope_suffix
            && self.source.identical(&other.source)
            && self.target.identical(&other.target)
    }
}

impl PartialEq for RelationInstance {
    fn eq(&self, other: &Self) -> bool {
        self.same_content(other) && self.line_span == other.line_span
    }
}

impl Eq for RelationInstance {}

impl fmt::Display for RelationInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label.as_str())?;
        if let Some(id) = &self.scope_suffix {
            write!(f, ":{id}")?;
        }
        write!(f, "({}, {})", self.source, self.target)
    }
}

/// A parsed UNL block: its relations in input order plus any findings.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct UnlDocument {
    pub relations: Vec<RelationInstance>,
    pub had_delimiters: bool,
    pub diagnostics: Vec<Diagnostic>,
}

impl UnlDocument {
    /// Same fence flag and relation content; spans and diagnostics are ignored.
    pub fn same_content(&self, other: &Self) -> bool {
        self.had_delimiters == other.had_delimiters
            && self.relations.len() == other.relations.len()
            && self
                .relations
                .iter()
                .zip(&other.relations)
                .all(|(a, b)| a.same_content(b))
    }

    pub fn has_errors(&self) -> bool {
        self.diagnostics.iter().any(Diagnostic::is_error)
    }

    pub fn warnings(&self) -> impl Iterator<Item = &Diagnostic> {
        self.diagnostics.iter().filter(|d| !d.is_error())
    }

    /// Canonical text: one relation per line, fenced when the input was.
    pub fn to_unl(&self) -> String {
        let mut out = String::new();
        if self.had_delimiters {
            out.push_str("{unl}\n");
        }
        for rel in &self.relations {
            let _ = writeln!(out, "{rel}");
        }
        if self.had_delimiters {
            out.push_str("{/unl}\n");
        }
        out
    }

    /// Line on which relation `index` sits in [`to_unl`](Self::to_unl) output.
    pub fn canonical_line(&self, index: usize) -> usize {
        index + 1 + usize::from(self.had_delimiters)
    }
}
