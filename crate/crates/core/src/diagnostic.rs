//! Findings reported by the parser and linter.
//!
//! Every diagnostic carries one entry of the fixed [`Code`] table below.
//!
//! | code | severity | meaning |
//! |------|----------|---------|
//! | E000 | error    | input contains no relations |
//! | E001 | error    | unbalanced parentheses |
//! | E002 | error    | relation has more than two top-level arguments |
//! | E003 | error    | missing comma between the two arguments |
//! | E004 | error    | relation label is not ASCII lowercase letters |
//! | E005 | error    | stray text between relations |
//! | E006 | error    | relation source is a bare scope reference |
//! | E007 | error    | empty lemma |
//! | E008 | error    | `@` not preceded by `.` |
//! | E009 | error    | malformed restriction list |
//! | E010 | error    | malformed `:NN` id (must be 1-3 digits) |
//! | E011 | error    | unexpected token inside a term |
//! | E012 | error    | unterminated or nested `{unl}` fence |
//! | W001 | warning  | scope has no `@entry` node |
//! | W002 | warning  | scope has more than one `@entry` node |
//! | W003 | warning  | scope reference to a scope no relation defines |
//! | W004 | warning  | occurrences of one node disagree on attributes |
//! | W005 | warning  | duplicate attribute on a term (kept once) |

use alloc::string::String;
use core::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Severity {
    Error,
    Warning,
}

impl fmt::Display for Severity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Severity::Error => "error",
            Severity::Warning => "warning",
        })
    }
}

/// Stable diagnostic codes. Ordering follows the code string.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Code {
    E000,
    E001,
    E002,
    E003,
    E004,
    E005,
    E006,
    E007,
    E008,
    E009,
    E010,
    E011,
    E012,
    W001,
    W002,
    W003,
    W004,
    W005,
}

impl Code {
    pub const ALL: [Code; 18] = [
        Code::E000,
        Code::E001,
        Code::E002,
        Code::E003,
        Code::E004,
        Code::E005,
        Code::E006,
        Code::E007,
        Code::E008,
        Code::E009,
        Code::E010,
        Code::E011,
        Code::E012,
        Code::W001,
        Code::W002,
        Code::W003,
        Code::W004,
        Code::W005,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Code::E000 => "E000",
            Code::E001 => "E001",
            Code::E002 => "E002",
            Code::E003 => "E003",
            Code::E004 => "E004",
            Code::E005 => "E005",
            Code::E006 => "E006",
            Code::E007 => "E007",
            Code::E008 => "E008",
            Code::E009 => "E009",
            Code::E010 => "E010",
            Code::E011 => "E011",
            Code::E012 => "E012",
            Code::W001 => "W001",
            Code::W002 => "W002",
            Code::W003 => "W003",
            Code::W004 => "W004",
            Code::W005 => "W005",
        }
    }

    pub fn severity(self) -> Severity {
        match self {
            Code::W001 | Code::W002 | Code::W003 | Code::W004 | Code::W005 => Severity::Warning,
            _ => Severity::Error,
        }
    }

    /// Short summary from the code table.
    pub fn summary(self) -> &'static str {
        match self {
            Code::E000 => "input contains no relations",
            Code::E001 => "unbalanced parentheses",
            Code::E002 => "relation has more than two arguments",
            Code::E003 => "missing comma between arguments",
            Code::E004 => "invalid relation label",
            Code::E005 => "stray text between relations",
            Code::E006 => "relation source is a scope reference",
            Code::E007 => "empty lemma",
            Code::E008 => "`@` without preceding `.`",
            Code::E009 => "malformed restriction list",
            Code::E010 => "malformed id",
            Code::E011 => "unexpected token in term",
            Code::E012 => "unterminated or nested fence",
            Code::W001 => "scope has no entry node",
            Code::W002 => "scope has more than one entry node",
            Code::W003 => "reference to undefined scope",
            Code::W004 => "attribute mismatch between occurrences",
            Code::W005 => "duplicate attribute",
        }
    }
}

impl fmt::Display for Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A parse or lint finding. Lines are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Diagnostic {
    pub code: Code,
    pub message: String,
    pub line: usize,
}

impl Diagnostic {
    pub fn new(code: Code, line: usize, message: impl Into<String>) -> Self {
        Diagnostic {
            code,
            message: message.into(),
            line,
        }
    }

    pub fn severity(&self) -> Severity {
        self.code.severity()
    }

    pub fn is_error(&self) -> bool {
        self.severity() == Severity::Error
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}[{}] line {}: {}",
            self.severity(),
            self.code,
            self.line,
            self.message
        )
    }
}

/// Sorts diagnostics by line, then code. Stable, so equal keys keep emission order.
pub(crate) fn sort_diagnostics(diags: &mut [Diagnostic]) {
    diags.sort_by_key(|d| (d.line, d.code));
}
