//! Recursive-descent parser from UNL text to [`UnlDocument`].
//!
//! Entries are found by parenthesis balance, so a relation may be wrapped
//! over any number of lines. When `{unl}` … `{/unl}` fences are present only
//! the fenced text is read; anything outside them is ignored.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use thiserror::Error;

use crate::diagnostic::{sort_diagnostics, Code, Diagnostic};
use crate::lexer::{tokenize, Token, TokenKind};
use crate::lint::lint_document;
use crate::model::{
    is_attribute_name, DigitId, Label, NodeTerm, RelationInstance, Restriction, UniversalWord, UnlDocument,
};

/// A fatal parse failure. Always carries an error-severity code.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("error[{code}] line {line}: {message}")]
pub struct ParseError {
    pub code: Code,
    pub line: usize,
    pub message: String,
}

impl ParseError {
    fn new(code: Code, line: usize, message: impl Into<String>) -> Self {
        ParseError {
            code,
            line,
            message: message.into(),
        }
    }

    pub fn to_diagnostic(&self) -> Diagnostic {
        Diagnostic::new(self.code, self.line, self.message.clone())
    }
}

impl From<ParseError> for Diagnostic {
    fn from(e: ParseError) -> Self {
        Diagnostic::new(e.code, e.line, e.message)
    }
}

type Result<T> = core::result::Result<T, ParseError>;

/// Parses a whole UNL text.
///
/// The returned document's diagnostics hold parse warnings plus the
/// findings of [`lint_document`], ordered by line then code.
pub fn parse_document(text: &str) -> Result<UnlDocument> {
    let tokens = tokenize(text);
    let (regions, had_delimiters) = fence_regions(&tokens)?;

    let mut relations = Vec::new();
    let mut warnings = Vec::new();
    for region in regions {
        parse_entries(region, &mut relations, &mut warnings)?;
    }
    if relations.is_empty() {
        let line = tokens.first().map_or(1, |t| t.line);
        return Err(ParseError::new(Code::E000, line, "input contains no relations"));
    }

    let mut doc = UnlDocument {
        relations,
        had_delimiters,
        diagnostics: warnings,
    };
    let lints = lint_document(&doc);
    doc.diagnostics.extend(lints);
    sort_diagnostics(&mut doc.diagnostics);
    Ok(doc)
}

/// Parses exactly one relation entry, e.g. `agt(read(icl>do), John)`.
pub fn parse_relation_line(entry: &str) -> Result<RelationInstance> {
    let tokens = tokenize(entry);
    if let Some(t) = tokens
        .iter()
        .find(|t| matches!(t.kind, TokenKind::FenceOpen | TokenKind::FenceClose))
    {
        return Err(stray(t));
    }
    let mut relations = Vec::new();
    parse_entries(&tokens, &mut relations, &mut Vec::new())?;
    match relations.len() {
        0 => Err(ParseError::new(Code::E000, 1, "no relation found")),
        1 => Ok(relations.pop().unwrap()),
        _ => Err(ParseError::new(
            Code::E005,
            relations[1].line_span.0,
            "expected a single relation entry",
        )),
    }
}

/// Parses one relation argument: a Universal Word or a bare `:NN`.
pub fn parse_uw_term(text: &str) -> Result<NodeTerm> {
    let tokens = tokenize(text);
    parse_term(&tokens, 1, &mut Vec::new())
}

/// Parses the interior of a restriction parenthesis, e.g. `icl>move>do,plt>place`.
pub fn parse_restriction_list(text: &str) -> Result<Vec<Restriction>> {
    let tokens = tokenize(text);
    parse_restrictions(&tokens, 1)
}

fn stray(t: &Token<'_>) -> ParseError {
    ParseError::new(Code::E005, t.line, format!("stray text `{}` between relations", t.text))
}

/// Splits the token stream into the regions to parse.
fn fence_regions<'t, 'a>(tokens: &'t [Token<'a>]) -> Result<(Vec<&'t [Token<'a>]>, bool)> {
    let fenced = tokens
        .iter()
        .any(|t| matches!(t.kind, TokenKind::FenceOpen | TokenKind::FenceClose));
    if !fenced {
        return Ok((alloc::vec![tokens], false));
    }

    let mut regions = Vec::new();
    let mut open: Option<usize> = None;
    for (i, t) in tokens.iter().enumerate() {
        match (t.kind, open) {
            (TokenKind::FenceOpen, None) => open = Some(i),
            (TokenKind::FenceOpen, Some(_)) => {
                return Err(ParseError::new(Code::E012, t.line, "nested `{unl}` fence"));
            }
            (TokenKind::FenceClose, Some(start)) => {
                regions.push(&tokens[start + 1..i]);
                open = None;
            }
            (TokenKind::FenceClose, None) => {
                return Err(ParseError::new(Code::E005, t.line, "`{/unl}` without matching `{unl}`"));
            }
            _ => {}
        }
    }
    if let Some(start) = open {
        return Err(ParseError::new(
            Code::E012,
            tokens[start].line,
            "`{unl}` is never closed",
        ));
    }
    Ok((regions, true))
}

/// Index of the `)` matching the `(` at `open`, if any.
fn matching_paren(tokens: &[Token<'_>], open: usize) -> Option<usize> {
    let mut depth = 0usize;
    for (i, t) in tokens.iter().enumerate().skip(open) {
        match t.kind {
            TokenKind::LParen => depth += 1,
            TokenKind::RParen => {
                depth -= 1;
                if depth == 0 {
                    return Some(i);
                }
            }
            _ => {}
        }
    }
    None
}

fn parse_entries(tokens: &[Token<'_>], out: &mut Vec<RelationInstance>, warnings: &mut Vec<Diagnostic>) -> Result<()> {
    let mut i = 0;
    while i < tokens.len() {
        let head = &tokens[i];
        let next = tokens.get(i + 1).map(|t| t.kind);
        match head.kind {
            TokenKind::Ident if matches!(next, Some(TokenKind::LParen | TokenKind::Colon)) => {}
            TokenKind::RParen => return Err(ParseError::new(Code::E001, head.line, "unmatched `)`")),
            _ => return Err(stray(head)),
        }

        let label = Label::new(head.text).map_err(|_| {
            ParseError::new(
                Code::E004,
                head.line,
                format!("relation label `{}` must be lowercase ASCII letters", head.text),
            )
        })?;
        i += 1;

        let mut scope_suffix = None;
        if tokens[i].kind == TokenKind::Colon {
            let (id, consumed) = digit_id_after_colon(&tokens[i..], tokens[i].line)?;
            scope_suffix = Some(id);
            i += consumed;
        }

        let open = match tokens.get(i) {
            Some(t) if t.kind == TokenKind::LParen => i,
            Some(t) => return Err(stray(t)),
            None => {
                return Err(ParseError::new(
                    Code::E005,
                    head.line,
                    "relation label without arguments",
                ));
            }
        };
        let close = matching_paren(tokens, open).ok_or_else(|| {
            ParseError::new(
                Code::E001,
                tokens[open].line,
                format!("unbalanced parentheses: `(` of `{label}` is never closed"),
            )
        })?;

        let (source, target) = parse_arguments(&tokens[open + 1..close], head.line, &label, warnings)?;
        let mut rel = RelationInstance::new(label, scope_suffix, source, target);
        rel.line_span = (head.line, tokens[close].line);
        out.push(rel);
        i = close + 1;
    }
    Ok(())
}

fn digit_id_after_colon(tokens: &[Token<'_>], line: usize) -> Result<(DigitId, usize)> {
    match tokens.get(1) {
        Some(t) if t.kind == TokenKind::Ident => DigitId::new(t.text)
            .map(|id| (id, 2))
            .map_err(|_| ParseError::new(Code::E010, t.line, format!("`:{}` is not a 1-3 digit id", t.text))),
        _ => Err(ParseError::new(
            Code::E010,
            line,
            "`:` must be followed by a 1-3 digit id",
        )),
    }
}

fn parse_arguments(
    inner: &[Token<'_>],
    line: usize,
    label: &Label,
    warnings: &mut Vec<Diagnostic>,
) -> Result<(UniversalWord, NodeTerm)> {
    let mut args: Vec<&[Token<'_>]> = Vec::new();
    let mut depth = 0usize;
    let mut start = 0;
    for (i, t) in inner.iter().enumerate() {
        match t.kind {
            TokenKind::LParen => depth += 1,
            TokenKind::RParen => depth -= 1,
            TokenKind::Comma if depth == 0 => {
                args.push(&inner[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    args.push(&inner[start..]);

    match args.len() {
        1 if inner.is_empty() => {
            return Err(ParseError::new(Code::E002, line, format!("`{label}` has no arguments")));
        }
        1 => {
            return Err(ParseError::new(
                Code::E003,
                line,
                format!("missing comma between the two arguments of `{label}`"),
            ));
        }
        2 => {}
        n => {
            return Err(ParseError::new(
                Code::E002,
                line,
                format!("`{label}` takes exactly 2 arguments, found {n}"),
            ));
        }
    }

    let source = match parse_term(args[0], line, warnings)? {
        NodeTerm::Word(w) => w,
        NodeTerm::ScopeRef(id) => {
            return Err(ParseError::new(
                Code::E006,
                args[0][0].line,
                format!("source of `{label}` is the bare scope reference `:{id}`"),
            ));
        }
    };
    let target = parse_term(args[1], args[0].last().map_or(line, |t| t.line), warnings)?;
    Ok((source, target))
}

/// `fallback_line` locates errors on an empty token slice.
fn parse_term(tokens: &[Token<'_>], fallback_line: usize, warnings: &mut Vec<Diagnostic>) -> Result<NodeTerm> {
    let Some(first) = tokens.first() else {
        return Err(ParseError::new(Code::E007, fallback_line, "empty argument"));
    };

    if first.kind == TokenKind::Colon {
        let (id, consumed) = digit_id_after_colon(tokens, first.line)?;
        if let Some(extra) = tokens.get(consumed) {
            return Err(unexpected(extra, "after scope reference"));
        }
        return Ok(NodeTerm::ScopeRef(id));
    }

    let lemma_len = tokens.iter().take_while(|t| t.kind == TokenKind::Ident).count();
    if lemma_len == 0 {
        if first.text == "@" {
            return Err(ParseError::new(Code::E008, first.line, "`@` without preceding `.`"));
        }
        return Err(ParseError::new(Code::E007, first.line, "term has no lemma"));
    }
    let lemma = join_words(&tokens[..lemma_len]);
    let mut i = lemma_len;

    let mut restrictions = Vec::new();
    if tokens.get(i).map(|t| t.kind) == Some(TokenKind::LParen) {
        let close = matching_paren(tokens, i)
            .ok_or_else(|| ParseError::new(Code::E001, tokens[i].line, "unbalanced parentheses"))?;
        restrictions = parse_restrictions(&tokens[i + 1..close], tokens[i].line)?;
        i = close + 1;
    }

    let mut instance_id = None;
    if tokens.get(i).map(|t| t.kind) == Some(TokenKind::Colon) {
        let (id, consumed) = digit_id_after_colon(&tokens[i..], tokens[i].line)?;
        instance_id = Some(id);
        i += consumed;
    }

    let mut attributes: Vec<String> = Vec::new();
    while let Some(t) = tokens.get(i) {
        match t.kind {
            TokenKind::DotAt => {
                let name = match tokens.get(i + 1) {
                    Some(n) if n.kind == TokenKind::Ident && is_attribute_name(n.text) => n.text,
                    Some(n) => return Err(unexpected(n, "after `.@`")),
                    None => return Err(ParseError::new(Code::E011, t.line, "`.@` without attribute name")),
                };
                if attributes.iter().any(|a| a == name) {
                    warnings.push(Diagnostic::new(
                        Code::W005,
                        t.line,
                        format!("duplicate attribute `@{name}` on `{lemma}` kept once"),
                    ));
                } else {
                    attributes.push(String::from(name));
                }
                i += 2;
            }
            TokenKind::TextRun if t.text == "@" => {
                return Err(ParseError::new(Code::E008, t.line, "`@` without preceding `.`"));
            }
            _ => break,
        }
    }

    if tokens.get(i).map(|t| t.kind) == Some(TokenKind::Colon) {
        if instance_id.is_some() {
            return Err(ParseError::new(
                Code::E010,
                tokens[i].line,
                format!("`{lemma}` has two instance ids"),
            ));
        }
        let (id, consumed) = digit_id_after_colon(&tokens[i..], tokens[i].line)?;
        instance_id = Some(id);
        i += consumed;
    }

    if let Some(extra) = tokens.get(i) {
        if extra.text == "@" {
            return Err(ParseError::new(Code::E008, extra.line, "`@` without preceding `.`"));
        }
        return Err(unexpected(extra, "in term"));
    }

    UniversalWord::new(lemma, restrictions, attributes, instance_id)
        .map(NodeTerm::Word)
        .map_err(|e| ParseError::new(Code::E011, first.line, format!("{e}")))
}

fn unexpected(t: &Token<'_>, context: &str) -> ParseError {
    ParseError::new(Code::E011, t.line, format!("unexpected `{}` {context}", t.text))
}

fn join_words(tokens: &[Token<'_>]) -> String {
    let mut out = String::new();
    for (i, t) in tokens.iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        out.push_str(t.text);
    }
    out
}

fn parse_restrictions(tokens: &[Token<'_>], line: usize) -> Result<Vec<Restriction>> {
    if tokens.is_empty() {
        return Err(ParseError::new(Code::E009, line, "empty restriction list `()`"));
    }
    tokens
        .split(|t| t.kind == TokenKind::Comma)
        .map(|item| parse_restriction(item, line))
        .collect()
}

fn parse_restriction(item: &[Token<'_>], line: usize) -> Result<Restriction> {
    let err = |line: usize, msg: String| ParseError::new(Code::E009, line, msg);
    let Some(tag_tok) = item.first() else {
        return Err(err(line, String::from("empty restriction")));
    };
    if let Some(bad) = item
        .iter()
        .find(|t| !matches!(t.kind, TokenKind::Ident | TokenKind::Gt))
    {
        return Err(err(bad.line, format!("unexpected `{}` in restriction", bad.text)));
    }
    if !item.iter().any(|t| t.kind == TokenKind::Gt) {
        return Err(err(
            tag_tok.line,
            format!("restriction `{}` has no `>`", join_words(item)),
        ));
    }
    if tag_tok.kind != TokenKind::Ident || item.get(1).map(|t| t.kind) != Some(TokenKind::Gt) {
        return Err(err(tag_tok.line, String::from("restriction must start with `tag>`")));
    }
    let tag = Label::new(tag_tok.text).map_err(|_| {
        err(
            tag_tok.line,
            format!("restriction tag `{}` must be lowercase letters", tag_tok.text),
        )
    })?;

    let mut chain = Vec::new();
    for element in item[2..].split(|t| t.kind == TokenKind::Gt) {
        if element.is_empty() {
            return Err(err(tag_tok.line, format!("empty term in `{tag}` restriction chain")));
        }
        chain.push(join_words(element));
    }
    Restriction::new(tag, chain).map_err(|e| err(tag_tok.line, format!("{e}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn word(t: &NodeTerm) -> &UniversalWord {
        t.as_word().expect("word")
    }

    fn attrs(w: &UniversalWord) -> Vec<&str> {
        w.attributes().iter().map(String::as_str).collect()
    }

    #[test]
    fn relation_read_john() {
        let r = parse_relation_line("agt(read(icl>do).@entry.@present.@progress, John(iof>person))").unwrap();
        assert_eq!(r.label.as_str(), "agt");
        assert!(r.scope_suffix.is_none());
        assert_eq!(r.source.lemma(), "read");
        assert_eq!(r.source.restrictions().len(), 1);
        assert_eq!(r.source.restrictions()[0].to_string(), "icl>do");
        assert_eq!(attrs(&r.source), ["entry", "present", "progress"]);
        let john = word(&r.target);
        assert_eq!(john.lemma(), "John");
        assert_eq!(john.restrictions()[0].to_string(), "iof>person");
        assert!(john.attributes().is_empty());
    }

    #[test]
    fn relation_with_scope_suffix() {
        let r = parse_relation_line(
            "obj:01(attend(icl>go_to>do,agt>person,obj>place).@entry, conference(icl>meeting>thing).@indef)",
        )
        .unwrap();
        assert_eq!(r.label.as_str(), "obj");
        assert_eq!(r.scope_suffix.as_ref().unwrap().as_str(), "01");
        assert_eq!(r.source.lemma(), "attend");
        assert_eq!(r.source.restrictions().len(), 3);
        let conf = word(&r.target);
        assert_eq!(conf.lemma(), "conference");
        assert_eq!(attrs(conf), ["indef"]);
    }

    #[test]
    fn relation_with_scope_target() {
        let r = parse_relation_line("pur(go(icl>move>do,plt>place,plf>place,agt>thing).@entry.@past, :01)").unwrap();
        assert_eq!(r.label.as_str(), "pur");
        assert_eq!(r.target, NodeTerm::ScopeRef(DigitId::new("01").unwrap()));
    }

    #[test]
    fn missing_comma() {
        let e = parse_relation_line("agt(read(icl>do) John)").unwrap_err();
        assert_eq!(e.code, Code::E003);
    }

    #[test]
    fn too_many_or_no_arguments() {
        assert_eq!(parse_relation_line("agt(a, b, c)").unwrap_err().code, Code::E002);
        assert_eq!(parse_relation_line("agt()").unwrap_err().code, Code::E002);
    }

    #[test]
    fn uppercase_label() {
        assert_eq!(parse_relation_line("Agt(a, b)").unwrap_err().code, Code::E004);
        assert_eq!(parse_relation_line("ag1(a, b)").unwrap_err().code, Code::E004);
    }

    #[test]
    fn scope_ref_source_is_rejected() {
        assert_eq!(parse_relation_line("agt(:01, b)").unwrap_err().code, Code::E006);
    }

    #[test]
    fn whitespace_is_normalized_outside_lemmas() {
        let a = parse_relation_line("agt(read(icl>do).@entry, John(iof>person))").unwrap();
        let b = parse_relation_line("agt (\n  read ( icl > do )\n  .@entry ,\n John(iof>\nperson) )").unwrap();
        assert!(a.same_content(&b));
    }

    #[test]
    fn term_with_spaced_restriction() {
        let w = parse_uw_term("environment(icl>abstract thing).@pl").unwrap();
        let w = word(&w);
        assert_eq!(w.lemma(), "environment");
        assert_eq!(w.restrictions()[0].tag().as_str(), "icl");
        assert_eq!(w.restrictions()[0].chain(), ["abstract thing"]);
        assert_eq!(attrs(w), ["pl"]);
    }

    #[test]
    fn term_with_trailing_instance_id() {
        let t = parse_uw_term("affect(icl>do).@present.@entry:01").unwrap();
        let w = word(&t);
        assert_eq!(w.lemma(), "affect");
        assert_eq!(attrs(w), ["present", "entry"]);
        assert_eq!(w.instance_id().unwrap().as_str(), "01");
    }

    #[test]
    fn instance_id_positions_normalize() {
        let a = parse_uw_term("book(icl>thing):01.@def").unwrap();
        let b = parse_uw_term("book(icl>thing).@def:01").unwrap();
        assert!(a.identical(&b));
        assert_eq!(parse_uw_term("book:01.@def:02").unwrap_err().code, Code::E010);
    }

    #[test]
    fn bare_scope_ref() {
        assert_eq!(
            parse_uw_term(":01").unwrap(),
            NodeTerm::ScopeRef(DigitId::new("01").unwrap())
        );
        assert_eq!(parse_uw_term(":1234").unwrap_err().code, Code::E010);
        assert_eq!(parse_uw_term(":ab").unwrap_err().code, Code::E010);
    }

    #[test]
    fn simple_term() {
        let t = parse_uw_term("i(icl>person)").unwrap();
        let w = word(&t);
        assert_eq!(w.lemma(), "i");
        assert_eq!(w.restrictions()[0].to_string(), "icl>person");
        assert!(w.attributes().is_empty());
        assert!(w.instance_id().is_none());
    }

    #[test]
    fn term_errors() {
        assert_eq!(parse_uw_term("").unwrap_err().code, Code::E007);
        assert_eq!(parse_uw_term("(icl>do)").unwrap_err().code, Code::E007);
        assert_eq!(parse_uw_term("read(icl>do) @entry").unwrap_err().code, Code::E008);
        assert_eq!(parse_uw_term("read @entry").unwrap_err().code, Code::E008);
        assert_eq!(parse_uw_term("read.@").unwrap_err().code, Code::E011);
        assert_eq!(parse_uw_term("read(icl>do) extra").unwrap_err().code, Code::E011);
    }

    #[test]
    fn duplicate_attribute_is_a_warning() {
        let doc = parse_document("agt(run(icl>do).@entry.@past.@past, dog(icl>animal))").unwrap();
        let w = doc.relations[0].source.attributes();
        assert_eq!(w, ["entry", "past"]);
        assert!(doc.diagnostics.iter().any(|d| d.code == Code::W005));
        assert!(!doc.has_errors());
    }

    #[test]
    fn restriction_lists() {
        let rs = parse_restriction_list("icl>move>do,plt>place,plf>place,agt>thing").unwrap();
        assert_eq!(rs.len(), 4);
        assert_eq!(rs[0].tag().as_str(), "icl");
        assert_eq!(rs[0].chain(), ["move", "do"]);

        let rs = parse_restriction_list("icl>heavier-than-air_craft>thing,equ>airplane").unwrap();
        assert_eq!(rs.len(), 2);
        assert_eq!(rs[0].chain(), ["heavier-than-air_craft", "thing"]);
        assert_eq!(rs[1].chain(), ["airplane"]);

        let rs = parse_restriction_list("iof>person").unwrap();
        assert_eq!(rs.len(), 1);
        assert_eq!(rs[0].tag().as_str(), "iof");
        assert_eq!(rs[0].chain(), ["person"]);
    }

    #[test]
    fn restriction_errors() {
        assert_eq!(parse_restriction_list("icl").unwrap_err().code, Code::E009);
        assert_eq!(parse_restriction_list("icl>>do").unwrap_err().code, Code::E009);
        assert_eq!(parse_restriction_list("icl>do>").unwrap_err().code, Code::E009);
        assert_eq!(parse_restriction_list("").unwrap_err().code, Code::E009);
        assert_eq!(parse_restriction_list("icl>do,").unwrap_err().code, Code::E009);
        assert_eq!(parse_restriction_list("ICL>do").unwrap_err().code, Code::E009);
        assert_eq!(parse_restriction_list("icl>(do)").unwrap_err().code, Code::E009);
        assert_eq!(parse_uw_term("x()").unwrap_err().code, Code::E009);
    }

    #[test]
    fn empty_input() {
        assert_eq!(parse_document("").unwrap_err().code, Code::E000);
        assert_eq!(parse_document("  \n ").unwrap_err().code, Code::E000);
        assert_eq!(parse_document("{unl}\n{/unl}").unwrap_err().code, Code::E000);
    }

    #[test]
    fn unbalanced_parenthesis_names_line() {
        let e = parse_document("agt(read(icl>do)").unwrap_err();
        assert_eq!(e.code, Code::E001);
        assert_eq!(e.line, 1);
        let e = parse_document("agt(a, b))").unwrap_err();
        assert_eq!(e.code, Code::E001);
    }

    #[test]
    fn stray_text_between_relations() {
        let e = parse_document("agt(a, b)\nhello\nobj(a, c)").unwrap_err();
        assert_eq!(e.code, Code::E005);
        assert_eq!(e.line, 2);
    }

    #[test]
    fn fences() {
        let doc = parse_document("prose here\n{unl}\nagt(a.@entry, b)\n{/unl}\ntrailing").unwrap();
        assert!(doc.had_delimiters);
        assert_eq!(doc.relations.len(), 1);
        assert_eq!(doc.relations[0].line_span, (3, 3));
        assert_eq!(parse_document("{unl}\nagt(a, b)").unwrap_err().code, Code::E012);
        assert_eq!(
            parse_document("{unl}{unl}agt(a, b){/unl}").unwrap_err().code,
            Code::E012
        );
        assert_eq!(parse_document("agt(a, b){/unl}").unwrap_err().code, Code::E005);
    }

    #[test]
    fn crlf_input() {
        let doc = parse_document("{unl}\r\nagt(a.@entry,\r\nb)\r\n{/unl}\r\n").unwrap();
        assert_eq!(doc.relations[0].line_span, (2, 3));
    }

    #[test]
    fn canonical_round_trip() {
        let text = "{unl}\nobj:01(x(icl>y z>w).@entry:02, :03)\nagt(a, b)\n{/unl}\n";
        let doc = parse_document(text).unwrap();
        assert_eq!(doc.to_unl(), text);
        let back = parse_document(&doc.to_unl()).unwrap();
        assert_eq!(back, doc);
    }
}
