//! Tokenizer for UNL text.
//!
//! Whitespace is skipped; every other byte of the input belongs to exactly
//! one token, so the tokens plus the whitespace between them reproduce the
//! input. Characters that start no other token become one-character
//! [`TokenKind::TextRun`] tokens and are rejected later by the parser.

use alloc::vec::Vec;

use crate::model::is_reserved;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TokenKind {
    Ident,
    LParen,
    RParen,
    Comma,
    /// `.@`
    DotAt,
    Colon,
    /// `>`
    Gt,
    /// `{unl}`
    FenceOpen,
    /// `{/unl}`
    FenceClose,
    TextRun,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Token<'a> {
    pub kind: TokenKind,
    pub text: &'a str,
    /// Byte offset of `text` in the input.
    pub offset: usize,
    /// 1-based line of the token's first byte.
    pub line: usize,
}

pub fn tokenize(input: &str) -> Vec<Token<'_>> {
    let mut tokens = Vec::new();
    let mut line = 1;
    let mut rest = input;
    let mut offset = 0;

    while let Some(c) = rest.chars().next() {
        if c.is_whitespace() {
            if c == '\n' {
                line += 1;
            }
            rest = &rest[c.len_utf8()..];
            offset += c.len_utf8();
            continue;
        }

        let (kind, len) = match c {
            '(' => (TokenKind::LParen, 1),
            ')' => (TokenKind::RParen, 1),
            ',' => (TokenKind::Comma, 1),
            ':' => (TokenKind::Colon, 1),
            '>' => (TokenKind::Gt, 1),
            '.' if rest.starts_with(".@") => (TokenKind::DotAt, 2),
            '{' if rest.starts_with("{unl}") => (TokenKind::FenceOpen, 5),
            '{' if rest.starts_with("{/unl}") => (TokenKind::FenceClose, 6),
            c if is_reserved(c) => (TokenKind::TextRun, c.len_utf8()),
            _ => (TokenKind::Ident, ident_len(rest)),
        };

        tokens.push(Token {
            kind,
            text: &rest[..len],
            offset,
            line,
        });
        rest = &rest[len..];
        offset += len;
    }
    tokens
}

fn ident_len(s: &str) -> usize {
    let mut len = 0;
    for (i, c) in s.char_indices() {
        if is_reserved(c) || (c == '.' && s[i..].starts_with(".@")) {
            break;
        }
        len = i + c.len_utf8();
    }
    len
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::String;
    use alloc::vec;
    use proptest::prelude::*;

    fn kinds(s: &str) -> Vec<TokenKind> {
        tokenize(s).into_iter().map(|t| t.kind).collect()
    }

    #[test]
    fn term_tokens() {
        use TokenKind::*;
        assert_eq!(
            kinds("affect(icl>do).@present.@entry:01"),
            vec![Ident, LParen, Ident, Gt, Ident, RParen, DotAt, Ident, DotAt, Ident, Colon, Ident]
        );
    }

    #[test]
    fn fences_and_lines() {
        let toks = tokenize("{unl}\nagt(a,\r\nb)\n{/unl}");
        assert_eq!(toks[0].kind, TokenKind::FenceOpen);
        assert_eq!(toks.last().unwrap().kind, TokenKind::FenceClose);
        assert_eq!(toks.last().unwrap().line, 4);
        let b = toks.iter().find(|t| t.text == "b").unwrap();
        assert_eq!(b.line, 3);
    }

    #[test]
    fn lone_at_and_braces_are_text_runs() {
        use TokenKind::*;
        assert_eq!(kinds("a @b {x}"), vec![Ident, TextRun, Ident, TextRun, Ident, TextRun]);
    }

    #[test]
    fn dots_inside_idents() {
        let toks = tokenize("U.S..@pl");
        assert_eq!(toks[0].text, "U.S.");
        assert_eq!(toks[1].kind, TokenKind::DotAt);
    }

    proptest! {
        #[test]
        fn tokens_plus_whitespace_reproduce_input(input in "\\PC*|[(),.@:>{}/unl a-z\n\r\t]*") {
            let toks = tokenize(&input);
            let mut rebuilt = String::new();
            let mut pos = 0;
            for t in &toks {
                let gap = &input[pos..t.offset];
                prop_assert!(gap.chars().all(char::is_whitespace));
                rebuilt.push_str(gap);
                rebuilt.push_str(t.text);
                prop_assert!(!t.text.is_empty());
                pos = t.offset + t.text.len();
            }
            let tail = &input[pos..];
            prop_assert!(tail.chars().all(char::is_whitespace));
            rebuilt.push_str(tail);
            prop_assert_eq!(rebuilt, input);
        }
    }
}
