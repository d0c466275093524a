//! Tokenizer for the surface language. `--` starts a comment running to the
//! end of the line.

use crate::diagnostics::Diagnostic;
use crate::surface::Span;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TokenKind {
    Ident(String),
    // Keywords.
    Type,
    Nat,
    Empty,
    Zero,
    Succ,
    Fst,
    Snd,
    Pair,
    Natrec,
    Id,
    Refl,
    Idrec,
    Exfalso,
    Def,
    // Punctuation.
    LParen,
    RParen,
    Colon,
    ColonEq,
    Comma,
    Dot,
    Arrow,
    DArrow,
    Stars,
    Backslash,
    Eof,
}

impl TokenKind {
    pub fn describe(&self) -> String {
        match self {
            TokenKind::Ident(name) => format!("identifier `{name}`"),
            TokenKind::Type => "`Type`".into(),
            TokenKind::Nat => "`Nat`".into(),
            TokenKind::Empty => "`Empty`".into(),
            TokenKind::Zero => "`zero`".into(),
            TokenKind::Succ => "`succ`".into(),
            TokenKind::Fst => "`fst`".into(),
            TokenKind::Snd => "`snd`".into(),
            TokenKind::Pair => "`pair`".into(),
            TokenKind::Natrec => "`natrec`".into(),
            TokenKind::Id => "`Id`".into(),
            TokenKind::Refl => "`refl`".into(),
            TokenKind::Idrec => "`idrec`".into(),
            TokenKind::Exfalso => "`exfalso`".into(),
            TokenKind::Def => "`def`".into(),
            TokenKind::LParen => "`(`".into(),
            TokenKind::RParen => "`)`".into(),
            TokenKind::Colon => "`:`".into(),
            TokenKind::ColonEq => "`:=`".into(),
            TokenKind::Comma => "`,`".into(),
            TokenKind::Dot => "`.`".into(),
            TokenKind::Arrow => "`->`".into(),
            TokenKind::DArrow => "`=>`".into(),
            TokenKind::Stars => "`**`".into(),
            TokenKind::Backslash => "`\\`".into(),
            TokenKind::Eof => "end of input".into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Token {
    pub kind: TokenKind,
    pub span: Span,
}

fn keyword(word: &str) -> Option<TokenKind> {
    Some(match word {
        "Type" => TokenKind::Type,
        "Nat" => TokenKind::Nat,
        "Empty" => TokenKind::Empty,
        "zero" => TokenKind::Zero,
        "succ" => TokenKind::Succ,
        "fst" => TokenKind::Fst,
        "snd" => TokenKind::Snd,
        "pair" => TokenKind::Pair,
        "natrec" => TokenKind::Natrec,
        "Id" => TokenKind::Id,
        "refl" => TokenKind::Refl,
        "idrec" => TokenKind::Idrec,
        "exfalso" => TokenKind::Exfalso,
        "def" => TokenKind::Def,
        _ => return None,
    })
}

pub fn is_keyword(word: &str) -> bool {
    keyword(word).is_some()
}

fn ident_start(c: char) -> bool {
    c.is_alphabetic() || c == '_'
}

fn ident_continue(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '\''
}

pub fn lex(text: &str) -> Result<Vec<Token>, Diagnostic> {
    let mut tokens = Vec::new();
    let bytes = text.char_indices().collect::<Vec<_>>();
    let mut i = 0;
    while i < bytes.len() {
        let (pos, c) = bytes[i];
        let next = bytes.get(i + 1).map(|&(_, c)| c);
        match c {
            _ if c.is_whitespace() => i += 1,
            '-' if next == Some('-') => {
                while i < bytes.len() && bytes[i].1 != '\n' {
                    i += 1;
                }
            }
            '-' if next == Some('>') => {
                tokens.push(Token {
                    kind: TokenKind::Arrow,
                    span: Span::new(pos, pos + 2),
                });
                i += 2;
            }
            '=' if next == Some('>') => {
                tokens.push(Token {
                    kind: TokenKind::DArrow,
                    span: Span::new(pos, pos + 2),
                });
                i += 2;
            }
            ':' if next == Some('=') => {
                tokens.push(Token {
                    kind: TokenKind::ColonEq,
                    span: Span::new(pos, pos + 2),
                });
                i += 2;
            }
            '*' if next == Some('*') => {
                tokens.push(Token {
                    kind: TokenKind::Stars,
                    span: Span::new(pos, pos + 2),
                });
                i += 2;
            }
            '(' | ')' | ':' | ',' | '.' | '\\' => {
                let kind = match c {
                    '(' => TokenKind::LParen,
                    ')' => TokenKind::RParen,
                    ':' => TokenKind::Colon,
                    ',' => TokenKind::Comma,
                    '.' => TokenKind::Dot,
                    _ => TokenKind::Backslash,
                };
                tokens.push(Token {
                    kind,
                    span: Span::new(pos, pos + c.len_utf8()),
                });
                i += 1;
            }
            _ if ident_start(c) => {
                let start = pos;
                let mut end = pos + c.len_utf8();
                i += 1;
                while i < bytes.len() && ident_continue(bytes[i].1) {
                    end = bytes[i].0 + bytes[i].1.len_utf8();
                    i += 1;
                }
                let word = &text[start..end];
                let kind = keyword(word).unwrap_or_else(|| TokenKind::Ident(word.to_string()));
                tokens.push(Token {
                    kind,
                    span: Span::new(start, end),
                });
            }
            _ => {
                return Err(Diagnostic::parse(
                    format!("unexpected character `{c}`"),
                    Span::new(pos, pos + c.len_utf8()),
                ));
            }
        }
    }
    let end = text.len();
    tokens.push(Token {
        kind: TokenKind::Eof,
        span: Span::new(end, end),
    });
    Ok(tokens)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kinds(text: &str) -> Vec<TokenKind> {
        lex(text).unwrap().into_iter().map(|t| t.kind).collect()
    }

    #[test]
    fn keywords_and_idents() {
        assert_eq!(
            kinds("zero succ x'"),
            vec![
                TokenKind::Zero,
                TokenKind::Succ,
                TokenKind::Ident("x'".into()),
                TokenKind::Eof
            ]
        );
    }

    #[test]
    fn compound_punctuation() {
        assert_eq!(
            kinds("-> => ** := : ."),
            vec![
                TokenKind::Arrow,
                TokenKind::DArrow,
                TokenKind::Stars,
                TokenKind::ColonEq,
                TokenKind::Colon,
                TokenKind::Dot,
                TokenKind::Eof
            ]
        );
    }

    #[test]
    fn comments_run_to_end_of_line() {
        assert_eq!(
            kinds("zero -- all of this is ignored -> :=\nsucc"),
            vec![TokenKind::Zero, TokenKind::Succ, TokenKind::Eof]
        );
    }

    #[test]
    fn rejects_stray_characters() {
        let err = lex("zero $ zero").unwrap_err();
        assert_eq!(err.span.start, 5);
    }
}
