//! Tokenizer for the poset expression language. ASCII-only input; every
//! token carries its line and column for error reporting.

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Tok {
    Ident(String),
    Int(u64),
    Plus,
    Star,
    LParen,
    RParen,
    LBrace,
    RBrace,
    Comma,
    Semi,
    Less,
    Equals,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub tok: Tok,
    pub line: usize,
    pub col: usize,
}

pub fn lex(text: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let mut line = 1usize;
    let mut col = 1usize;
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        let (tline, tcol) = (line, col);
        let mut advance = |chars: &mut std::iter::Peekable<std::str::Chars>| {
            let c = chars.next().unwrap();
            if c == '\n' {
                line += 1;
                col = 1;
            } else {
                col += 1;
            }
            c
        };
        if c.is_whitespace() {
            advance(&mut chars);
            continue;
        }
        if c.is_ascii_digit() {
            let mut value: u64 = 0;
            while chars.peek().is_some_and(|c| c.is_ascii_digit()) {
                let d = advance(&mut chars) as u64 - '0' as u64;
                value = value
                    .checked_mul(10)
                    .and_then(|v| v.checked_add(d))
                    .ok_or_else(|| Error::Lex {
                        line: tline,
                        col: tcol,
                        msg: "integer literal too large".into(),
                    })?;
            }
            out.push(Token { tok: Tok::Int(value), line: tline, col: tcol });
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let mut name = String::new();
            while chars
                .peek()
                .is_some_and(|c| c.is_ascii_alphanumeric() || *c == '_')
            {
                name.push(advance(&mut chars));
            }
            out.push(Token { tok: Tok::Ident(name), line: tline, col: tcol });
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '*' => Tok::Star,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '{' => Tok::LBrace,
            '}' => Tok::RBrace,
            ',' => Tok::Comma,
            ';' => Tok::Semi,
            '<' => Tok::Less,
            '=' => Tok::Equals,
            other => {
                return Err(Error::Lex {
                    line: tline,
                    col: tcol,
                    msg: format!("unexpected character '{other}'"),
                })
            }
        };
        advance(&mut chars);
        out.push(Token { tok, line: tline, col: tcol });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_tokens() {
        let toks = lex("chain(3) oplus v").unwrap();
        assert_eq!(toks.len(), 6);
        assert_eq!(toks[0].tok, Tok::Ident("chain".into()));
        assert_eq!(toks[1].tok, Tok::LParen);
        assert_eq!(toks[2].tok, Tok::Int(3));
        assert_eq!(toks[4].tok, Tok::Ident("oplus".into()));
    }

    #[test]
    fn positions() {
        let toks = lex("a\n  b").unwrap();
        assert_eq!((toks[0].line, toks[0].col), (1, 1));
        assert_eq!((toks[1].line, toks[1].col), (2, 3));
    }

    #[test]
    fn bad_character() {
        let err = lex("chain(3) $ v").unwrap_err();
        assert!(matches!(err, Error::Lex { col: 10, .. }));
    }
}
