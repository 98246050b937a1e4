//! Recursive-descent parser over the token stream.

use super::lexer::{lex, Tok, Token};
use super::{make_bare, make_leaf, BinOp, PosetExpr};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Arg {
    Int(u64),
    Expr(PosetExpr),
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    end_line: usize,
    end_col: usize,
}

pub fn parse(text: &str) -> Result<PosetExpr> {
    let tokens = lex(text)?;
    let end_line = text.lines().count().max(1);
    let end_col = text.lines().last().map_or(1, |l| l.chars().count() + 1);
    let mut p = Parser { tokens, pos: 0, end_line, end_col };
    let expr = p.sum()?;
    if let Some(t) = p.peek() {
        return Err(p.unexpected(&t, "end of input"));
    }
    Ok(expr)
}

impl Parser {
    fn peek(&self) -> Option<Token> {
        self.tokens.get(self.pos).cloned()
    }

    fn advance(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn unexpected(&self, tok: &Token, wanted: &str) -> Error {
        Error::Syntax {
            line: tok.line,
            col: tok.col,
            msg: format!("expected {wanted}, found {:?}", tok.tok),
        }
    }

    fn eof(&self, wanted: &str) -> Error {
        Error::Syntax {
            line: self.end_line,
            col: self.end_col,
            msg: format!("expected {wanted}, found end of input"),
        }
    }

    fn expect(&mut self, tok: Tok, wanted: &str) -> Result<Token> {
        match self.advance() {
            Some(t) if t.tok == tok => Ok(t),
            Some(t) => Err(self.unexpected(&t, wanted)),
            None => Err(self.eof(wanted)),
        }
    }

    fn expect_int(&mut self, wanted: &str) -> Result<u64> {
        match self.advance() {
            Some(Token { tok: Tok::Int(v), .. }) => Ok(v),
            Some(t) => Err(self.unexpected(&t, wanted)),
            None => Err(self.eof(wanted)),
        }
    }

    /// sum := prod { ("+" | "oplus" | "glue") prod }
    fn sum(&mut self) -> Result<PosetExpr> {
        let mut acc = self.prod()?;
        loop {
            let op = match self.peek() {
                Some(Token { tok: Tok::Plus, .. }) => BinOp::DirectSum,
                Some(Token { tok: Tok::Ident(ref n), .. }) if n == "oplus" => BinOp::OrdinalSum,
                Some(Token { tok: Tok::Ident(ref n), .. }) if n == "glue" => BinOp::Glue,
                _ => break,
            };
            self.advance();
            let rhs = self.prod()?;
            acc = PosetExpr::binary(op, acc, rhs);
        }
        Ok(acc)
    }

    /// prod := atom { ("*" | "otimes") atom }
    fn prod(&mut self) -> Result<PosetExpr> {
        let mut acc = self.atom()?;
        loop {
            let op = match self.peek() {
                Some(Token { tok: Tok::Star, .. }) => BinOp::DirectProduct,
                Some(Token { tok: Tok::Ident(ref n), .. }) if n == "otimes" => {
                    BinOp::OrdinalProduct
                }
                _ => break,
            };
            self.advance();
            let rhs = self.atom()?;
            acc = PosetExpr::binary(op, acc, rhs);
        }
        Ok(acc)
    }

    /// atom := call | literal | "(" expr ")"
    fn atom(&mut self) -> Result<PosetExpr> {
        match self.advance() {
            Some(Token { tok: Tok::LParen, .. }) => {
                let inner = self.sum()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(inner)
            }
            Some(Token { tok: Tok::Ident(name), .. }) if name == "poset" => self.literal(),
            Some(Token { tok: Tok::Ident(name), .. }) => {
                if matches!(self.peek(), Some(Token { tok: Tok::LParen, .. })) {
                    self.advance();
                    let args = self.args()?;
                    self.expect(Tok::RParen, "')'")?;
                    make_leaf(&name, args)
                } else {
                    make_bare(&name)
                }
            }
            Some(t) => Err(self.unexpected(&t, "an expression")),
            None => Err(self.eof("an expression")),
        }
    }

    /// args := (INT | expr) { "," (INT | expr) }
    fn args(&mut self) -> Result<Vec<Arg>> {
        let mut out = Vec::new();
        loop {
            match self.peek() {
                Some(Token { tok: Tok::Int(v), .. }) => {
                    self.advance();
                    out.push(Arg::Int(v));
                }
                Some(_) => out.push(Arg::Expr(self.sum()?)),
                None => return Err(self.eof("an argument")),
            }
            match self.peek() {
                Some(Token { tok: Tok::Comma, .. }) => {
                    self.advance();
                }
                _ => break,
            }
        }
        Ok(out)
    }

    /// literal := "poset" "{" "n=" INT ";" { INT "<" INT ";" } "}"
    /// (the final semicolon before "}" may be omitted)
    fn literal(&mut self) -> Result<PosetExpr> {
        self.expect(Tok::LBrace, "'{'")?;
        match self.advance() {
            Some(Token { tok: Tok::Ident(n), .. }) if n == "n" => {}
            Some(t) => return Err(self.unexpected(&t, "'n='")),
            None => return Err(self.eof("'n='")),
        }
        self.expect(Tok::Equals, "'='")?;
        let n = self.expect_int("poset size")? as usize;
        self.expect(Tok::Semi, "';'")?;
        let mut covers = Vec::new();
        loop {
            match self.advance() {
                Some(Token { tok: Tok::RBrace, .. }) => break,
                Some(Token { tok: Tok::Int(a), .. }) => {
                    self.expect(Tok::Less, "'<'")?;
                    let b = self.expect_int("cover upper element")?;
                    covers.push((a as usize, b as usize));
                    match self.advance() {
                        Some(Token { tok: Tok::Semi, .. }) => {}
                        Some(Token { tok: Tok::RBrace, .. }) => break,
                        Some(t) => return Err(self.unexpected(&t, "';' or '}'")),
                        None => return Err(self.eof("';' or '}'")),
                    }
                }
                Some(t) => return Err(self.unexpected(&t, "a cover or '}'")),
                None => return Err(self.eof("a cover or '}'")),
            }
        }
        Ok(PosetExpr::Literal { n, covers })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trailing_tokens_rejected() {
        assert!(matches!(parse("v v"), Err(Error::Syntax { .. })));
        assert!(matches!(parse("v)"), Err(Error::Syntax { .. })));
    }

    #[test]
    fn nested_calls() {
        let e = parse("pow_oplus(I(1) oplus (I(1)+I(1)), 2)").unwrap();
        assert!(matches!(e, PosetExpr::Power { k: 2, .. }));
    }
}
