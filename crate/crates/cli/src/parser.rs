//! Recursive-descent parser for the surface grammar.
//!
//! Precedence: application binds tightest and associates left; `->` and `**`
//! associate right; `A -> B` sugars to a function type with an unused binder.
//! The prefix keywords `succ`, `fst`, `snd`, `Id` and `refl` take atomic
//! arguments; the parenthesized keyword forms (`pair`, `natrec`, `idrec`,
//! `exfalso`) are self-delimiting atoms.

use crate::diagnostics::Diagnostic;
use crate::lexer::{lex, Token, TokenKind};
use crate::surface::{Definition, Span, SurfaceKind, SurfaceTerm};

pub fn parse_term(text: &str) -> Result<SurfaceTerm, Diagnostic> {
    let mut p = Parser::new(lex(text)?);
    let t = p.term()?;
    p.expect_eof()?;
    Ok(t)
}

pub fn parse_file(text: &str) -> Result<Vec<Definition>, Diagnostic> {
    let mut p = Parser::new(lex(text)?);
    let mut defs = Vec::new();
    while !p.at(&TokenKind::Eof) {
        defs.push(p.definition()?);
    }
    Ok(defs)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn new(tokens: Vec<Token>) -> Parser {
        Parser { tokens, pos: 0 }
    }

    fn peek(&self) -> &Token {
        &self.tokens[self.pos.min(self.tokens.len() - 1)]
    }

    fn peek_kind(&self, ahead: usize) -> &TokenKind {
        let i = (self.pos + ahead).min(self.tokens.len() - 1);
        &self.tokens[i].kind
    }

    fn at(&self, kind: &TokenKind) -> bool {
        &self.peek().kind == kind
    }

    fn advance(&mut self) -> Token {
        let t = self.peek().clone();
        if self.pos < self.tokens.len() - 1 {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, kind: TokenKind) -> Result<Token, Diagnostic> {
        if self.at(&kind) {
            Ok(self.advance())
        } else {
            let found = self.peek();
            Err(Diagnostic::parse(
                format!("expected {}, found {}", kind.describe(), found.kind.describe()),
                found.span,
            ))
        }
    }

    fn expect_eof(&mut self) -> Result<(), Diagnostic> {
        if self.at(&TokenKind::Eof) {
            Ok(())
        } else {
            let found = self.peek();
            Err(Diagnostic::parse(
                format!("expected end of input, found {}", found.kind.describe()),
                found.span,
            ))
        }
    }

    fn ident(&mut self) -> Result<(String, Span), Diagnostic> {
        match &self.peek().kind {
            TokenKind::Ident(_) => {
                let t = self.advance();
                let TokenKind::Ident(name) = t.kind else { unreachable!() };
                Ok((name, t.span))
            }
            other => Err(Diagnostic::parse(
                format!("expected an identifier, found {}", other.describe()),
                self.peek().span,
            )),
        }
    }

    fn definition(&mut self) -> Result<Definition, Diagnostic> {
        self.expect(TokenKind::Def)?;
        let (name, name_span) = self.ident()?;
        self.expect(TokenKind::Colon)?;
        let ty = self.term()?;
        self.expect(TokenKind::ColonEq)?;
        let body = self.term()?;
        Ok(Definition {
            name,
            name_span,
            ty,
            body,
        })
    }

    fn term(&mut self) -> Result<SurfaceTerm, Diagnostic> {
        if self.at(&TokenKind::Backslash) {
            return self.lambda();
        }
        if self.at_binder_group() {
            return self.quantifier();
        }
        let lhs = self.operand()?;
        if self.at(&TokenKind::Arrow) {
            self.advance();
            let rhs = self.term()?;
            let span = lhs.span.join(rhs.span);
            return Ok(SurfaceTerm::new(
                SurfaceKind::Pi {
                    name: "_".to_string(),
                    dom: Box::new(lhs),
                    cod: Box::new(rhs),
                },
                span,
            ));
        }
        Ok(lhs)
    }

    /// `(` ident `:` opens a Pi or Sigma binder group.
    fn at_binder_group(&self) -> bool {
        self.peek_kind(0) == &TokenKind::LParen
            && matches!(self.peek_kind(1), TokenKind::Ident(_))
            && self.peek_kind(2) == &TokenKind::Colon
    }

    fn lambda(&mut self) -> Result<SurfaceTerm, Diagnostic> {
        let start = self.expect(TokenKind::Backslash)?.span;
        self.expect(TokenKind::LParen)?;
        let (name, _) = self.ident()?;
        self.expect(TokenKind::Colon)?;
        let dom = self.term()?;
        self.expect(TokenKind::RParen)?;
        self.expect(TokenKind::DArrow)?;
        let body = self.term()?;
        let span = start.join(body.span);
        Ok(SurfaceTerm::new(
            SurfaceKind::Lam {
                name,
                dom: Box::new(dom),
                body: Box::new(body),
            },
            span,
        ))
    }

    fn quantifier(&mut self) -> Result<SurfaceTerm, Diagnostic> {
        let start = self.expect(TokenKind::LParen)?.span;
        let (name, _) = self.ident()?;
        self.expect(TokenKind::Colon)?;
        let dom = self.term()?;
        self.expect(TokenKind::RParen)?;
        let arrow = self.advance();
        let make = match arrow.kind {
            TokenKind::Arrow => |name, dom, cod| SurfaceKind::Pi { name, dom, cod },
            TokenKind::Stars => |name, dom, cod| SurfaceKind::Sigma { name, dom, cod },
            other => {
                return Err(Diagnostic::parse(
                    format!("expected `->` or `**` after a binder, found {}", other.describe()),
                    arrow.span,
                ))
            }
        };
        let cod = self.term()?;
        let span = start.join(cod.span);
        Ok(SurfaceTerm::new(
            make(name, Box::new(dom), Box::new(cod)),
            span,
        ))
    }

    /// One or more application elements, folded to the left.
    fn operand(&mut self) -> Result<SurfaceTerm, Diagnostic> {
        let mut acc = self.element()?;
        while self.at_element_start() {
            let arg = self.element()?;
            let span = acc.span.join(arg.span);
            acc = SurfaceTerm::new(SurfaceKind::App(Box::new(acc), Box::new(arg)), span);
        }
        Ok(acc)
    }

    fn at_element_start(&self) -> bool {
        matches!(
            self.peek().kind,
            TokenKind::Ident(_)
                | TokenKind::Type
                | TokenKind::Nat
                | TokenKind::Empty
                | TokenKind::Zero
                | TokenKind::Succ
                | TokenKind::Fst
                | TokenKind::Snd
                | TokenKind::Id
                | TokenKind::Refl
                | TokenKind::Pair
                | TokenKind::Natrec
                | TokenKind::Idrec
                | TokenKind::Exfalso
                | TokenKind::LParen
        )
    }

    fn element(&mut self) -> Result<SurfaceTerm, Diagnostic> {
        let tok = self.peek().clone();
        match tok.kind {
            TokenKind::Succ => {
                self.advance();
                let arg = self.atom()?;
                let span = tok.span.join(arg.span);
                Ok(SurfaceTerm::new(SurfaceKind::Succ(Box::new(arg)), span))
            }
            TokenKind::Fst => {
                self.advance();
                let arg = self.atom()?;
                let span = tok.span.join(arg.span);
                Ok(SurfaceTerm::new(SurfaceKind::Fst(Box::new(arg)), span))
            }
            TokenKind::Snd => {
                self.advance();
                let arg = self.atom()?;
                let span = tok.span.join(arg.span);
                Ok(SurfaceTerm::new(SurfaceKind::Snd(Box::new(arg)), span))
            }
            TokenKind::Id => {
                self.advance();
                let ty = self.atom()?;
                let lhs = self.atom()?;
                let rhs = self.atom()?;
                let span = tok.span.join(rhs.span);
                Ok(SurfaceTerm::new(
                    SurfaceKind::Id(Box::new(ty), Box::new(lhs), Box::new(rhs)),
                    span,
                ))
            }
            TokenKind::Refl => {
                self.advance();
                let ty = self.atom()?;
                let tm = self.atom()?;
                let span = tok.span.join(tm.span);
                Ok(SurfaceTerm::new(
                    SurfaceKind::Refl(Box::new(ty), Box::new(tm)),
                    span,
                ))
            }
            _ => self.atom(),
        }
    }

    fn atom(&mut self) -> Result<SurfaceTerm, Diagnostic> {
        let tok = self.peek().clone();
        match tok.kind {
            TokenKind::Ident(name) => {
                self.advance();
                Ok(SurfaceTerm::new(SurfaceKind::Var(name), tok.span))
            }
            TokenKind::Type => {
                self.advance();
                Ok(SurfaceTerm::new(SurfaceKind::Univ, tok.span))
            }
            TokenKind::Nat => {
                self.advance();
                Ok(SurfaceTerm::new(SurfaceKind::Nat, tok.span))
            }
            TokenKind::Empty => {
                self.advance();
                Ok(SurfaceTerm::new(SurfaceKind::Empty, tok.span))
            }
            TokenKind::Zero => {
                self.advance();
                Ok(SurfaceTerm::new(SurfaceKind::Zero, tok.span))
            }
            TokenKind::Pair => self.pair_form(),
            TokenKind::Natrec => self.natrec_form(),
            TokenKind::Idrec => self.idrec_form(),
            TokenKind::Exfalso => self.exfalso_form(),
            TokenKind::LParen => {
                self.advance();
                let inner = self.term()?;
                let close = self.expect(TokenKind::RParen)?;
                Ok(SurfaceTerm::new(inner.kind, tok.span.join(close.span)))
            }
            other => Err(Diagnostic::parse(
                format!("expected a term, found {}", other.describe()),
                tok.span,
            )),
        }
    }

    /// `pair(dom, x. cod, fst, snd)`
    fn pair_form(&mut self) -> Result<SurfaceTerm, Diagnostic> {
        let start = self.advance().span;
        self.expect(TokenKind::LParen)?;
        let dom = self.term()?;
        self.expect(TokenKind::Comma)?;
        let (name, _) = self.ident()?;
        self.expect(TokenKind::Dot)?;
        let cod = self.term()?;
        self.expect(TokenKind::Comma)?;
        let fst = self.term()?;
        self.expect(TokenKind::Comma)?;
        let snd = self.term()?;
        let close = self.expect(TokenKind::RParen)?;
        Ok(SurfaceTerm::new(
            SurfaceKind::Pair {
                dom: Box::new(dom),
                name,
                cod: Box::new(cod),
                fst: Box::new(fst),
                snd: Box::new(snd),
            },
            start.join(close.span),
        ))
    }

    /// `natrec(x. motive, base, step, scrut)`
    fn natrec_form(&mut self) -> Result<SurfaceTerm, Diagnostic> {
        let start = self.advance().span;
        self.expect(TokenKind::LParen)?;
        let (name, _) = self.ident()?;
        self.expect(TokenKind::Dot)?;
        let motive = self.term()?;
        self.expect(TokenKind::Comma)?;
        let base = self.term()?;
        self.expect(TokenKind::Comma)?;
        let step = self.term()?;
        self.expect(TokenKind::Comma)?;
        let scrut = self.term()?;
        let close = self.expect(TokenKind::RParen)?;
        Ok(SurfaceTerm::new(
            SurfaceKind::NatElim {
                name,
                motive: Box::new(motive),
                base: Box::new(base),
                step: Box::new(step),
                scrut: Box::new(scrut),
            },
            start.join(close.span),
        ))
    }

    /// `idrec(ty, lhs, y e. motive, base, rhs, proof)`
    fn idrec_form(&mut self) -> Result<SurfaceTerm, Diagnostic> {
        let start = self.advance().span;
        self.expect(TokenKind::LParen)?;
        let ty = self.term()?;
        self.expect(TokenKind::Comma)?;
        let lhs = self.term()?;
        self.expect(TokenKind::Comma)?;
        let (rhs_name, _) = self.ident()?;
        let (proof_name, _) = self.ident()?;
        self.expect(TokenKind::Dot)?;
        let motive = self.term()?;
        self.expect(TokenKind::Comma)?;
        let base = self.term()?;
        self.expect(TokenKind::Comma)?;
        let rhs = self.term()?;
        self.expect(TokenKind::Comma)?;
        let proof = self.term()?;
        let close = self.expect(TokenKind::RParen)?;
        Ok(SurfaceTerm::new(
            SurfaceKind::IdElim {
                ty: Box::new(ty),
                lhs: Box::new(lhs),
                rhs_name,
                proof_name,
                motive: Box::new(motive),
                base: Box::new(base),
                rhs: Box::new(rhs),
                proof: Box::new(proof),
            },
            start.join(close.span),
        ))
    }

    /// `exfalso(x. motive, scrut)`
    fn exfalso_form(&mut self) -> Result<SurfaceTerm, Diagnostic> {
        let start = self.advance().span;
        self.expect(TokenKind::LParen)?;
        let (name, _) = self.ident()?;
        self.expect(TokenKind::Dot)?;
        let motive = self.term()?;
        self.expect(TokenKind::Comma)?;
        let scrut = self.term()?;
        let close = self.expect(TokenKind::RParen)?;
        Ok(SurfaceTerm::new(
            SurfaceKind::EmptyElim {
                name,
                motive: Box::new(motive),
                scrut: Box::new(scrut),
            },
            start.join(close.span),
        ))
    }
}
