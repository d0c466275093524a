//! Surface abstract syntax: a named-variable mirror of the core terms, with
//! a source span on every node.

/// Byte range into the source text.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

impl Span {
    pub fn new(start: usize, end: usize) -> Span {
        Span { start, end }
    }

    pub fn join(self, other: Span) -> Span {
        Span {
            start: self.start.min(other.start),
            end: self.end.max(other.end),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SurfaceTerm {
    pub kind: SurfaceKind,
    pub span: Span,
}

impl SurfaceTerm {
    pub fn new(kind: SurfaceKind, span: Span) -> SurfaceTerm {
        SurfaceTerm { kind, span }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum SurfaceKind {
    Var(String),
    Univ,
    Nat,
    Empty,
    Zero,
    Succ(Box<SurfaceTerm>),
    /// `(name : dom) -> cod`; `A -> B` sugars to an unused binder named `_`.
    Pi {
        name: String,
        dom: Box<SurfaceTerm>,
        cod: Box<SurfaceTerm>,
    },
    /// `\(name : dom) => body`
    Lam {
        name: String,
        dom: Box<SurfaceTerm>,
        body: Box<SurfaceTerm>,
    },
    App(Box<SurfaceTerm>, Box<SurfaceTerm>),
    /// `(name : dom) ** cod`
    Sigma {
        name: String,
        dom: Box<SurfaceTerm>,
        cod: Box<SurfaceTerm>,
    },
    /// `pair(dom, name. cod, fst, snd)`
    Pair {
        dom: Box<SurfaceTerm>,
        name: String,
        cod: Box<SurfaceTerm>,
        fst: Box<SurfaceTerm>,
        snd: Box<SurfaceTerm>,
    },
    Fst(Box<SurfaceTerm>),
    Snd(Box<SurfaceTerm>),
    /// `natrec(name. motive, base, step, scrut)`
    NatElim {
        name: String,
        motive: Box<SurfaceTerm>,
        base: Box<SurfaceTerm>,
        step: Box<SurfaceTerm>,
        scrut: Box<SurfaceTerm>,
    },
    /// `Id ty lhs rhs`
    Id(Box<SurfaceTerm>, Box<SurfaceTerm>, Box<SurfaceTerm>),
    /// `refl ty tm`
    Refl(Box<SurfaceTerm>, Box<SurfaceTerm>),
    /// `idrec(ty, lhs, rhs_name proof_name. motive, base, rhs, proof)`
    IdElim {
        ty: Box<SurfaceTerm>,
        lhs: Box<SurfaceTerm>,
        rhs_name: String,
        proof_name: String,
        motive: Box<SurfaceTerm>,
        base: Box<SurfaceTerm>,
        rhs: Box<SurfaceTerm>,
        proof: Box<SurfaceTerm>,
    },
    /// `exfalso(name. motive, scrut)`
    EmptyElim {
        name: String,
        motive: Box<SurfaceTerm>,
        scrut: Box<SurfaceTerm>,
    },
}

/// A top-level definition `def name : ty := body`. Definitions are
/// transparent abbreviations: the resolver inlines earlier definitions into
/// later ones, so the kernel never sees a global environment.
#[derive(Debug, Clone, PartialEq)]
pub struct Definition {
    pub name: String,
    pub name_span: Span,
    pub ty: SurfaceTerm,
    pub body: SurfaceTerm,
}
