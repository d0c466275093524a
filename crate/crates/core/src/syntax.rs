//! Raw term syntax: de Bruijn terms, typing contexts, and the
//! lifting/substitution calculus everything else is built on.
//!
//! Variables are binder distances, so alpha-equivalence is plain structural
//! equality and there are no names anywhere in the kernel.

use std::fmt;

/// A term of the core calculus.
///
/// Binders are positional: a field documented as binding `n` variables is a
/// term whose indices `0..n` refer to those binders, innermost first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Term {
    /// Variable, counted as binder distance (`Var(0)` is the innermost binder).
    Var(usize),
    /// The universe of small types.
    Univ,
    /// Dependent function type; the codomain binds the argument.
    Pi(Box<Term>, Box<Term>),
    /// Abstraction annotated with its domain; the body binds the argument.
    Lam(Box<Term>, Box<Term>),
    /// Application.
    App(Box<Term>, Box<Term>),
    /// Dependent pair type; the second component's type binds the first.
    Sigma(Box<Term>, Box<Term>),
    /// Pair, annotated with the full Sigma decomposition (`cod` binds one
    /// variable) so that a bare pair still infers a principal type.
    Pair {
        dom: Box<Term>,
        cod: Box<Term>,
        fst: Box<Term>,
        snd: Box<Term>,
    },
    /// First projection.
    Fst(Box<Term>),
    /// Second projection.
    Snd(Box<Term>),
    /// Type of natural numbers.
    Nat,
    Zero,
    Succ(Box<Term>),
    /// Recursor for naturals. `motive` binds the scrutinee; `step` is a plain
    /// term checked against `Π(n : Nat). motive[n] -> motive[Succ n]`.
    NatElim {
        motive: Box<Term>,
        base: Box<Term>,
        step: Box<Term>,
        scrut: Box<Term>,
    },
    /// Identity type `Id ty lhs rhs`.
    Id(Box<Term>, Box<Term>, Box<Term>),
    /// Reflexivity proof; `Refl(ty, tm)` inhabits `Id ty tm tm`.
    Refl(Box<Term>, Box<Term>),
    /// The J eliminator. `motive` binds two variables: the right endpoint
    /// (index 1) and the equality proof (index 0). `base` is the value at
    /// `Refl`, `proof` the scrutinee.
    IdElim {
        ty: Box<Term>,
        lhs: Box<Term>,
        motive: Box<Term>,
        base: Box<Term>,
        rhs: Box<Term>,
        proof: Box<Term>,
    },
    /// The empty type.
    Empty,
    /// Eliminator for the empty type; the motive binds the scrutinee.
    EmptyElim { motive: Box<Term>, scrut: Box<Term> },
}

impl Term {
    pub fn pi(dom: Term, cod: Term) -> Term {
        Term::Pi(Box::new(dom), Box::new(cod))
    }

    pub fn lam(dom: Term, body: Term) -> Term {
        Term::Lam(Box::new(dom), Box::new(body))
    }

    pub fn app(func: Term, arg: Term) -> Term {
        Term::App(Box::new(func), Box::new(arg))
    }

    pub fn sigma(dom: Term, cod: Term) -> Term {
        Term::Sigma(Box::new(dom), Box::new(cod))
    }

    pub fn pair(dom: Term, cod: Term, fst: Term, snd: Term) -> Term {
        Term::Pair {
            dom: Box::new(dom),
            cod: Box::new(cod),
            fst: Box::new(fst),
            snd: Box::new(snd),
        }
    }

    pub fn fst(pair: Term) -> Term {
        Term::Fst(Box::new(pair))
    }

    pub fn snd(pair: Term) -> Term {
        Term::Snd(Box::new(pair))
    }

    pub fn succ(pred: Term) -> Term {
        Term::Succ(Box::new(pred))
    }

    pub fn nat_elim(motive: Term, base: Term, step: Term, scrut: Term) -> Term {
        Term::NatElim {
            motive: Box::new(motive),
            base: Box::new(base),
            step: Box::new(step),
            scrut: Box::new(scrut),
        }
    }

    pub fn id(ty: Term, lhs: Term, rhs: Term) -> Term {
        Term::Id(Box::new(ty), Box::new(lhs), Box::new(rhs))
    }

    pub fn refl(ty: Term, tm: Term) -> Term {
        Term::Refl(Box::new(ty), Box::new(tm))
    }

    pub fn id_elim(ty: Term, lhs: Term, motive: Term, base: Term, rhs: Term, proof: Term) -> Term {
        Term::IdElim {
            ty: Box::new(ty),
            lhs: Box::new(lhs),
            motive: Box::new(motive),
            base: Box::new(base),
            rhs: Box::new(rhs),
            proof: Box::new(proof),
        }
    }

    pub fn empty_elim(motive: Term, scrut: Term) -> Term {
        Term::EmptyElim {
            motive: Box::new(motive),
            scrut: Box::new(scrut),
        }
    }

    /// The numeral `Succ^n(Zero)`.
    pub fn numeral(n: u64) -> Term {
        let mut t = Term::Zero;
        for _ in 0..n {
            t = Term::succ(t);
        }
        t
    }

    /// Inverse of [`Term::numeral`]: `Some(n)` iff the term is literally
    /// `Succ^n(Zero)`.
    pub fn as_numeral(&self) -> Option<u64> {
        let mut t = self;
        let mut n = 0;
        loop {
            match t {
                Term::Zero => return Some(n),
                Term::Succ(p) => {
                    n += 1;
                    t = p;
                }
                _ => return None,
            }
        }
    }
}

/// Rewrites every free variable of `t`. The callback receives the raw index
/// and the number of binders crossed to reach it; it is only invoked on
/// indices that are free relative to the traversal root (`index >= depth`).
fn map_free(t: &Term, depth: usize, f: &mut impl FnMut(usize, usize) -> Term) -> Term {
    use Term::*;
    match t {
        Var(i) => {
            if *i >= depth {
                f(*i, depth)
            } else {
                Var(*i)
            }
        }
        Univ | Nat | Zero | Empty => t.clone(),
        Pi(a, b) => Term::pi(map_free(a, depth, f), map_free(b, depth + 1, f)),
        Lam(a, b) => Term::lam(map_free(a, depth, f), map_free(b, depth + 1, f)),
        App(g, a) => Term::app(map_free(g, depth, f), map_free(a, depth, f)),
        Sigma(a, b) => Term::sigma(map_free(a, depth, f), map_free(b, depth + 1, f)),
        Pair { dom, cod, fst, snd } => Term::pair(
            map_free(dom, depth, f),
            map_free(cod, depth + 1, f),
            map_free(fst, depth, f),
            map_free(snd, depth, f),
        ),
        Fst(p) => Term::fst(map_free(p, depth, f)),
        Snd(p) => Term::snd(map_free(p, depth, f)),
        Succ(n) => Term::succ(map_free(n, depth, f)),
        NatElim {
            motive,
            base,
            step,
            scrut,
        } => Term::nat_elim(
            map_free(motive, depth + 1, f),
            map_free(base, depth, f),
            map_free(step, depth, f),
            map_free(scrut, depth, f),
        ),
        Id(ty, l, r) => Term::id(
            map_free(ty, depth, f),
            map_free(l, depth, f),
            map_free(r, depth, f),
        ),
        Refl(ty, tm) => Term::refl(map_free(ty, depth, f), map_free(tm, depth, f)),
        IdElim {
            ty,
            lhs,
            motive,
            base,
            rhs,
            proof,
        } => Term::id_elim(
            map_free(ty, depth, f),
            map_free(lhs, depth, f),
            map_free(motive, depth + 2, f),
            map_free(base, depth, f),
            map_free(rhs, depth, f),
            map_free(proof, depth, f),
        ),
        EmptyElim { motive, scrut } => {
            Term::empty_elim(map_free(motive, depth + 1, f), map_free(scrut, depth, f))
        }
    }
}

/// Shifts every free index `i >= cutoff` up by `amount`; binders raise the
/// cutoff as they are crossed.
pub fn lift(t: &Term, amount: usize, cutoff: usize) -> Term {
    if amount == 0 {
        return t.clone();
    }
    map_free(t, 0, &mut |i, depth| {
        if i >= cutoff + depth {
            Term::Var(i + amount)
        } else {
            Term::Var(i)
        }
    })
}

/// Substitutes `arg` for index 0 of a one-binder body; higher indices
/// decrement by one. `arg` is lifted under any binders crossed.
pub fn subst1(body: &Term, arg: &Term) -> Term {
    map_free(body, 0, &mut |i, depth| {
        use std::cmp::Ordering::*;
        match i.cmp(&depth) {
            Equal => lift(arg, depth, 0),
            Greater => Term::Var(i - 1),
            Less => unreachable!("map_free only visits free indices"),
        }
    })
}

/// Instantiates a two-binder body: `outer` replaces index 1, `inner` replaces
/// index 0. Both arguments are scoped in the surrounding context.
pub fn subst2(body: &Term, outer: &Term, inner: &Term) -> Term {
    subst1(&subst1(body, &lift(inner, 1, 0)), outer)
}

/// Alpha-equivalence. With de Bruijn indices this is structural equality,
/// decided in one traversal.
pub fn alpha_eq(t: &Term, u: &Term) -> bool {
    t == u
}

/// True iff `index` occurs free in `t`.
pub fn occurs(t: &Term, index: usize) -> bool {
    let mut found = false;
    map_free(t, 0, &mut |i, depth| {
        if i == index + depth {
            found = true;
        }
        Term::Var(i)
    });
    found
}

/// Free-variable scan: true iff every free index of `t` is below `depth`.
pub fn well_scoped(t: &Term, depth: usize) -> bool {
    let mut ok = true;
    map_free(t, 0, &mut |i, d| {
        if i - d >= depth {
            ok = false;
        }
        Term::Var(i)
    });
    ok
}

/// An ordered telescope of types, innermost binding last. Entry `i` (counted
/// from the end) is scoped in the prefix of entries before it.
///
/// Well-formedness of the entries is a separate checkable judgement
/// ([`crate::typing::check_ctx`]), not a structural invariant.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Context {
    entries: Vec<Term>,
}

impl Context {
    pub fn empty() -> Context {
        Context::default()
    }

    /// Builds a context from types listed outermost first.
    pub fn from_types(types: impl IntoIterator<Item = Term>) -> Context {
        Context {
            entries: types.into_iter().collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// The entries, outermost first, each scoped in its own prefix.
    pub fn entries(&self) -> &[Term] {
        &self.entries
    }

    /// A new context with `ty` as the innermost binding.
    pub fn extended(&self, ty: Term) -> Context {
        let mut entries = self.entries.clone();
        entries.push(ty);
        Context { entries }
    }

    /// The type of variable `index`, lifted by `index + 1` so it is scoped in
    /// the whole context. `None` signals an unbound variable.
    pub fn lookup(&self, index: usize) -> Option<Term> {
        if index >= self.entries.len() {
            return None;
        }
        let entry = &self.entries[self.entries.len() - 1 - index];
        Some(lift(entry, index + 1, 0))
    }
}

impl fmt::Display for Term {
    /// Compact de Bruijn notation for debugging and kernel error messages.
    /// The surface pretty-printer lives in the frontend.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Term::*;
        if let Some(n) = self.as_numeral() {
            return write!(f, "{n}");
        }
        match self {
            Var(i) => write!(f, "#{i}"),
            Univ => write!(f, "Type"),
            Nat => write!(f, "Nat"),
            Empty => write!(f, "Empty"),
            Zero => write!(f, "0"),
            Succ(n) => write!(f, "succ({n})"),
            Pi(a, b) => write!(f, "Pi({a}. {b})"),
            Lam(a, b) => write!(f, "lam({a}. {b})"),
            App(g, a) => write!(f, "({g} {a})"),
            Sigma(a, b) => write!(f, "Sigma({a}. {b})"),
            Pair { dom, cod, fst, snd } => write!(f, "pair({dom}, {cod}, {fst}, {snd})"),
            Fst(p) => write!(f, "fst({p})"),
            Snd(p) => write!(f, "snd({p})"),
            NatElim {
                motive,
                base,
                step,
                scrut,
            } => write!(f, "natrec({motive}; {base}; {step}; {scrut})"),
            Id(ty, l, r) => write!(f, "Id({ty}, {l}, {r})"),
            Refl(ty, tm) => write!(f, "refl({ty}, {tm})"),
            IdElim {
                ty,
                lhs,
                motive,
                base,
                rhs,
                proof,
            } => write!(f, "idrec({ty}, {lhs}, {motive}; {base}; {rhs}; {proof})"),
            EmptyElim { motive, scrut } => write!(f, "exfalso({motive}; {scrut})"),
        }
    }
}
