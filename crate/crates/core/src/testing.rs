//! Deterministic term generators and independent oracles for tests and
//! benchmarks. Nothing in here is used by the kernel itself; the module only
//! depends on the syntax layer, so the oracles stay independent of the code
//! paths they are used to cross-check.

use crate::syntax::{lift, subst1, Context, Term};
use rand::prelude::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Seeded generator of random terms: raw well-scoped soup for syntax and
/// reduction properties, and well-typed-by-construction terms for typing and
/// conversion properties.
pub struct TermGen {
    rng: ChaCha8Rng,
}

impl TermGen {
    pub fn new(seed: u64) -> TermGen {
        TermGen {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    fn flip(&mut self, p: f64) -> bool {
        self.rng.random_bool(p)
    }

    fn range(&mut self, n: usize) -> usize {
        self.rng.random_range(0..n)
    }

    /// An arbitrary term, well-scoped under `free` ambient variables but with
    /// no typing discipline at all.
    pub fn raw_term(&mut self, depth: usize, free: usize) -> Term {
        if depth == 0 {
            return match self.range(6) {
                0 if free > 0 => Term::Var(self.range(free)),
                1 => Term::Univ,
                2 => Term::Nat,
                3 => Term::Empty,
                4 => Term::Zero,
                _ => {
                    if free > 0 {
                        Term::Var(self.range(free))
                    } else {
                        Term::Zero
                    }
                }
            };
        }
        let d = depth - 1;
        match self.range(18) {
            0 => {
                if free > 0 {
                    Term::Var(self.range(free))
                } else {
                    Term::Zero
                }
            }
            1 => Term::Univ,
            2 => Term::pi(self.raw_term(d, free), self.raw_term(d, free + 1)),
            3 => Term::lam(self.raw_term(d, free), self.raw_term(d, free + 1)),
            4 => Term::app(self.raw_term(d, free), self.raw_term(d, free)),
            5 => Term::sigma(self.raw_term(d, free), self.raw_term(d, free + 1)),
            6 => Term::pair(
                self.raw_term(d, free),
                self.raw_term(d, free + 1),
                self.raw_term(d, free),
                self.raw_term(d, free),
            ),
            7 => Term::fst(self.raw_term(d, free)),
            8 => Term::snd(self.raw_term(d, free)),
            9 => Term::Nat,
            10 => Term::Zero,
            11 => Term::succ(self.raw_term(d, free)),
            12 => Term::nat_elim(
                self.raw_term(d, free + 1),
                self.raw_term(d, free),
                self.raw_term(d, free),
                self.raw_term(d, free),
            ),
            13 => Term::id(
                self.raw_term(d, free),
                self.raw_term(d, free),
                self.raw_term(d, free),
            ),
            14 => Term::refl(self.raw_term(d, free), self.raw_term(d, free)),
            15 => Term::id_elim(
                self.raw_term(d, free),
                self.raw_term(d, free),
                self.raw_term(d, free + 2),
                self.raw_term(d, free),
                self.raw_term(d, free),
                self.raw_term(d, free),
            ),
            16 => Term::Empty,
            _ => Term::empty_elim(self.raw_term(d, free + 1), self.raw_term(d, free)),
        }
    }

    /// A closed small type (a term of the universe), inhabited by
    /// construction: `Empty` only ever appears in function domains.
    pub fn small_type(&mut self, depth: usize) -> Term {
        if depth == 0 {
            return Term::Nat;
        }
        let d = depth - 1;
        match self.range(10) {
            0..=2 => Term::Nat,
            3 | 4 => {
                let dom = if self.flip(0.15) {
                    Term::Empty
                } else {
                    self.small_type(d)
                };
                Term::pi(dom, self.small_type(d))
            }
            5 | 6 => Term::sigma(self.small_type(d), self.small_type(d)),
            7 => {
                // Convertible endpoints, possibly hidden behind a redex.
                let n = Term::numeral(self.range(3) as u64);
                let m = if self.flip(0.5) {
                    self.wrap_redex(&n, &Term::Nat)
                } else {
                    n.clone()
                };
                Term::id(Term::Nat, n, m)
            }
            8 => Term::pi(Term::Nat, Term::id(Term::Nat, Term::Var(0), Term::Var(0))),
            _ => Term::Nat,
        }
    }

    /// A term that checks against `ty` in `ctx`, by construction. `ty` must
    /// come from [`TermGen::small_type`] (or be one of its subterms).
    pub fn term_of(&mut self, ctx: &Context, ty: &Term, depth: usize) -> Term {
        // Occasionally pull a matching variable from the context instead of
        // building a canonical form.
        if self.flip(0.25) {
            if let Some(i) = self.matching_var(ctx, ty) {
                return Term::Var(i);
            }
        }
        // With an absurd hypothesis in scope anything is inhabited.
        if self.flip(0.1) {
            if let Some(i) = self.matching_var(ctx, &Term::Empty) {
                return Term::empty_elim(lift(ty, 1, 0), Term::Var(i));
            }
        }
        let t = self.canonical_of(ctx, ty, depth);
        if depth > 0 && self.flip(0.3) {
            self.wrap_redex(&t, ty)
        } else {
            t
        }
    }

    fn matching_var(&mut self, ctx: &Context, ty: &Term) -> Option<usize> {
        let hits: Vec<usize> = (0..ctx.len())
            .filter(|&i| ctx.lookup(i).as_ref() == Some(ty))
            .collect();
        hits.choose(&mut self.rng).copied()
    }

    fn canonical_of(&mut self, ctx: &Context, ty: &Term, depth: usize) -> Term {
        let d = depth.saturating_sub(1);
        match ty {
            Term::Nat => {
                if depth == 0 {
                    Term::numeral(self.range(3) as u64)
                } else if self.flip(0.3) {
                    Term::succ(self.term_of(ctx, &Term::Nat, d))
                } else if self.flip(0.25) {
                    // A recursor with a constant motive. The scrutinee is a
                    // small numeral, or a context variable when one is in
                    // scope, which leaves the recursor stuck.
                    let step = Term::lam(
                        Term::Nat,
                        Term::lam(Term::Nat, Term::succ(Term::Var(0))),
                    );
                    let scrut = match self.matching_var(ctx, &Term::Nat) {
                        Some(i) if self.flip(0.4) => Term::Var(i),
                        _ => Term::numeral(self.range(3) as u64),
                    };
                    Term::nat_elim(Term::Nat, self.term_of(ctx, &Term::Nat, d), step, scrut)
                } else {
                    Term::numeral(self.range(4) as u64)
                }
            }
            Term::Pi(dom, cod) => {
                let inner = ctx.extended((**dom).clone());
                // Generated codomains are closed, so they stay valid in the
                // extended context unchanged.
                let body = self.term_of(&inner, cod, d);
                Term::lam((**dom).clone(), body)
            }
            Term::Sigma(dom, cod) => {
                let fst = self.term_of(ctx, dom, d);
                let snd_ty = subst1(cod, &fst);
                let snd = self.term_of(ctx, &snd_ty, d);
                Term::pair((**dom).clone(), (**cod).clone(), fst, snd)
            }
            // Generated Id types always have convertible endpoints, so a
            // refl at the left endpoint checks.
            Term::Id(base, lhs, _) => Term::refl((**base).clone(), (**lhs).clone()),
            Term::Univ => self.small_type(d),
            Term::Empty => {
                let i = self
                    .matching_var(ctx, &Term::Empty)
                    .expect("Empty goals only arise under an absurd hypothesis");
                Term::Var(i)
            }
            other => panic!("no generator for goal type {other}"),
        }
    }

    /// Wraps a term in a redex that evaluates back to it, preserving its type
    /// and conversion class. Also applies to small types (terms of `Univ`).
    pub fn wrap_redex(&mut self, t: &Term, ty: &Term) -> Term {
        match self.range(3) {
            // (\(x : Nat) => t) k
            0 => Term::app(
                Term::lam(Term::Nat, lift(t, 1, 0)),
                Term::numeral(self.range(3) as u64),
            ),
            // natrec(_. ty, t, \k ih. ih, k)
            1 => {
                let motive = lift(ty, 1, 0);
                let step = Term::lam(Term::Nat, Term::lam(lift(ty, 1, 0), Term::Var(0)));
                Term::nat_elim(motive, t.clone(), step, Term::numeral(self.range(3) as u64))
            }
            // fst (pair(ty, Nat, t, k))
            _ => Term::fst(Term::pair(
                ty.clone(),
                Term::Nat,
                t.clone(),
                Term::numeral(self.range(3) as u64),
            )),
        }
    }

    /// A closed well-typed pair `(ty, term)` with `term <= ty`.
    pub fn typed_closed(&mut self, depth: usize) -> (Term, Term) {
        let ty = self.small_type(depth.min(3));
        let t = self.term_of(&Context::empty(), &ty, depth);
        (ty, t)
    }

    /// A well-formed context of small types (possibly with an absurd
    /// hypothesis), a goal type, and a term of that type using the context.
    pub fn typed_open(&mut self, depth: usize) -> (Context, Term, Term) {
        let mut ctx = Context::empty();
        for _ in 0..self.range(4) {
            let entry = if self.flip(0.15) {
                Term::Empty
            } else {
                self.small_type(2)
            };
            ctx = ctx.extended(entry);
        }
        let ty = self.small_type(depth.min(3));
        let t = self.term_of(&ctx, &ty, depth);
        (ctx, ty, t)
    }
}

/// All head reducts of a term under the one-step weak-head relation, derived
/// directly from the reduction rules (beta, the projections, the recursor
/// rules, and congruence in scrutinee position). Determinism of reduction
/// means this list never has more than one element.
pub fn head_reducts(t: &Term) -> Vec<Term> {
    let mut out = Vec::new();
    match t {
        Term::App(f, a) => {
            if let Term::Lam(_, body) = &**f {
                out.push(subst1(body, a));
            }
            for f2 in head_reducts(f) {
                out.push(Term::app(f2, (**a).clone()));
            }
        }
        Term::Fst(p) => {
            if let Term::Pair { fst, .. } = &**p {
                out.push((**fst).clone());
            }
            for p2 in head_reducts(p) {
                out.push(Term::fst(p2));
            }
        }
        Term::Snd(p) => {
            if let Term::Pair { snd, .. } = &**p {
                out.push((**snd).clone());
            }
            for p2 in head_reducts(p) {
                out.push(Term::snd(p2));
            }
        }
        Term::NatElim {
            motive,
            base,
            step,
            scrut,
        } => {
            match &**scrut {
                Term::Zero => out.push((**base).clone()),
                Term::Succ(n) => {
                    let rec = Term::nat_elim(
                        (**motive).clone(),
                        (**base).clone(),
                        (**step).clone(),
                        (**n).clone(),
                    );
                    out.push(Term::app(Term::app((**step).clone(), (**n).clone()), rec));
                }
                _ => {}
            }
            for s2 in head_reducts(scrut) {
                out.push(Term::nat_elim(
                    (**motive).clone(),
                    (**base).clone(),
                    (**step).clone(),
                    s2,
                ));
            }
        }
        Term::IdElim {
            ty,
            lhs,
            motive,
            base,
            rhs,
            proof,
        } => {
            if let Term::Refl(..) = &**proof {
                out.push((**base).clone());
            }
            for p2 in head_reducts(proof) {
                out.push(Term::id_elim(
                    (**ty).clone(),
                    (**lhs).clone(),
                    (**motive).clone(),
                    (**base).clone(),
                    (**rhs).clone(),
                    p2,
                ));
            }
        }
        Term::EmptyElim { motive, scrut } => {
            for s2 in head_reducts(scrut) {
                out.push(Term::empty_elim((**motive).clone(), s2));
            }
        }
        _ => {}
    }
    out
}

/// Naive reference semantics for renamings and substitutions: applies an
/// arbitrary index-to-term function to every free variable, lifting the
/// images under binders the slow, obviously-correct way. The lifting and
/// substitution operations are instances, which the property tests exploit.
pub fn apply_index_map(t: &Term, sigma: &dyn Fn(usize) -> Term) -> Term {
    fn go(t: &Term, depth: usize, sigma: &dyn Fn(usize) -> Term) -> Term {
        use Term::*;
        match t {
            Var(i) => {
                if *i < depth {
                    Var(*i)
                } else {
                    crate::syntax::lift(&sigma(*i - depth), depth, 0)
                }
            }
            Univ | Nat | Zero | Empty => t.clone(),
            Pi(a, b) => Term::pi(go(a, depth, sigma), go(b, depth + 1, sigma)),
            Lam(a, b) => Term::lam(go(a, depth, sigma), go(b, depth + 1, sigma)),
            App(f, a) => Term::app(go(f, depth, sigma), go(a, depth, sigma)),
            Sigma(a, b) => Term::sigma(go(a, depth, sigma), go(b, depth + 1, sigma)),
            Pair { dom, cod, fst, snd } => Term::pair(
                go(dom, depth, sigma),
                go(cod, depth + 1, sigma),
                go(fst, depth, sigma),
                go(snd, depth, sigma),
            ),
            Fst(p) => Term::fst(go(p, depth, sigma)),
            Snd(p) => Term::snd(go(p, depth, sigma)),
            Succ(n) => Term::succ(go(n, depth, sigma)),
            NatElim {
                motive,
                base,
                step,
                scrut,
            } => Term::nat_elim(
                go(motive, depth + 1, sigma),
                go(base, depth, sigma),
                go(step, depth, sigma),
                go(scrut, depth, sigma),
            ),
            Id(ty, l, r) => Term::id(
                go(ty, depth, sigma),
                go(l, depth, sigma),
                go(r, depth, sigma),
            ),
            Refl(ty, tm) => Term::refl(go(ty, depth, sigma), go(tm, depth, sigma)),
            IdElim {
                ty,
                lhs,
                motive,
                base,
                rhs,
                proof,
            } => Term::id_elim(
                go(ty, depth, sigma),
                go(lhs, depth, sigma),
                go(motive, depth + 2, sigma),
                go(base, depth, sigma),
                go(rhs, depth, sigma),
                go(proof, depth, sigma),
            ),
            EmptyElim { motive, scrut } => {
                Term::empty_elim(go(motive, depth + 1, sigma), go(scrut, depth, sigma))
            }
        }
    }
    go(t, 0, sigma)
}
