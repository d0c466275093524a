//! Algorithmic conversion, split in two mutually recursive directions:
//! checking conversion, which takes the type of the compared terms as input
//! and uses it to trigger the extensionality rules for Pi and Sigma, and
//! neutral comparison, which synthesizes a common type while traversing two
//! stuck spines top-down.
//!
//! All routines interleave weak-head reduction with structural comparison;
//! nothing is ever deeply normalized. Inputs follow the same contract as
//! typing: context and type are assumed well-formed, the compared terms
//! well-typed.

use crate::error::{At, CheckResult, Error, TypeErrorKind};
use crate::fuel::Fuel;
use crate::reduction::{classify, whnf, WhnfView};
use crate::syntax::{lift, subst1, subst2, Context, Term};
use crate::typing::{id_elim_base_ty, id_motive_context, nat_elim_step_ty};

#[cfg(test)]
pub(crate) mod trace {
    use std::cell::Cell;
    thread_local! {
        /// Counts eta-expansions, so tests can observe that neutral
        /// comparison never performs any.
        pub static ETA_EXPANSIONS: Cell<u64> = const { Cell::new(0) };
    }
}

/// Conversion between types: both sides are weak-head reduced and must share
/// a head constructor, with components recursively convertible. Two neutral
/// types are compared with [`conv_ne`]; the synthesized type is discarded.
pub fn conv_ty(ctx: &Context, a: &Term, b: &Term, fuel: &mut Fuel) -> CheckResult<()> {
    let a = whnf(a, fuel)?;
    let b = whnf(b, fuel)?;
    match (&a, &b) {
        (Term::Univ, Term::Univ) | (Term::Nat, Term::Nat) | (Term::Empty, Term::Empty) => Ok(()),
        (Term::Pi(dom_a, cod_a), Term::Pi(dom_b, cod_b))
        | (Term::Sigma(dom_a, cod_a), Term::Sigma(dom_b, cod_b)) => {
            conv_ty(ctx, dom_a, dom_b, fuel).at("domain")?;
            let inner = ctx.extended((**dom_a).clone());
            conv_ty(&inner, cod_a, cod_b, fuel).at("codomain")
        }
        (Term::Id(ty_a, l_a, r_a), Term::Id(ty_b, l_b, r_b)) => {
            conv_ty(ctx, ty_a, ty_b, fuel).at("type")?;
            conv_tm(ctx, l_a, l_b, ty_a, fuel).at("left endpoint")?;
            conv_tm(ctx, r_a, r_b, ty_a, fuel).at("right endpoint")
        }
        _ => match (classify(&a), classify(&b)) {
            (WhnfView::Neutral(_), WhnfView::Neutral(_)) => {
                conv_ne(ctx, &a, &b, fuel).map(drop)
            }
            _ => Err(Error::ty(TypeErrorKind::TypeHeadMismatch { left: a, right: b })),
        },
    }
}

/// Type-directed conversion of terms. The type is weak-head reduced first:
/// at Pi and Sigma the eta rule is applied unconditionally, at the other
/// types the weak-head normal forms of the terms are compared structurally,
/// with stuck terms delegated to neutral comparison.
pub fn conv_tm(ctx: &Context, t: &Term, u: &Term, ty: &Term, fuel: &mut Fuel) -> CheckResult<()> {
    let ty = whnf(ty, fuel)?;
    match &ty {
        // Eta for functions: compare the applications to a fresh variable.
        Term::Pi(dom, cod) => {
            let inner = ctx.extended((**dom).clone());
            let t = eta_apply(t, fuel)?;
            let u = eta_apply(u, fuel)?;
            conv_tm(&inner, &t, &u, cod, fuel)
        }
        // Surjective pairing: compare both projections.
        Term::Sigma(dom, cod) => {
            let t = whnf(t, fuel)?;
            let u = whnf(u, fuel)?;
            conv_tm(ctx, &Term::fst(t.clone()), &Term::fst(u.clone()), dom, fuel)
                .at("first component")?;
            let snd_ty = subst1(cod, &Term::fst(t.clone()));
            conv_tm(ctx, &Term::snd(t), &Term::snd(u), &snd_ty, fuel).at("second component")
        }
        Term::Nat => {
            let t = whnf(t, fuel)?;
            let u = whnf(u, fuel)?;
            match (&t, &u) {
                (Term::Zero, Term::Zero) => Ok(()),
                (Term::Succ(a), Term::Succ(b)) => {
                    conv_tm(ctx, a, b, &Term::Nat, fuel).at("predecessor")
                }
                _ => both_neutral_or_mismatch(ctx, t, u, ty, fuel),
            }
        }
        // Comparing small types as terms of the universe.
        Term::Univ => {
            let t = whnf(t, fuel)?;
            let u = whnf(u, fuel)?;
            match (&t, &u) {
                (Term::Nat, Term::Nat) | (Term::Empty, Term::Empty) => Ok(()),
                (Term::Pi(dom_a, cod_a), Term::Pi(dom_b, cod_b))
                | (Term::Sigma(dom_a, cod_a), Term::Sigma(dom_b, cod_b)) => {
                    conv_tm(ctx, dom_a, dom_b, &Term::Univ, fuel).at("domain")?;
                    let inner = ctx.extended((**dom_a).clone());
                    conv_tm(&inner, cod_a, cod_b, &Term::Univ, fuel).at("codomain")
                }
                (Term::Id(ty_a, l_a, r_a), Term::Id(ty_b, l_b, r_b)) => {
                    conv_tm(ctx, ty_a, ty_b, &Term::Univ, fuel).at("type")?;
                    conv_tm(ctx, l_a, l_b, ty_a, fuel).at("left endpoint")?;
                    conv_tm(ctx, r_a, r_b, ty_a, fuel).at("right endpoint")
                }
                _ => both_neutral_or_mismatch(ctx, t, u, ty, fuel),
            }
        }
        // Refl annotations are not compared: well-typed inputs force them to
        // be convertible to the Id components already.
        Term::Id(..) => {
            let t = whnf(t, fuel)?;
            let u = whnf(u, fuel)?;
            match (&t, &u) {
                (Term::Refl(..), Term::Refl(..)) => Ok(()),
                _ => both_neutral_or_mismatch(ctx, t, u, ty, fuel),
            }
        }
        // At Empty and at neutral types only stuck terms can appear; there is
        // no irrelevance rule, they are compared structurally.
        Term::Empty => {
            let t = whnf(t, fuel)?;
            let u = whnf(u, fuel)?;
            both_neutral_or_mismatch(ctx, t, u, ty, fuel)
        }
        _ => match classify(&ty) {
            WhnfView::Neutral(_) => {
                let t = whnf(t, fuel)?;
                let u = whnf(u, fuel)?;
                both_neutral_or_mismatch(ctx, t, u, ty, fuel)
            }
            _ => Err(Error::IllFormed("conversion at a non-type")),
        },
    }
}

/// The eta expansion step for Pi: `t` becomes `lift(t) #0`, to be compared in
/// the extended context. The term is weak-head reduced first so a literal
/// lambda immediately beta-reduces back to its body.
fn eta_apply(t: &Term, fuel: &mut Fuel) -> CheckResult<Term> {
    #[cfg(test)]
    trace::ETA_EXPANSIONS.with(|c| c.set(c.get() + 1));
    let t = whnf(t, fuel)?;
    Ok(Term::app(lift(&t, 1, 0), Term::Var(0)))
}

fn both_neutral_or_mismatch(
    ctx: &Context,
    t: Term,
    u: Term,
    ty: Term,
    fuel: &mut Fuel,
) -> CheckResult<()> {
    match (classify(&t), classify(&u)) {
        (WhnfView::Neutral(_), WhnfView::Neutral(_)) => conv_ne(ctx, &t, &u, fuel).map(drop),
        _ => Err(Error::ty(TypeErrorKind::TermMismatch {
            left: t,
            right: u,
            ty,
        })),
    }
}

/// Comparison of two weak-head neutral terms. Traverses the spines down to
/// the variables they are stuck on, which must coincide; the variable's type
/// is read from the context and propagated back up, typing each pair of
/// eliminator arguments on the way. Returns the synthesized common type.
///
/// Neutrals are never eta-expanded: expansion cannot unstick a spine, so it
/// is applied only in [`conv_tm`] where the type demands it.
pub fn conv_ne(ctx: &Context, n: &Term, m: &Term, fuel: &mut Fuel) -> CheckResult<Term> {
    match (n, m) {
        (Term::Var(i), Term::Var(j)) => {
            if i != j {
                return Err(Error::ty(TypeErrorKind::NeutralMismatch {
                    left: n.clone(),
                    right: m.clone(),
                }));
            }
            ctx.lookup(*i).ok_or_else(|| {
                Error::ty(TypeErrorKind::UnboundVar {
                    index: *i,
                    depth: ctx.len(),
                })
            })
        }

        (Term::App(f_n, arg_n), Term::App(f_m, arg_m)) => {
            let fn_ty = conv_ne(ctx, f_n, f_m, fuel)?;
            let fn_ty = whnf(&fn_ty, fuel)?;
            let Term::Pi(dom, cod) = fn_ty else {
                return Err(Error::IllFormed("applied neutral without a function type"));
            };
            conv_tm(ctx, arg_n, arg_m, &dom, fuel).at("argument")?;
            Ok(subst1(&cod, arg_n))
        }

        (Term::Fst(p_n), Term::Fst(p_m)) => {
            let (dom, _) = sigma_of(ctx, p_n, p_m, fuel)?;
            Ok(dom)
        }
        (Term::Snd(p_n), Term::Snd(p_m)) => {
            let (_, cod) = sigma_of(ctx, p_n, p_m, fuel)?;
            Ok(subst1(&cod, &Term::fst((**p_n).clone())))
        }

        (
            Term::NatElim {
                motive: motive_n,
                base: base_n,
                step: step_n,
                scrut: scrut_n,
            },
            Term::NatElim {
                motive: motive_m,
                base: base_m,
                step: step_m,
                scrut: scrut_m,
            },
        ) => {
            // Scrutinees first; their synthesized type is trusted to be Nat.
            let scrut_ty = conv_ne(ctx, scrut_n, scrut_m, fuel).at("scrutinee")?;
            debug_assert!(reduces_to_nat(&scrut_ty));
            let inner = ctx.extended(Term::Nat);
            conv_ty(&inner, motive_n, motive_m, fuel).at("motive")?;
            conv_tm(ctx, base_n, base_m, &subst1(motive_n, &Term::Zero), fuel).at("base")?;
            conv_tm(ctx, step_n, step_m, &nat_elim_step_ty(motive_n), fuel).at("step")?;
            Ok(subst1(motive_n, scrut_n))
        }

        (
            Term::IdElim {
                ty: ty_n,
                lhs: lhs_n,
                motive: motive_n,
                base: base_n,
                rhs: rhs_n,
                proof: proof_n,
            },
            Term::IdElim {
                ty: ty_m,
                lhs: lhs_m,
                motive: motive_m,
                base: base_m,
                rhs: rhs_m,
                proof: proof_m,
            },
        ) => {
            conv_ne(ctx, proof_n, proof_m, fuel).at("proof")?;
            conv_ty(ctx, ty_n, ty_m, fuel).at("type")?;
            conv_tm(ctx, lhs_n, lhs_m, ty_n, fuel).at("left endpoint")?;
            let inner = id_motive_context(ctx, ty_n, lhs_n);
            conv_ty(&inner, motive_n, motive_m, fuel).at("motive")?;
            let base_ty = id_elim_base_ty(ty_n, lhs_n, motive_n);
            conv_tm(ctx, base_n, base_m, &base_ty, fuel).at("base")?;
            conv_tm(ctx, rhs_n, rhs_m, ty_n, fuel).at("right endpoint")?;
            Ok(subst2(motive_n, rhs_n, proof_n))
        }

        (
            Term::EmptyElim {
                motive: motive_n,
                scrut: scrut_n,
            },
            Term::EmptyElim {
                motive: motive_m,
                scrut: scrut_m,
            },
        ) => {
            conv_ne(ctx, scrut_n, scrut_m, fuel).at("scrutinee")?;
            let inner = ctx.extended(Term::Empty);
            conv_ty(&inner, motive_n, motive_m, fuel).at("motive")?;
            Ok(subst1(motive_n, scrut_n))
        }

        _ => Err(Error::ty(TypeErrorKind::NeutralMismatch {
            left: n.clone(),
            right: m.clone(),
        })),
    }
}

fn sigma_of(ctx: &Context, p_n: &Term, p_m: &Term, fuel: &mut Fuel) -> CheckResult<(Term, Term)> {
    let pair_ty = conv_ne(ctx, p_n, p_m, fuel)?;
    let pair_ty = whnf(&pair_ty, fuel)?;
    match pair_ty {
        Term::Sigma(dom, cod) => Ok((*dom, *cod)),
        _ => Err(Error::IllFormed("projected neutral without a pair type")),
    }
}

#[cfg(debug_assertions)]
fn reduces_to_nat(ty: &Term) -> bool {
    // Scratch budget: debug assertions must not drain the shared fuel.
    matches!(whnf(ty, &mut Fuel::new(100_000)), Ok(Term::Nat))
}

#[cfg(not(debug_assertions))]
fn reduces_to_nat(_: &Term) -> bool {
    true
}
