//! Bidirectional type checking: inference synthesizes a type for an
//! annotated term, checking compares an inferred type against an expected
//! one through conversion.
//!
//! Contract style for all routines here: the context (and for [`check`] the
//! expected type) are inputs the caller guarantees well-formed; the term is
//! the subject, validated by the routine; a returned type is guaranteed
//! well-formed in the context. Inputs are never re-checked on the hot path;
//! [`check_ctx`] exists for entry points that start from raw data.

use crate::conversion::conv_ty;
use crate::error::{At, CheckResult, Error, TypeErrorKind};
use crate::fuel::Fuel;
use crate::reduction::whnf;
use crate::syntax::{lift, subst1, subst2, Context, Term};

/// Checks that every entry of the context is a well-formed type in its
/// prefix. Exposed for entry points; never called from rule premises.
pub fn check_ctx(ctx: &Context, fuel: &mut Fuel) -> CheckResult<()> {
    let mut prefix = Context::empty();
    for entry in ctx.entries() {
        wf_ty(&prefix, entry, fuel)?;
        prefix = prefix.extended(entry.clone());
    }
    Ok(())
}

/// Checks that `ty` is a well-formed type in `ctx`. Types may be large:
/// `Univ` itself and Pi/Sigma/Id over large components are accepted here
/// even though they are not terms of `Univ`.
pub fn wf_ty(ctx: &Context, ty: &Term, fuel: &mut Fuel) -> CheckResult<()> {
    let ty = whnf(ty, fuel)?;
    match &ty {
        Term::Univ | Term::Nat | Term::Empty => Ok(()),
        Term::Pi(dom, cod) | Term::Sigma(dom, cod) => {
            wf_ty(ctx, dom, fuel).at("domain")?;
            wf_ty(&ctx.extended((**dom).clone()), cod, fuel).at("codomain")
        }
        Term::Id(base, lhs, rhs) => {
            wf_ty(ctx, base, fuel).at("type")?;
            check(ctx, lhs, base, fuel).at("left endpoint")?;
            check(ctx, rhs, base, fuel).at("right endpoint")
        }
        Term::Var(_)
        | Term::App(..)
        | Term::Fst(..)
        | Term::Snd(..)
        | Term::NatElim { .. }
        | Term::IdElim { .. }
        | Term::EmptyElim { .. } => check(ctx, &ty, &Term::Univ, fuel),
        _ => Err(Error::ty(TypeErrorKind::NotAType { term: ty.clone() })),
    }
}

/// Infers a type for `t`. Every well-typed term of the calculus infers: the
/// annotations on `Lam`, `Pair` and the eliminators make inference complete.
pub fn infer(ctx: &Context, t: &Term, fuel: &mut Fuel) -> CheckResult<Term> {
    match t {
        Term::Var(index) => ctx.lookup(*index).ok_or_else(|| {
            Error::ty(TypeErrorKind::UnboundVar {
                index: *index,
                depth: ctx.len(),
            })
        }),

        // One universe: Type is a type, never a term.
        Term::Univ => Err(Error::ty(TypeErrorKind::UnivHasNoType)),
        Term::Nat | Term::Empty => Ok(Term::Univ),

        // Pi and Sigma are terms of Univ only when fully small.
        Term::Pi(dom, cod) | Term::Sigma(dom, cod) => {
            check(ctx, dom, &Term::Univ, fuel).at("domain")?;
            let inner = ctx.extended((**dom).clone());
            check(&inner, cod, &Term::Univ, fuel).at("codomain")?;
            Ok(Term::Univ)
        }
        Term::Id(base, lhs, rhs) => {
            check(ctx, base, &Term::Univ, fuel).at("type")?;
            check(ctx, lhs, base, fuel).at("left endpoint")?;
            check(ctx, rhs, base, fuel).at("right endpoint")?;
            Ok(Term::Univ)
        }

        Term::Lam(dom, body) => {
            wf_ty(ctx, dom, fuel).at("domain")?;
            let inner = ctx.extended((**dom).clone());
            let cod = infer(&inner, body, fuel).at("body")?;
            Ok(Term::pi((**dom).clone(), cod))
        }
        Term::App(func, arg) => {
            let func_ty = infer_red(ctx, func, fuel).at("function")?;
            let Term::Pi(dom, cod) = func_ty else {
                return Err(Error::ty(TypeErrorKind::ExpectedPi {
                    term: (**func).clone(),
                    found: func_ty,
                }));
            };
            check(ctx, arg, &dom, fuel).at("argument")?;
            Ok(subst1(&cod, arg))
        }

        Term::Pair { dom, cod, fst, snd } => {
            wf_ty(ctx, dom, fuel).at("domain")?;
            let inner = ctx.extended((**dom).clone());
            wf_ty(&inner, cod, fuel).at("codomain")?;
            check(ctx, fst, dom, fuel).at("first component")?;
            check(ctx, snd, &subst1(cod, fst), fuel).at("second component")?;
            Ok(Term::sigma((**dom).clone(), (**cod).clone()))
        }
        Term::Fst(pair) => {
            let (dom, _) = infer_sigma(ctx, pair, fuel)?;
            Ok(dom)
        }
        Term::Snd(pair) => {
            let (_, cod) = infer_sigma(ctx, pair, fuel)?;
            Ok(subst1(&cod, &Term::fst((**pair).clone())))
        }

        Term::Zero => Ok(Term::Nat),
        Term::Succ(pred) => {
            check(ctx, pred, &Term::Nat, fuel).at("predecessor")?;
            Ok(Term::Nat)
        }
        Term::NatElim {
            motive,
            base,
            step,
            scrut,
        } => {
            let inner = ctx.extended(Term::Nat);
            wf_ty(&inner, motive, fuel).at("motive")?;
            check(ctx, base, &subst1(motive, &Term::Zero), fuel).at("base")?;
            check(ctx, step, &nat_elim_step_ty(motive), fuel).at("step")?;
            check(ctx, scrut, &Term::Nat, fuel).at("scrutinee")?;
            Ok(subst1(motive, scrut))
        }

        Term::Refl(ty, tm) => {
            wf_ty(ctx, ty, fuel).at("type")?;
            check(ctx, tm, ty, fuel).at("term")?;
            Ok(Term::id((**ty).clone(), (**tm).clone(), (**tm).clone()))
        }
        Term::IdElim {
            ty,
            lhs,
            motive,
            base,
            rhs,
            proof,
        } => {
            wf_ty(ctx, ty, fuel).at("type")?;
            check(ctx, lhs, ty, fuel).at("left endpoint")?;
            let inner = id_motive_context(ctx, ty, lhs);
            wf_ty(&inner, motive, fuel).at("motive")?;
            check(ctx, base, &id_elim_base_ty(ty, lhs, motive), fuel).at("base")?;
            check(ctx, rhs, ty, fuel).at("right endpoint")?;
            let id_ty = Term::id((**ty).clone(), (**lhs).clone(), (**rhs).clone());
            check(ctx, proof, &id_ty, fuel).at("proof")?;
            Ok(subst2(motive, rhs, proof))
        }

        Term::EmptyElim { motive, scrut } => {
            let inner = ctx.extended(Term::Empty);
            wf_ty(&inner, motive, fuel).at("motive")?;
            check(ctx, scrut, &Term::Empty, fuel).at("scrutinee")?;
            Ok(subst1(motive, scrut))
        }
    }
}

/// Reduced inference: infers a type and weak-head reduces it, exposing the
/// head constructor for rules that need a specific shape.
pub fn infer_red(ctx: &Context, t: &Term, fuel: &mut Fuel) -> CheckResult<Term> {
    let ty = infer(ctx, t, fuel)?;
    whnf(&ty, fuel)
}

/// Checks `t` against `expected`: infers a type and converts it to the
/// expected one. This is the single place typing appeals to conversion.
pub fn check(ctx: &Context, t: &Term, expected: &Term, fuel: &mut Fuel) -> CheckResult<()> {
    let inferred = infer(ctx, t, fuel)?;
    conv_ty(ctx, &inferred, expected, fuel)
}

fn infer_sigma(ctx: &Context, pair: &Term, fuel: &mut Fuel) -> CheckResult<(Term, Term)> {
    let pair_ty = infer_red(ctx, pair, fuel).at("pair")?;
    match pair_ty {
        Term::Sigma(dom, cod) => Ok((*dom, *cod)),
        found => Err(Error::ty(TypeErrorKind::ExpectedSigma {
            term: pair.clone(),
            found,
        })),
    }
}

/// The type of a recursor step for `motive`:
/// `Pi(Nat, Pi(motive, motive[Succ #1]))`, with context shifts so the result
/// is scoped where the recursor itself is.
pub fn nat_elim_step_ty(motive: &Term) -> Term {
    let succ_case = subst1(&lift(motive, 2, 1), &Term::succ(Term::Var(1)));
    Term::pi(Term::Nat, Term::pi(motive.clone(), succ_case))
}

/// The context in which a J motive is checked: the ambient context extended
/// with the right endpoint and a proof that the left endpoint equals it.
pub(crate) fn id_motive_context(ctx: &Context, ty: &Term, lhs: &Term) -> Context {
    let proof_ty = Term::id(lift(ty, 1, 0), lift(lhs, 1, 0), Term::Var(0));
    ctx.extended(ty.clone()).extended(proof_ty)
}

/// The type of a J base case: the motive at the left endpoint and `Refl`.
pub(crate) fn id_elim_base_ty(ty: &Term, lhs: &Term, motive: &Term) -> Term {
    let refl = Term::refl(ty.clone(), lhs.clone());
    subst2(motive, lhs, &refl)
}
