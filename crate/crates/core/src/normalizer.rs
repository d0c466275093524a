//! Deep, type-directed normalization to eta-long normal form.
//!
//! This is the differential-testing oracle for the conversion module: two
//! terms are convertible exactly when their eta-long normal forms are
//! syntactically equal. It is deliberately naive recursive reification and
//! shares only the syntax module and [`whnf`] with the rest of the kernel.
//! In particular it rebuilds the eliminator rule types itself rather than
//! borrowing the typing module's helpers, so a slip in either copy shows up
//! as a differential failure instead of hiding in both.

use crate::error::{CheckResult, Error, TypeErrorKind};
use crate::fuel::Fuel;
use crate::reduction::whnf;
use crate::syntax::{alpha_eq, lift, subst1, subst2, Context, Term};

/// Deep normal form of a type: weak-head reduce, then recursively normalize
/// the components, codomains under extended contexts. Neutral types are
/// normalized spine-wise.
pub fn nf_ty(ctx: &Context, ty: &Term, fuel: &mut Fuel) -> CheckResult<Term> {
    let ty = whnf(ty, fuel)?;
    match &ty {
        Term::Univ | Term::Nat | Term::Empty => Ok(ty),
        Term::Pi(dom, cod) => {
            let dom_nf = nf_ty(ctx, dom, fuel)?;
            let cod_nf = nf_ty(&ctx.extended((**dom).clone()), cod, fuel)?;
            Ok(Term::pi(dom_nf, cod_nf))
        }
        Term::Sigma(dom, cod) => {
            let dom_nf = nf_ty(ctx, dom, fuel)?;
            let cod_nf = nf_ty(&ctx.extended((**dom).clone()), cod, fuel)?;
            Ok(Term::sigma(dom_nf, cod_nf))
        }
        Term::Id(base, lhs, rhs) => {
            let base_nf = nf_ty(ctx, base, fuel)?;
            let lhs_nf = nf_tm(ctx, lhs, base, fuel)?;
            let rhs_nf = nf_tm(ctx, rhs, base, fuel)?;
            Ok(Term::id(base_nf, lhs_nf, rhs_nf))
        }
        Term::Var(_)
        | Term::App(..)
        | Term::Fst(..)
        | Term::Snd(..)
        | Term::NatElim { .. }
        | Term::IdElim { .. }
        | Term::EmptyElim { .. } => Ok(nf_ne(ctx, &ty, fuel)?.0),
        _ => Err(Error::ty(TypeErrorKind::NotAType { term: ty.clone() })),
    }
}

/// Eta-long deep normal form of `t` at type `ty`: reification is directed by
/// the type, so functions always come out as lambdas and pairs as pairs.
pub fn nf_tm(ctx: &Context, t: &Term, ty: &Term, fuel: &mut Fuel) -> CheckResult<Term> {
    let ty = whnf(ty, fuel)?;
    match &ty {
        Term::Pi(dom, cod) => {
            let dom_nf = nf_ty(ctx, dom, fuel)?;
            let inner = ctx.extended((**dom).clone());
            let applied = Term::app(lift(t, 1, 0), Term::Var(0));
            let body_nf = nf_tm(&inner, &applied, cod, fuel)?;
            Ok(Term::lam(dom_nf, body_nf))
        }
        Term::Sigma(dom, cod) => {
            let dom_nf = nf_ty(ctx, dom, fuel)?;
            let cod_nf = nf_ty(&ctx.extended((**dom).clone()), cod, fuel)?;
            let fst_nf = nf_tm(ctx, &Term::fst(t.clone()), dom, fuel)?;
            let snd_ty = subst1(cod, &Term::fst(t.clone()));
            let snd_nf = nf_tm(ctx, &Term::snd(t.clone()), &snd_ty, fuel)?;
            Ok(Term::pair(dom_nf, cod_nf, fst_nf, snd_nf))
        }
        Term::Nat => {
            let t = whnf(t, fuel)?;
            match &t {
                Term::Zero => Ok(Term::Zero),
                Term::Succ(pred) => Ok(Term::succ(nf_tm(ctx, pred, &Term::Nat, fuel)?)),
                _ => neutral_or_ill_formed(ctx, &t, fuel),
            }
        }
        Term::Univ => nf_ty(ctx, t, fuel),
        Term::Id(..) => {
            let t = whnf(t, fuel)?;
            match &t {
                // The original annotation is normalized, not replaced by the
                // Id components.
                Term::Refl(ann, tm) => {
                    let ann_nf = nf_ty(ctx, ann, fuel)?;
                    let tm_nf = nf_tm(ctx, tm, ann, fuel)?;
                    Ok(Term::refl(ann_nf, tm_nf))
                }
                _ => neutral_or_ill_formed(ctx, &t, fuel),
            }
        }
        Term::Empty => {
            let t = whnf(t, fuel)?;
            neutral_or_ill_formed(ctx, &t, fuel)
        }
        Term::Var(_)
        | Term::App(..)
        | Term::Fst(..)
        | Term::Snd(..)
        | Term::NatElim { .. }
        | Term::IdElim { .. }
        | Term::EmptyElim { .. } => {
            let t = whnf(t, fuel)?;
            neutral_or_ill_formed(ctx, &t, fuel)
        }
        _ => Err(Error::IllFormed("normalization at a non-type")),
    }
}

fn neutral_or_ill_formed(ctx: &Context, t: &Term, fuel: &mut Fuel) -> CheckResult<Term> {
    match t {
        Term::Var(_)
        | Term::App(..)
        | Term::Fst(..)
        | Term::Snd(..)
        | Term::NatElim { .. }
        | Term::IdElim { .. }
        | Term::EmptyElim { .. } => Ok(nf_ne(ctx, t, fuel)?.0),
        _ => Err(Error::IllFormed("canonical term at an incompatible type")),
    }
}

/// Normalizes a stuck spine, synthesizing its type on the way up so each
/// eliminator argument can be normalized at the right type. Returns the
/// normal form together with the synthesized type.
fn nf_ne(ctx: &Context, t: &Term, fuel: &mut Fuel) -> CheckResult<(Term, Term)> {
    match t {
        Term::Var(index) => {
            let ty = ctx.lookup(*index).ok_or_else(|| {
                Error::ty(TypeErrorKind::UnboundVar {
                    index: *index,
                    depth: ctx.len(),
                })
            })?;
            Ok((Term::Var(*index), ty))
        }
        Term::App(func, arg) => {
            let (func_nf, func_ty) = nf_ne(ctx, func, fuel)?;
            let func_ty = whnf(&func_ty, fuel)?;
            let Term::Pi(dom, cod) = func_ty else {
                return Err(Error::IllFormed("applied neutral without a function type"));
            };
            let arg_nf = nf_tm(ctx, arg, &dom, fuel)?;
            Ok((Term::app(func_nf, arg_nf), subst1(&cod, arg)))
        }
        Term::Fst(pair) => {
            let (pair_nf, dom, _) = nf_ne_sigma(ctx, pair, fuel)?;
            Ok((Term::fst(pair_nf), dom))
        }
        Term::Snd(pair) => {
            let (pair_nf, _, cod) = nf_ne_sigma(ctx, pair, fuel)?;
            Ok((Term::snd(pair_nf), subst1(&cod, &Term::fst((**pair).clone()))))
        }
        Term::NatElim {
            motive,
            base,
            step,
            scrut,
        } => {
            let (scrut_nf, _) = nf_ne(ctx, scrut, fuel)?;
            let inner = ctx.extended(Term::Nat);
            let motive_nf = nf_ty(&inner, motive, fuel)?;
            let base_nf = nf_tm(ctx, base, &subst1(motive, &Term::Zero), fuel)?;
            // The step's rule type, rebuilt from scratch:
            // Pi(Nat, Pi(motive, motive[Succ #1])).
            let step_ty = Term::pi(
                Term::Nat,
                Term::pi(
                    (**motive).clone(),
                    subst1(&lift(motive, 2, 1), &Term::succ(Term::Var(1))),
                ),
            );
            let step_nf = nf_tm(ctx, step, &step_ty, fuel)?;
            Ok((
                Term::nat_elim(motive_nf, base_nf, step_nf, scrut_nf),
                subst1(motive, scrut),
            ))
        }
        Term::IdElim {
            ty,
            lhs,
            motive,
            base,
            rhs,
            proof,
        } => {
            let (proof_nf, _) = nf_ne(ctx, proof, fuel)?;
            let ty_nf = nf_ty(ctx, ty, fuel)?;
            let lhs_nf = nf_tm(ctx, lhs, ty, fuel)?;
            let inner = ctx
                .extended((**ty).clone())
                .extended(Term::id(lift(ty, 1, 0), lift(lhs, 1, 0), Term::Var(0)));
            let motive_nf = nf_ty(&inner, motive, fuel)?;
            let base_ty = subst2(motive, lhs, &Term::refl((**ty).clone(), (**lhs).clone()));
            let base_nf = nf_tm(ctx, base, &base_ty, fuel)?;
            let rhs_nf = nf_tm(ctx, rhs, ty, fuel)?;
            Ok((
                Term::id_elim(ty_nf, lhs_nf, motive_nf, base_nf, rhs_nf, proof_nf),
                subst2(motive, rhs, proof),
            ))
        }
        Term::EmptyElim { motive, scrut } => {
            let (scrut_nf, _) = nf_ne(ctx, scrut, fuel)?;
            let inner = ctx.extended(Term::Empty);
            let motive_nf = nf_ty(&inner, motive, fuel)?;
            Ok((
                Term::empty_elim(motive_nf, scrut_nf),
                subst1(motive, scrut),
            ))
        }
        _ => Err(Error::IllFormed("not a neutral spine")),
    }
}

fn nf_ne_sigma(ctx: &Context, pair: &Term, fuel: &mut Fuel) -> CheckResult<(Term, Term, Term)> {
    let (pair_nf, pair_ty) = nf_ne(ctx, pair, fuel)?;
    let pair_ty = whnf(&pair_ty, fuel)?;
    match pair_ty {
        Term::Sigma(dom, cod) => Ok((pair_nf, *dom, *cod)),
        _ => Err(Error::IllFormed("projected neutral without a pair type")),
    }
}

/// The oracle: two terms are convertible at `ty` iff their eta-long normal
/// forms are syntactically equal.
pub fn oracle_conv(
    ctx: &Context,
    t: &Term,
    u: &Term,
    ty: &Term,
    fuel: &mut Fuel,
) -> CheckResult<bool> {
    let t_nf = nf_tm(ctx, t, ty, fuel)?;
    let u_nf = nf_tm(ctx, u, ty, fuel)?;
    Ok(alpha_eq(&t_nf, &u_nf))
}
