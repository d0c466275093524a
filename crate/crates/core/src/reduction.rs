//! Deterministic weak-head reduction, implemented as a stack machine over
//! elimination frames, plus classification of weak-head normal forms.
//!
//! The machine only fires redexes at the top of the term: it descends through
//! eliminators pushing frames, fires beta, projections and the recursor rules
//! when a canonical head meets a compatible frame, and rebuilds a neutral by
//! zipping when the head is a variable. Subterms are left untouched.

use crate::error::{CheckResult, Error};
use crate::fuel::Fuel;
use crate::syntax::{subst1, Term};

/// One elimination form with its scrutinee hole.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Frame {
    AppArg(Term),
    Fst,
    Snd,
    NatElim { motive: Term, base: Term, step: Term },
    IdElim { ty: Term, lhs: Term, motive: Term, base: Term, rhs: Term },
    EmptyElim { motive: Term },
}

impl Frame {
    /// Plugs `head` into the frame's scrutinee hole.
    pub fn wrap(self, head: Term) -> Term {
        match self {
            Frame::AppArg(arg) => Term::app(head, arg),
            Frame::Fst => Term::fst(head),
            Frame::Snd => Term::snd(head),
            Frame::NatElim { motive, base, step } => Term::nat_elim(motive, base, step, head),
            Frame::IdElim {
                ty,
                lhs,
                motive,
                base,
                rhs,
            } => Term::id_elim(ty, lhs, motive, base, rhs, head),
            Frame::EmptyElim { motive } => Term::empty_elim(motive, head),
        }
    }
}

/// Rebuilds a term by wrapping `head` in each frame, innermost first.
pub fn zip(head: Term, frames: &[Frame]) -> Term {
    frames.iter().fold(head, |t, f| f.clone().wrap(t))
}

/// How a term sits with respect to weak-head reduction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WhnfView<'a> {
    /// A canonical type former: `Univ`, `Pi`, `Sigma`, `Nat`, `Id` or `Empty`.
    CanonicalType(&'a Term),
    /// A canonical introduction form: `Lam`, `Pair`, `Zero`, `Succ` or `Refl`.
    CanonicalTerm(&'a Term),
    /// A spine of eliminators stuck on a variable, with no fireable redex
    /// along the spine.
    Neutral(&'a Term),
    /// The machine would still act on this term: either a head redex exists
    /// or the head elimination is ill-formed and the machine would reject it.
    NotWhnf,
}

/// Classifies a term without reducing it. `NotWhnf` is returned exactly when
/// [`whnf`] would not return the term unchanged.
pub fn classify(t: &Term) -> WhnfView<'_> {
    use Term::*;
    match t {
        Univ | Pi(..) | Sigma(..) | Nat | Id(..) | Empty => WhnfView::CanonicalType(t),
        Lam(..) | Pair { .. } | Zero | Succ(..) | Refl(..) => WhnfView::CanonicalTerm(t),
        Var(_) => WhnfView::Neutral(t),
        App(scrut, _) | Fst(scrut) | Snd(scrut) => stuck_on(scrut, t),
        NatElim { scrut, .. } | EmptyElim { scrut, .. } => stuck_on(scrut, t),
        IdElim { proof, .. } => stuck_on(proof, t),
    }
}

fn stuck_on<'a>(scrut: &'a Term, whole: &'a Term) -> WhnfView<'a> {
    match classify(scrut) {
        WhnfView::Neutral(_) => WhnfView::Neutral(whole),
        _ => WhnfView::NotWhnf,
    }
}

/// Reduces a term to weak-head normal form.
///
/// On success the result `t'` satisfies `t ~>* t'` and
/// `classify(t') != NotWhnf`. Fires one machine transition per fuel unit.
pub fn whnf(t: &Term, fuel: &mut Fuel) -> CheckResult<Term> {
    let mut head = t.clone();
    let mut stack: Vec<Frame> = Vec::new();
    loop {
        head = match head {
            // Descend through eliminators, pushing frames.
            Term::App(f, a) => {
                fuel.tick()?;
                stack.push(Frame::AppArg(*a));
                *f
            }
            Term::Fst(p) => {
                fuel.tick()?;
                stack.push(Frame::Fst);
                *p
            }
            Term::Snd(p) => {
                fuel.tick()?;
                stack.push(Frame::Snd);
                *p
            }
            Term::NatElim {
                motive,
                base,
                step,
                scrut,
            } => {
                fuel.tick()?;
                stack.push(Frame::NatElim {
                    motive: *motive,
                    base: *base,
                    step: *step,
                });
                *scrut
            }
            Term::IdElim {
                ty,
                lhs,
                motive,
                base,
                rhs,
                proof,
            } => {
                fuel.tick()?;
                stack.push(Frame::IdElim {
                    ty: *ty,
                    lhs: *lhs,
                    motive: *motive,
                    base: *base,
                    rhs: *rhs,
                });
                *proof
            }
            Term::EmptyElim { motive, scrut } => {
                fuel.tick()?;
                stack.push(Frame::EmptyElim { motive: *motive });
                *scrut
            }

            // A variable head is stuck: rebuild the spine and stop.
            Term::Var(i) => {
                let mut t = Term::Var(i);
                while let Some(frame) = stack.pop() {
                    fuel.tick()?;
                    t = frame.wrap(t);
                }
                return Ok(t);
            }

            // Canonical term heads: fire a redex or stop.
            Term::Lam(dom, body) => match stack.pop() {
                None => return Ok(Term::Lam(dom, body)),
                Some(Frame::AppArg(arg)) => {
                    fuel.tick()?;
                    subst1(&body, &arg)
                }
                Some(_) => return Err(Error::IllFormed("a function can only be applied")),
            },
            Term::Pair { dom, cod, fst, snd } => match stack.pop() {
                None => return Ok(Term::Pair { dom, cod, fst, snd }),
                Some(Frame::Fst) => {
                    fuel.tick()?;
                    *fst
                }
                Some(Frame::Snd) => {
                    fuel.tick()?;
                    *snd
                }
                Some(_) => return Err(Error::IllFormed("a pair can only be projected")),
            },
            Term::Zero => match stack.pop() {
                None => return Ok(Term::Zero),
                Some(Frame::NatElim { base, .. }) => {
                    fuel.tick()?;
                    base
                }
                Some(_) => return Err(Error::IllFormed("a numeral under a non-Nat eliminator")),
            },
            Term::Succ(n) => match stack.pop() {
                None => return Ok(Term::Succ(n)),
                Some(Frame::NatElim { motive, base, step }) => {
                    // The recursive call stays inside the step application; the
                    // loop keeps reducing it only while it is in head position.
                    fuel.tick()?;
                    let rec = Term::nat_elim(motive, base, step.clone(), (*n).clone());
                    Term::app(Term::app(step, *n), rec)
                }
                Some(_) => return Err(Error::IllFormed("a numeral under a non-Nat eliminator")),
            },
            Term::Refl(ty, tm) => match stack.pop() {
                None => return Ok(Term::Refl(ty, tm)),
                Some(Frame::IdElim { base, .. }) => {
                    fuel.tick()?;
                    base
                }
                Some(_) => return Err(Error::IllFormed("refl under a non-Id eliminator")),
            },

            // Canonical type heads cannot be eliminated at all.
            ty @ (Term::Univ | Term::Pi(..) | Term::Sigma(..) | Term::Nat | Term::Id(..)
            | Term::Empty) => {
                if stack.is_empty() {
                    return Ok(ty);
                }
                return Err(Error::IllFormed("a type former under an eliminator"));
            }
        };
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::Context;

    fn fuel() -> Fuel {
        Fuel::new(10_000)
    }

    /// `\(x : Nat) => x`
    fn nat_id() -> Term {
        Term::lam(Term::Nat, Term::Var(0))
    }

    /// The recursor-encoded addition program `\m n. natrec(_. Nat, n, \k ih. succ ih, m)`,
    /// applied to numerals.
    pub(crate) fn add(m: Term, n: Term) -> Term {
        let step = Term::lam(Term::Nat, Term::lam(Term::Nat, Term::succ(Term::Var(0))));
        let body = Term::nat_elim(Term::Nat, Term::Var(0), step, Term::Var(1));
        let add = Term::lam(Term::Nat, Term::lam(Term::Nat, body));
        Term::app(Term::app(add, m), n)
    }

    #[test]
    fn whnf_fires_single_beta() {
        let t = Term::app(nat_id(), Term::Zero);
        assert_eq!(whnf(&t, &mut fuel()), Ok(Term::Zero));
    }

    #[test]
    fn whnf_does_not_reduce_subterms() {
        let t = Term::succ(Term::app(nat_id(), Term::Zero));
        assert_eq!(whnf(&t, &mut fuel()), Ok(t));
    }

    #[test]
    fn whnf_projects_pairs() {
        let p = Term::pair(Term::Nat, Term::Nat, Term::Zero, Term::numeral(1));
        assert_eq!(whnf(&Term::fst(p.clone()), &mut fuel()), Ok(Term::Zero));
        assert_eq!(whnf(&Term::snd(p), &mut fuel()), Ok(Term::numeral(1)));
    }

    #[test]
    fn whnf_of_addition_exposes_one_successor() {
        // add(2, 1) head-reduces to succ(natrec(_. Nat, 1, step, 1)): the
        // recursive call is left unreduced because it is no longer in head
        // position. Its deep normal form is the numeral 3.
        let step = Term::lam(Term::Nat, Term::lam(Term::Nat, Term::succ(Term::Var(0))));
        let expected = Term::succ(Term::nat_elim(
            Term::Nat,
            Term::numeral(1),
            step,
            Term::numeral(1),
        ));
        let got = whnf(&add(Term::numeral(2), Term::numeral(1)), &mut fuel()).unwrap();
        assert_eq!(got, expected);
    }

    #[test]
    fn whnf_rejects_ill_formed_eliminations() {
        let t = Term::fst(Term::Zero);
        assert!(matches!(whnf(&t, &mut fuel()), Err(Error::IllFormed(_))));
        let t = Term::app(Term::Nat, Term::Zero);
        assert!(matches!(whnf(&t, &mut fuel()), Err(Error::IllFormed(_))));
    }

    #[test]
    fn whnf_runs_out_of_fuel() {
        let t = add(Term::numeral(2), Term::numeral(1));
        assert_eq!(whnf(&t, &mut Fuel::new(3)), Err(Error::OutOfFuel));
    }

    #[test]
    fn classify_examples() {
        assert!(matches!(classify(&nat_id()), WhnfView::CanonicalTerm(_)));
        let stuck = Term::app(Term::Var(0), Term::Zero);
        assert!(matches!(classify(&stuck), WhnfView::Neutral(_)));
        let redex = Term::app(nat_id(), Term::Zero);
        assert!(matches!(classify(&redex), WhnfView::NotWhnf));
        assert!(matches!(classify(&Term::Nat), WhnfView::CanonicalType(_)));
        // Ill-formed head eliminations classify as NotWhnf: the machine acts
        // on them too, by rejecting them.
        assert!(matches!(classify(&Term::fst(Term::Zero)), WhnfView::NotWhnf));
    }

    #[test]
    fn zip_examples() {
        assert_eq!(zip(Term::Var(0), &[]), Term::Var(0));
        assert_eq!(
            zip(Term::Var(0), &[Frame::AppArg(Term::Zero)]),
            Term::app(Term::Var(0), Term::Zero)
        );
        assert_eq!(
            zip(Term::Var(1), &[Frame::Fst, Frame::AppArg(Term::Zero)]),
            Term::app(Term::fst(Term::Var(1)), Term::Zero)
        );
    }

    #[test]
    fn whnf_is_identity_on_whnfs() {
        let samples = [
            Term::Nat,
            nat_id(),
            Term::numeral(2),
            Term::app(Term::Var(3), Term::Zero),
            Term::nat_elim(Term::Nat, Term::Zero, nat_id(), Term::Var(0)),
        ];
        for t in samples {
            assert!(!matches!(classify(&t), WhnfView::NotWhnf));
            assert_eq!(whnf(&t, &mut fuel()), Ok(t));
        }
    }

    #[test]
    fn fuel_monotonicity_on_a_sample() {
        let t = add(Term::numeral(2), Term::numeral(1));
        let mut exact = None;
        for budget in 0..200 {
            let mut f = Fuel::new(budget);
            match whnf(&t, &mut f) {
                Ok(v) => {
                    exact = Some((budget, v));
                    break;
                }
                Err(Error::OutOfFuel) => continue,
                Err(other) => panic!("unexpected failure: {other}"),
            }
        }
        let (needed, value) = exact.expect("200 steps suffice for add(2, 1)");
        for budget in needed..needed + 50 {
            let mut f = Fuel::new(budget);
            assert_eq!(whnf(&t, &mut f), Ok(value.clone()));
        }
    }

    #[test]
    fn zip_reconstructs_every_neutral_spine() {
        // Decompose a neutral into head and frames (innermost first) the
        // naive way, then zip back.
        fn spine(t: &Term) -> (Term, Vec<Frame>) {
            match t {
                Term::App(f, a) => {
                    let (head, mut frames) = spine(f);
                    frames.push(Frame::AppArg((**a).clone()));
                    (head, frames)
                }
                Term::Fst(p) => {
                    let (head, mut frames) = spine(p);
                    frames.push(Frame::Fst);
                    (head, frames)
                }
                Term::Snd(p) => {
                    let (head, mut frames) = spine(p);
                    frames.push(Frame::Snd);
                    (head, frames)
                }
                Term::NatElim {
                    motive,
                    base,
                    step,
                    scrut,
                } => {
                    let (head, mut frames) = spine(scrut);
                    frames.push(Frame::NatElim {
                        motive: (**motive).clone(),
                        base: (**base).clone(),
                        step: (**step).clone(),
                    });
                    (head, frames)
                }
                Term::IdElim {
                    ty,
                    lhs,
                    motive,
                    base,
                    rhs,
                    proof,
                } => {
                    let (head, mut frames) = spine(proof);
                    frames.push(Frame::IdElim {
                        ty: (**ty).clone(),
                        lhs: (**lhs).clone(),
                        motive: (**motive).clone(),
                        base: (**base).clone(),
                        rhs: (**rhs).clone(),
                    });
                    (head, frames)
                }
                Term::EmptyElim { motive, scrut } => {
                    let (head, mut frames) = spine(scrut);
                    frames.push(Frame::EmptyElim {
                        motive: (**motive).clone(),
                    });
                    (head, frames)
                }
                other => (other.clone(), Vec::new()),
            }
        }

        let mut g = crate::testing::TermGen::new(0x21b);
        let mut seen = 0;
        for _ in 0..2000 {
            let t = g.raw_term(5, 3);
            if !matches!(classify(&t), WhnfView::Neutral(_)) {
                continue;
            }
            let (head, frames) = spine(&t);
            assert!(matches!(head, Term::Var(_)));
            assert_eq!(zip(head, &frames), t);
            seen += 1;
        }
        assert!(seen > 50, "only {seen} neutrals generated");
    }

    #[test]
    fn lookup_in_context_is_independent_of_reduction() {
        // A context entry may itself be a redex; whnf exposes its head.
        let redex_ty = Term::app(Term::lam(Term::Univ, Term::Var(0)), Term::Nat);
        let ctx = Context::from_types([redex_ty]);
        let looked_up = ctx.lookup(0).unwrap();
        assert_eq!(whnf(&looked_up, &mut fuel()), Ok(Term::Nat));
    }
}
