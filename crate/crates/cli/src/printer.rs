//! Pretty-printer from core terms back to surface syntax.
//!
//! The output re-parses and re-resolves to an alpha-equal term: printing
//! tracks the same precedence levels as the parser and generates fresh
//! binder names that avoid everything in scope, so nothing is captured.

use crate::lexer::is_keyword;
use mltt_core::syntax::occurs;
use mltt_core::Term;
use std::fmt::Write;

/// Precedence of the hole a term is printed into.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Prec {
    /// Anywhere a full term is allowed: bodies, arrow codomains, commas.
    Top,
    /// Left of an arrow: applications bind, binders need parens.
    Operand,
    /// Application position: only atoms survive without parens.
    Atom,
}

/// Renders `t` with the given names for its free variables, outermost first.
/// Out-of-scope indices render as `?i`; they cannot re-parse, matching the
/// precondition that `t` is well-scoped under `names`.
pub fn print(t: &Term, names: &[String]) -> String {
    let mut env: Vec<String> = names.to_vec();
    let mut out = String::new();
    go(t, &mut env, Prec::Top, &mut out);
    out
}

fn go(t: &Term, env: &mut Vec<String>, prec: Prec, out: &mut String) {
    match t {
        Term::Var(i) => {
            if *i < env.len() {
                out.push_str(&env[env.len() - 1 - i]);
            } else {
                let _ = write!(out, "?{i}");
            }
        }
        Term::Univ => out.push_str("Type"),
        Term::Nat => out.push_str("Nat"),
        Term::Empty => out.push_str("Empty"),
        Term::Zero => out.push_str("zero"),
        Term::Succ(pred) => prefix1(out, env, prec, "succ", pred),
        Term::Fst(p) => prefix1(out, env, prec, "fst", p),
        Term::Snd(p) => prefix1(out, env, prec, "snd", p),
        Term::Pi(dom, cod) => {
            parens_if(prec > Prec::Top, out, |out| {
                if occurs(cod, 0) {
                    let name = fresh(env);
                    out.push('(');
                    out.push_str(&name);
                    out.push_str(" : ");
                    go(dom, env, Prec::Top, out);
                    out.push_str(") -> ");
                    env.push(name);
                    go(cod, env, Prec::Top, out);
                    env.pop();
                } else {
                    go(dom, env, Prec::Operand, out);
                    out.push_str(" -> ");
                    // The binder is unused; a placeholder keeps indices right.
                    env.push("_".to_string());
                    go(cod, env, Prec::Top, out);
                    env.pop();
                }
            });
        }
        Term::Sigma(dom, cod) => {
            parens_if(prec > Prec::Top, out, |out| {
                let name = fresh(env);
                out.push('(');
                out.push_str(&name);
                out.push_str(" : ");
                go(dom, env, Prec::Top, out);
                out.push_str(") ** ");
                env.push(name);
                go(cod, env, Prec::Top, out);
                env.pop();
            });
        }
        Term::Lam(dom, body) => {
            parens_if(prec > Prec::Top, out, |out| {
                let name = fresh(env);
                out.push_str("\\(");
                out.push_str(&name);
                out.push_str(" : ");
                go(dom, env, Prec::Top, out);
                out.push_str(") => ");
                env.push(name);
                go(body, env, Prec::Top, out);
                env.pop();
            });
        }
        Term::App(func, arg) => {
            parens_if(prec > Prec::Operand, out, |out| {
                go(func, env, Prec::Operand, out);
                out.push(' ');
                go(arg, env, Prec::Atom, out);
            });
        }
        Term::Pair { dom, cod, fst, snd } => {
            out.push_str("pair(");
            go(dom, env, Prec::Top, out);
            out.push_str(", ");
            let name = fresh(env);
            out.push_str(&name);
            out.push_str(". ");
            env.push(name);
            go(cod, env, Prec::Top, out);
            env.pop();
            out.push_str(", ");
            go(fst, env, Prec::Top, out);
            out.push_str(", ");
            go(snd, env, Prec::Top, out);
            out.push(')');
        }
        Term::NatElim {
            motive,
            base,
            step,
            scrut,
        } => {
            out.push_str("natrec(");
            let name = fresh(env);
            out.push_str(&name);
            out.push_str(". ");
            env.push(name);
            go(motive, env, Prec::Top, out);
            env.pop();
            out.push_str(", ");
            go(base, env, Prec::Top, out);
            out.push_str(", ");
            go(step, env, Prec::Top, out);
            out.push_str(", ");
            go(scrut, env, Prec::Top, out);
            out.push(')');
        }
        Term::Id(ty, lhs, rhs) => {
            parens_if(prec > Prec::Operand, out, |out| {
                out.push_str("Id ");
                go(ty, env, Prec::Atom, out);
                out.push(' ');
                go(lhs, env, Prec::Atom, out);
                out.push(' ');
                go(rhs, env, Prec::Atom, out);
            });
        }
        Term::Refl(ty, tm) => {
            parens_if(prec > Prec::Operand, out, |out| {
                out.push_str("refl ");
                go(ty, env, Prec::Atom, out);
                out.push(' ');
                go(tm, env, Prec::Atom, out);
            });
        }
        Term::IdElim {
            ty,
            lhs,
            motive,
            base,
            rhs,
            proof,
        } => {
            out.push_str("idrec(");
            go(ty, env, Prec::Top, out);
            out.push_str(", ");
            go(lhs, env, Prec::Top, out);
            out.push_str(", ");
            let rhs_name = fresh(env);
            env.push(rhs_name.clone());
            let proof_name = fresh(env);
            env.pop();
            out.push_str(&rhs_name);
            out.push(' ');
            out.push_str(&proof_name);
            out.push_str(". ");
            env.push(rhs_name);
            env.push(proof_name);
            go(motive, env, Prec::Top, out);
            env.pop();
            env.pop();
            out.push_str(", ");
            go(base, env, Prec::Top, out);
            out.push_str(", ");
            go(rhs, env, Prec::Top, out);
            out.push_str(", ");
            go(proof, env, Prec::Top, out);
            out.push(')');
        }
        Term::EmptyElim { motive, scrut } => {
            out.push_str("exfalso(");
            let name = fresh(env);
            out.push_str(&name);
            out.push_str(". ");
            env.push(name);
            go(motive, env, Prec::Top, out);
            env.pop();
            out.push_str(", ");
            go(scrut, env, Prec::Top, out);
            out.push(')');
        }
    }
}

fn prefix1(out: &mut String, env: &mut Vec<String>, prec: Prec, kw: &str, arg: &Term) {
    parens_if(prec > Prec::Operand, out, |out| {
        out.push_str(kw);
        out.push(' ');
        go(arg, env, Prec::Atom, out);
    });
}

fn parens_if(cond: bool, out: &mut String, body: impl FnOnce(&mut String)) {
    if cond {
        out.push('(');
        body(out);
        out.push(')');
    } else {
        body(out);
    }
}

/// A binder name not used by anything in scope and not a keyword. Fresh names
/// never collide with outer names, so re-resolution cannot capture.
fn fresh(env: &[String]) -> String {
    const POOL: [&str; 12] = ["x", "y", "z", "a", "b", "c", "f", "g", "h", "p", "q", "n"];
    for cand in POOL {
        if !env.iter().any(|n| n == cand) {
            return cand.to_string();
        }
    }
    for i in 1.. {
        let cand = format!("x{i}");
        if !is_keyword(&cand) && !env.contains(&cand) {
            return cand;
        }
    }
    unreachable!()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse_term;
    use crate::resolve::{resolve, Defs};
    use mltt_core::alpha_eq;

    fn round_trip(t: &Term, names: &[&str]) {
        let names: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        let text = print(t, &names);
        let parsed = parse_term(&text)
            .unwrap_or_else(|e| panic!("printed `{text}` does not re-parse: {e}"));
        let mut scope = names.clone();
        let resolved = resolve(&parsed, &mut scope, &Defs::new())
            .unwrap_or_else(|e| panic!("printed `{text}` does not re-resolve: {e}"));
        assert!(alpha_eq(&resolved, t), "`{text}` resolved to {resolved}, not {t}");
    }

    #[test]
    fn prints_zero() {
        assert_eq!(print(&Term::Zero, &[]), "zero");
    }

    #[test]
    fn prints_non_dependent_pi_with_arrow_sugar() {
        let t = Term::pi(Term::Nat, Term::Nat);
        assert_eq!(print(&t, &[]), "Nat -> Nat");
    }

    #[test]
    fn prints_dependent_pi_with_a_binder() {
        // The polymorphic identity type: only the outer binder is referenced,
        // so the inner function type keeps the arrow sugar.
        let t = Term::pi(Term::Univ, Term::pi(Term::Var(0), Term::Var(1)));
        assert_eq!(print(&t, &[]), "(x : Type) -> x -> x");
        round_trip(&t, &[]);

        let t = Term::pi(Term::Nat, Term::id(Term::Nat, Term::Var(0), Term::Var(0)));
        assert_eq!(print(&t, &[]), "(x : Nat) -> Id Nat x x");
        round_trip(&t, &[]);
    }

    #[test]
    fn fresh_names_avoid_the_scope() {
        let t = Term::lam(Term::Nat, Term::app(Term::Var(1), Term::Var(0)));
        assert_eq!(print(&t, &["x".into()]), "\\(y : Nat) => x y");
    }

    #[test]
    fn nested_arrows_parenthesize_on_the_left() {
        let t = Term::pi(Term::pi(Term::Nat, Term::Nat), Term::Nat);
        assert_eq!(print(&t, &[]), "(Nat -> Nat) -> Nat");
        round_trip(&t, &[]);
    }

    #[test]
    fn round_trips_assorted_terms() {
        let samples: Vec<(Term, Vec<&str>)> = vec![
            (Term::numeral(3), vec![]),
            (Term::lam(Term::Nat, Term::Var(0)), vec![]),
            (Term::app(Term::app(Term::Var(0), Term::Zero), Term::Var(1)), vec!["g", "f"]),
            (
                Term::pair(Term::Nat, Term::Nat, Term::Zero, Term::numeral(2)),
                vec![],
            ),
            (
                Term::nat_elim(
                    Term::Nat,
                    Term::Zero,
                    Term::lam(Term::Nat, Term::lam(Term::Nat, Term::succ(Term::Var(0)))),
                    Term::numeral(2),
                ),
                vec![],
            ),
            (
                Term::id_elim(
                    Term::Nat,
                    Term::Zero,
                    Term::id(Term::Nat, Term::Var(1), Term::Zero),
                    Term::refl(Term::Nat, Term::Zero),
                    Term::Zero,
                    Term::refl(Term::Nat, Term::Zero),
                ),
                vec![],
            ),
            (
                Term::empty_elim(Term::Nat, Term::Var(0)),
                vec!["e"],
            ),
            (
                Term::sigma(Term::Nat, Term::id(Term::Nat, Term::Var(0), Term::Var(0))),
                vec![],
            ),
            // Application whose argument is a lambda needs parentheses.
            (
                Term::app(Term::Var(0), Term::lam(Term::Nat, Term::Var(0))),
                vec!["f"],
            ),
            // succ of an application: the argument is parenthesized.
            (
                Term::succ(Term::app(Term::Var(0), Term::Zero)),
                vec!["f"],
            ),
        ];
        for (t, names) in samples {
            round_trip(&t, &names);
        }
    }
}
