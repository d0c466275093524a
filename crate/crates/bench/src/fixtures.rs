//! Shared benchmark inputs, built through the frontend so they match what
//! the CLI actually processes.

use mltt_cli::{parse_term, resolve, Defs};
use mltt_core::Term;

pub const ARITH_SOURCE: &str = r"
def add : Nat -> Nat -> Nat :=
  \(m : Nat) => \(n : Nat) => natrec(x. Nat, n, \(k : Nat) => \(ih : Nat) => succ ih, m)
def mul : Nat -> Nat -> Nat :=
  \(m : Nat) => \(n : Nat) => natrec(x. Nat, zero, \(k : Nat) => \(ih : Nat) => add n ih, m)
def six : Nat := succ (succ (succ (succ (succ (succ zero)))))
def seven : Nat := succ six
def fortytwo : Nat := mul seven six
def check_42 : Id Nat fortytwo fortytwo := refl Nat fortytwo
";

/// A closed expression, resolved with no definitions in scope.
pub fn closed(text: &str) -> Term {
    let surface = parse_term(text).expect("fixture parses");
    resolve(&surface, &mut Vec::new(), &Defs::new()).expect("fixture resolves")
}

/// The recursor-encoded product `mul m n` as a closed term.
pub fn mul_term(m: u64, n: u64) -> Term {
    let step = Term::lam(Term::Nat, Term::lam(Term::Nat, Term::succ(Term::Var(0))));
    let add_body = Term::nat_elim(Term::Nat, Term::Var(0), step, Term::Var(1));
    let add = Term::lam(Term::Nat, Term::lam(Term::Nat, add_body));
    let mul_step = Term::lam(
        Term::Nat,
        Term::lam(
            Term::Nat,
            Term::app(Term::app(add, Term::Var(2)), Term::Var(0)),
        ),
    );
    let mul_body = Term::nat_elim(Term::Nat, Term::Zero, mul_step, Term::Var(1));
    let mul = Term::lam(Term::Nat, Term::lam(Term::Nat, mul_body));
    Term::app(Term::app(mul, Term::numeral(m)), Term::numeral(n))
}
