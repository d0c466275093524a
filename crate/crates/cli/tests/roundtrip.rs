//! print -> parse -> resolve is the identity up to alpha-equivalence on
//! well-scoped terms.

use mltt_cli::{parse_term, print, resolve, Defs};
use mltt_core::testing::TermGen;
use mltt_core::{alpha_eq, Term};
use proptest::prelude::*;

fn free_names(n: usize) -> Vec<String> {
    ["u", "v", "w", "r"][..n].iter().map(|s| s.to_string()).collect()
}

proptest! {
    #[test]
    fn print_parse_resolve_round_trips(seed in any::<u64>(), free in 0usize..4) {
        let mut g = TermGen::new(seed);
        let t = g.raw_term(4, free);
        let names = free_names(free);
        let text = print(&t, &names);
        let parsed = parse_term(&text)
            .unwrap_or_else(|e| panic!("printed `{text}` does not re-parse: {e}"));
        let mut scope = names.clone();
        let resolved = resolve(&parsed, &mut scope, &Defs::new())
            .unwrap_or_else(|e| panic!("printed `{text}` does not re-resolve: {e}"));
        prop_assert!(alpha_eq(&resolved, &t), "`{}` resolved to {}, expected {}", text, resolved, t);
    }

    #[test]
    fn well_typed_terms_round_trip_too(seed in any::<u64>()) {
        let mut g = TermGen::new(seed);
        let (ty, t) = g.typed_closed(4);
        for term in [ty, t] {
            let text = print(&term, &[]);
            let parsed = parse_term(&text).unwrap();
            let resolved = resolve(&parsed, &mut Vec::new(), &Defs::new()).unwrap();
            prop_assert!(alpha_eq(&resolved, &term));
        }
    }
}

#[test]
fn round_trips_are_exercised_at_depth() {
    // A deeper soak than the default proptest case count reaches.
    let mut g = TermGen::new(0xfeed);
    for i in 0..500 {
        let free = i % 4;
        let t = g.raw_term(5, free);
        let names = free_names(free);
        let text = print(&t, &names);
        let parsed = parse_term(&text).expect("re-parses");
        let mut scope = names.clone();
        let resolved = resolve(&parsed, &mut scope, &Defs::new()).expect("re-resolves");
        assert!(alpha_eq(&resolved, &t), "case {i}: `{text}`");
    }
}

#[test]
fn printer_handles_var_shadowing_names() {
    // A free variable named like a pool candidate: the fresh binder must
    // avoid it.
    let t = Term::lam(Term::Nat, Term::app(Term::Var(1), Term::Var(0)));
    let names = vec!["x".to_string()];
    let text = print(&t, &names);
    let parsed = parse_term(&text).unwrap();
    let mut scope = names.clone();
    let resolved = resolve(&parsed, &mut scope, &Defs::new()).unwrap();
    assert!(alpha_eq(&resolved, &t));
}
