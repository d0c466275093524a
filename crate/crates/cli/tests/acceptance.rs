//! Acceptance suite: one test per shipped guarantee, each printing a
//! pass/fail line. Run with
//! `cargo test -p mltt-cli --test acceptance -- --nocapture`.

use mltt_core::testing::{head_reducts, TermGen};
use mltt_core::{
    alpha_eq, check, classify, conv_tm, conv_ty, infer, lift, nf_tm, oracle_conv, whnf, Context,
    Error, Fuel, Term, WhnfView,
};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::Instant;

const KERNEL_FUEL: u64 = 1_000_000;
const ORACLE_FUEL: u64 = 100_000_000;

fn fuel() -> Fuel {
    Fuel::new(KERNEL_FUEL)
}

fn oracle_fuel() -> Fuel {
    Fuel::new(ORACLE_FUEL)
}

fn corpus_dir(sub: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../corpus")
        .join(sub)
}

fn corpus_files(sub: &str) -> Vec<PathBuf> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(corpus_dir(sub))
        .unwrap_or_else(|e| panic!("missing corpus/{sub}: {e}"))
        .map(|entry| entry.unwrap().path())
        .filter(|p| p.extension().is_some_and(|ext| ext == "mltt"))
        .collect();
    files.sort();
    files
}

fn run_check(file: &Path, fuel: Option<u64>) -> i32 {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_mltt"));
    if let Some(n) = fuel {
        cmd.arg("--fuel").arg(n.to_string());
    }
    cmd.arg("check").arg(file);
    cmd.output()
        .expect("spawn mltt")
        .status
        .code()
        .expect("exit code")
}

/// Parses and resolves a corpus file through the frontend library.
fn load_defs(file: &Path) -> mltt_cli::Defs {
    let text = std::fs::read_to_string(file).unwrap();
    let defs = mltt_cli::parse_file(&text)
        .unwrap_or_else(|e| panic!("{}: {e}", file.display()));
    mltt_cli::resolve_file(&defs).unwrap_or_else(|e| panic!("{}: {e}", file.display()))
}

#[test]
fn acceptance_01_corpus_soundness() {
    let started = Instant::now();
    let well = corpus_files("well_typed");
    let ill: Vec<PathBuf> = corpus_files("ill_typed")
        .into_iter()
        .chain(corpus_files("consistency"))
        .collect();
    assert!(well.len() >= 30, "need >= 30 well-typed programs, have {}", well.len());
    assert!(ill.len() >= 20, "need >= 20 ill-typed programs, have {}", ill.len());
    for file in &well {
        let code = run_check(file, None);
        assert_eq!(code, 0, "{} should check (exit {code})", file.display());
    }
    for file in &ill {
        let code = run_check(file, None);
        assert_eq!(
            code,
            1,
            "{} should fail with a type error, not exit {code}",
            file.display()
        );
    }
    let elapsed = started.elapsed();
    assert!(
        elapsed.as_secs_f64() < 5.0,
        "corpus runs took {elapsed:?}, budget is 5 s"
    );
    println!(
        "criterion 1 (corpus soundness, {} well-typed / {} ill-typed in {elapsed:?}): pass",
        well.len(),
        ill.len()
    );
}

#[test]
fn acceptance_02_canonicity_at_nat() {
    let mut checked = 0;
    for file in corpus_files("well_typed") {
        let defs = load_defs(&file);
        for def in defs.iter() {
            let ty = whnf(&def.ty, &mut fuel()).unwrap();
            if ty != Term::Nat {
                continue;
            }
            let nf = nf_tm(&Context::empty(), &def.body, &Term::Nat, &mut oracle_fuel())
                .unwrap_or_else(|e| panic!("{} `{}`: {e}", file.display(), def.name));
            assert!(
                nf.as_numeral().is_some(),
                "{} `{}` normalized to {nf}, not a numeral",
                file.display(),
                def.name
            );
            checked += 1;
        }
    }
    assert!(checked > 0, "the corpus must contain closed Nat definitions");

    // The pinned arithmetic fact: 7 * 6 normalizes to exactly the numeral 42.
    let defs = load_defs(&corpus_dir("well_typed").join("mul_7_6.mltt"));
    let product = defs.get("mulSevenSix").expect("mulSevenSix is defined");
    let nf = nf_tm(&Context::empty(), &product.body, &Term::Nat, &mut oracle_fuel()).unwrap();
    assert_eq!(nf, Term::numeral(42), "7 * 6 must normalize to the numeral 42");
    println!("criterion 2 (canonicity at Nat, {checked} corpus numerals, 7*6 = 42 exact): pass");
}

#[test]
fn acceptance_03_subject_reduction() {
    let started = Instant::now();
    let mut g = TermGen::new(0x5eed_0003);
    let ctx = Context::empty();
    let mut passed = 0;
    for _ in 0..1000 {
        let (_, t) = g.typed_closed(4);
        let ty = infer(&ctx, &t, &mut fuel()).expect("generated terms infer");
        let reduced = whnf(&t, &mut fuel()).expect("closed well-typed terms reduce");
        check(&ctx, &reduced, &ty, &mut fuel()).expect("reducts keep their type");
        passed += 1;
    }
    let elapsed = started.elapsed();
    assert_eq!(passed, 1000);
    assert!(
        elapsed.as_secs_f64() < 30.0,
        "subject reduction took {elapsed:?}, budget is 30 s"
    );
    println!("criterion 3 (subject reduction, 1000/1000 in {elapsed:?}): pass");
}

#[test]
fn acceptance_04_oracle_equivalence() {
    let mut g = TermGen::new(0x5eed_0004);
    let ctx = Context::empty();
    let mut disagreements = 0;
    let mut convertible = 0;
    for i in 0..1000 {
        let (ty, t) = g.typed_closed(3);
        // Half the pairs are equal after reduction, half independent draws.
        let u = if i % 2 == 0 {
            g.wrap_redex(&t, &ty)
        } else {
            g.term_of(&ctx, &ty, 3)
        };
        let kernel = match conv_tm(&ctx, &t, &u, &ty, &mut fuel()) {
            Ok(()) => true,
            Err(Error::Type(_)) => false,
            Err(other) => panic!("kernel conversion failed abnormally: {other}"),
        };
        let oracle = oracle_conv(&ctx, &t, &u, &ty, &mut oracle_fuel())
            .expect("the oracle never fails on well-typed inputs");
        if kernel != oracle {
            disagreements += 1;
            eprintln!("disagreement (kernel {kernel}): {t}  vs  {u}  at {ty}");
        }
        if kernel {
            convertible += 1;
        }
    }
    assert_eq!(disagreements, 0, "{disagreements} oracle disagreements");
    // The mix must exercise both outcomes.
    assert!((100..=900).contains(&convertible), "degenerate mix: {convertible}/1000");
    println!(
        "criterion 4 (oracle equivalence, 1000 pairs, {convertible} convertible, 0 disagreements): pass"
    );
}

#[test]
fn acceptance_05_per_and_stability_laws() {
    let ctx = Context::empty();

    // Symmetry on 500 mixed pairs (plus reflexivity of each side).
    let mut g = TermGen::new(0x5eed_0505);
    let mut violations = 0;
    for i in 0..500 {
        let (ty, t) = g.typed_closed(3);
        let u = if i % 2 == 0 {
            g.wrap_redex(&t, &ty)
        } else {
            g.term_of(&ctx, &ty, 3)
        };
        if conv_tm(&ctx, &t, &t, &ty, &mut fuel()).is_err() {
            violations += 1;
        }
        let forward = conv_tm(&ctx, &t, &u, &ty, &mut fuel()).is_ok();
        let backward = conv_tm(&ctx, &u, &t, &ty, &mut fuel()).is_ok();
        if forward != backward {
            violations += 1;
        }
    }
    assert_eq!(violations, 0, "symmetry violations");

    // Transitivity on 200 triples built by chaining reductions.
    let mut g = TermGen::new(0x5eed_0550);
    for _ in 0..200 {
        let (ty, t1) = g.typed_closed(3);
        let t2 = g.wrap_redex(&t1, &ty);
        let t3 = g.wrap_redex(&t2, &ty);
        assert_eq!(conv_tm(&ctx, &t1, &t2, &ty, &mut fuel()), Ok(()));
        assert_eq!(conv_tm(&ctx, &t2, &t3, &ty, &mut fuel()), Ok(()));
        assert_eq!(
            conv_tm(&ctx, &t1, &t3, &ty, &mut fuel()),
            Ok(()),
            "transitivity broke: {t1} ~ {t3} at {ty}"
        );
    }

    // Stability under conversion of the type, 200 cases.
    let mut g = TermGen::new(0x5eed_0555);
    for _ in 0..200 {
        let (ty, t) = g.typed_closed(3);
        let u = g.wrap_redex(&t, &ty);
        let ty2 = g.wrap_redex(&ty, &Term::Univ);
        assert_eq!(conv_ty(&ctx, &ty, &ty2, &mut fuel()), Ok(()));
        assert_eq!(conv_tm(&ctx, &t, &u, &ty, &mut fuel()), Ok(()));
        assert_eq!(
            conv_tm(&ctx, &t, &u, &ty2, &mut fuel()),
            Ok(()),
            "conversion not stable under convertible types: {ty} ~ {ty2}"
        );
    }
    println!("criterion 5 (PER laws: 500 symmetry, 200 transitivity, 200 stability, 0 violations): pass");
}

#[test]
fn acceptance_06_eta_laws() {
    let mut g = TermGen::new(0x5eed_0006);
    // Functions: f converts to its pointwise abstraction.
    for i in 0..200 {
        let dom = g.small_type(2);
        let cod = g.small_type(2);
        let pi = Term::pi(dom.clone(), cod);
        let (ctx, f) = if i % 2 == 0 {
            (Context::from_types([pi.clone()]), Term::Var(0))
        } else {
            (Context::empty(), g.term_of(&Context::empty(), &pi, 3))
        };
        let expansion = Term::lam(dom, Term::app(lift(&f, 1, 0), Term::Var(0)));
        assert_eq!(
            conv_tm(&ctx, &f, &expansion, &pi, &mut fuel()),
            Ok(()),
            "eta failed for {f} at {pi}"
        );
    }
    // Pairs: p converts to the pair of its projections.
    let mut g = TermGen::new(0x5eed_0060);
    for i in 0..200 {
        let dom = g.small_type(2);
        let cod = g.small_type(2);
        let sigma = Term::sigma(dom.clone(), cod.clone());
        let (ctx, p) = if i % 2 == 0 {
            (Context::from_types([sigma.clone()]), Term::Var(0))
        } else {
            (Context::empty(), g.term_of(&Context::empty(), &sigma, 3))
        };
        let repacked = Term::pair(dom, cod, Term::fst(p.clone()), Term::snd(p.clone()));
        assert_eq!(
            conv_tm(&ctx, &p, &repacked, &sigma, &mut fuel()),
            Ok(()),
            "surjective pairing failed for {p} at {sigma}"
        );
    }
    println!("criterion 6 (eta laws, 200 Pi + 200 Sigma, 0 failures): pass");
}

#[test]
fn acceptance_07_reduction_determinism_and_idempotence() {
    let mut g = TermGen::new(0x5eed_0007);
    let mut violations = 0;
    for _ in 0..2000 {
        let t = g.raw_term(5, 3);
        if head_reducts(&t).len() > 1 {
            violations += 1;
            eprintln!("multiple head reducts: {t}");
        }
        if let Ok(v) = whnf(&t, &mut Fuel::new(10_000)) {
            if matches!(classify(&v), WhnfView::NotWhnf) {
                violations += 1;
            }
            if whnf(&v, &mut Fuel::new(10_000)) != Ok(v) {
                violations += 1;
                eprintln!("whnf not idempotent on {t}");
            }
        }
    }
    assert_eq!(violations, 0);
    println!("criterion 7 (one-step determinism + whnf idempotence on 2000 raw terms): pass");
}

#[test]
fn acceptance_08_consistency_smoke_test() {
    let candidates = corpus_files("consistency");
    assert!(
        candidates.len() >= 10,
        "need >= 10 candidate inhabitants of Empty, have {}",
        candidates.len()
    );
    for file in &candidates {
        // Via the CLI: a clean type error, not success, fuel exhaustion or an
        // internal error.
        let code = run_check(file, None);
        assert_eq!(code, 1, "{} must be rejected with exit 1", file.display());
        // And via the library: the failure really is a type error.
        let text = std::fs::read_to_string(file).unwrap();
        let defs = mltt_cli::parse_file(&text).unwrap();
        let resolved = mltt_cli::resolve_file(&defs).unwrap();
        let ctx = Context::empty();
        let accepted = resolved.iter().all(|def| {
            mltt_core::wf_ty(&ctx, &def.ty, &mut fuel()).is_ok()
                && check(&ctx, &def.body, &def.ty, &mut fuel()).is_ok()
        });
        assert!(!accepted, "{} was accepted: Empty became inhabited", file.display());
    }
    println!(
        "criterion 8 (consistency smoke test, {} candidates all rejected): pass",
        candidates.len()
    );
}

#[test]
fn acceptance_09_fuel_behavior() {
    // Under the default budget every corpus file behaves as in criterion 1;
    // that is re-asserted there. With a budget of 10 machine steps the
    // arithmetic programs must fail with OutOfFuel (exit 3), and nothing may
    // sneak through with a wrong answer: well-typed files only ever exit 0
    // (genuinely checked, by fuel monotonicity) or 3.
    let arithmetic = ["add.mltt", "mul.mltt", "arith.mltt", "mul_7_6.mltt", "fib.mltt"];
    for name in arithmetic {
        let code = run_check(&corpus_dir("well_typed").join(name), Some(10));
        assert_eq!(code, 3, "{name} with --fuel 10 must run out of fuel, got exit {code}");
    }
    for file in corpus_files("well_typed") {
        let code = run_check(&file, Some(10));
        assert!(
            code == 0 || code == 3,
            "{} with --fuel 10 exited {code}; only 0 or 3 are sound",
            file.display()
        );
        if code == 0 {
            // No wrong answers: anything accepted under tiny fuel is also
            // accepted under the default budget.
            assert_eq!(run_check(&file, None), 0);
        }
    }
    println!("criterion 9 (fuel behavior: arithmetic exhausts --fuel 10, no wrong answers): pass");
}

#[test]
fn acceptance_10_frontend_round_trip() {
    let names: Vec<String> = ["u", "v", "w"].iter().map(|s| s.to_string()).collect();
    let mut g = TermGen::new(0x5eed_0010);
    let mut failures = 0;
    for i in 0..1000 {
        let free = i % 4;
        let t = g.raw_term(4, free);
        let scope: Vec<String> = names[..free].to_vec();
        let text = mltt_cli::print(&t, &scope);
        let reparsed = match mltt_cli::parse_term(&text) {
            Ok(s) => s,
            Err(e) => {
                failures += 1;
                eprintln!("does not re-parse: `{text}` ({e})");
                continue;
            }
        };
        let mut scope2 = scope.clone();
        match mltt_cli::resolve(&reparsed, &mut scope2, &mltt_cli::Defs::new()) {
            Ok(resolved) if alpha_eq(&resolved, &t) => {}
            Ok(resolved) => {
                failures += 1;
                eprintln!("round trip drifted: `{text}` gave {resolved}, expected {t}");
            }
            Err(e) => {
                failures += 1;
                eprintln!("does not re-resolve: `{text}` ({e})");
            }
        }
    }
    assert_eq!(failures, 0);
    println!("criterion 10 (frontend round-trip on 1000 terms, 0 failures): pass");
}
