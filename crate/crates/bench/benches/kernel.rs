use criterion::{criterion_group, criterion_main, Criterion};
use mltt_bench::fixtures::{closed, mul_term, ARITH_SOURCE};
use mltt_cli::check_source;
use mltt_core::{conv_tm, infer, nf_tm, whnf, Context, Fuel, Term};

fn bench_whnf(c: &mut Criterion) {
    let product = mul_term(7, 6);
    c.bench_function("whnf mul 7 6", |b| {
        b.iter(|| whnf(std::hint::black_box(&product), &mut Fuel::new(1_000_000)).unwrap())
    });
}

fn bench_normalize(c: &mut Criterion) {
    let product = mul_term(7, 6);
    let ctx = Context::empty();
    c.bench_function("nf mul 7 6", |b| {
        b.iter(|| {
            nf_tm(
                &ctx,
                std::hint::black_box(&product),
                &Term::Nat,
                &mut Fuel::new(10_000_000),
            )
            .unwrap()
        })
    });
}

fn bench_check_file(c: &mut Criterion) {
    c.bench_function("check arithmetic file", |b| {
        b.iter(|| {
            check_source(std::hint::black_box(ARITH_SOURCE), &mut Fuel::new(1_000_000)).unwrap()
        })
    });
}

fn bench_infer(c: &mut Criterion) {
    let term = closed("\\(A : Type) => \\(f : A -> A) => \\(x : A) => f (f (f (f x)))");
    let ctx = Context::empty();
    c.bench_function("infer church four", |b| {
        b.iter(|| infer(&ctx, std::hint::black_box(&term), &mut Fuel::new(1_000_000)).unwrap())
    });
}

fn bench_eta_conversion(c: &mut Criterion) {
    // A higher-order eta check: the variable f against its two-level
    // expansion \g n. f g n, at (Nat -> Nat) -> Nat -> Nat.
    let pi = closed("(Nat -> Nat) -> Nat -> Nat");
    let ctx = Context::from_types([pi.clone()]);
    let f = Term::Var(0);
    let expansion = {
        let surface = mltt_cli::parse_term("\\(g : Nat -> Nat) => \\(n : Nat) => f0 g n").unwrap();
        let mut scope = vec!["f0".to_string()];
        mltt_cli::resolve(&surface, &mut scope, &mltt_cli::Defs::new()).unwrap()
    };
    c.bench_function("eta conversion at higher order", |b| {
        b.iter(|| {
            conv_tm(
                &ctx,
                std::hint::black_box(&f),
                std::hint::black_box(&expansion),
                &pi,
                &mut Fuel::new(1_000_000),
            )
            .unwrap()
        })
    });
}

criterion_group!(
    benches,
    bench_whnf,
    bench_normalize,
    bench_check_file,
    bench_infer,
    bench_eta_conversion
);
criterion_main!(benches);
