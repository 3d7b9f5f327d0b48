use std::hint::black_box;
use std::sync::Arc;

use criterion::{criterion_group, criterion_main, Criterion};
use projring::hopf::trace_form;
use projring::linalg::bilinear_radical;
use projring::repn::Catalog;
use projring::{cyclo_field, Algebra, AlgebraSpec, CycloNum};

/// Dense-ish elements of Q(ζ_n): sums of several powers of q with small coefficients.
fn sample_elements(n: usize, count: usize) -> Vec<CycloNum> {
    let f = cyclo_field(n).unwrap();
    (0..count)
        .map(|i| {
            let mut x = f.zero();
            for k in 0..n {
                x = &x + &f.q_pow(k as i64).scale_int(((i * 7 + k * 3) % 11) as i64 - 5);
            }
            x
        })
        .collect()
}

fn cyclo_mul(c: &mut Criterion) {
    for n in [3, 8, 12] {
        let xs = sample_elements(n, 64);
        c.bench_function(&format!("cyclo_mul_n{n}"), |b| {
            b.iter(|| {
                let mut acc = xs[0].clone();
                for x in &xs[1..] {
                    acc = &acc * black_box(x);
                }
                acc
            })
        });
    }
}

fn gram_kernel(c: &mut Criterion) {
    let alg = Algebra::build(&AlgebraSpec::hpq(3, 0).unwrap()).unwrap();
    let gram = trace_form(&alg);
    c.bench_function("trace_form_radical_hpq3", |b| b.iter(|| bilinear_radical(black_box(&gram)).unwrap()));
}

fn decompose(c: &mut Criterion) {
    let alg = Arc::new(Algebra::build(&AlgebraSpec::hpq(3, 1).unwrap()).unwrap());
    let cat = Catalog::build(alg, 0).unwrap();
    let s = cat.simples().last().unwrap();
    let p = &cat.pims()[0];
    c.bench_function("decompose_simple_times_projective_h1_n3", |b| {
        b.iter(|| cat.decompose_tensor(black_box(s), black_box(p)).unwrap())
    });
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = cyclo_mul, gram_kernel, decompose
}
criterion_main!(benches);
