//! Benchmarks of the hot kernels: Smith reduction, homology orders,
//! bound sweeps, the positive-solution test, and resolution contracts.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use seifcalc_core::arith::{int, rat, IntMatrix};
use seifcalc_core::cuspidal::{classify_mpqm, m_bound, Manifold};
use seifcalc_core::plumbing::{
    cusp_resolution_graph, figure_one, graph_determinant, intersection_matrix, limak_solve,
    star_to_seifert,
};
use seifcalc_core::seifert::SeifertData;

fn gcd(mut a: i64, mut b: i64) -> i64 {
    while b != 0 {
        let t = a % b;
        a = std::mem::replace(&mut b, t);
    }
    a.abs()
}

fn smith_form(c: &mut Criterion) {
    // fixed pseudo-random 6x6 presentation
    let entries: Vec<i64> = (0..36)
        .map(|i| {
            let x = (i as i64 * 2654435761_i64) % 19;
            x - 9
        })
        .collect();
    let m = IntMatrix::new(6, 6, entries.into_iter().map(int).collect()).unwrap();
    c.bench_function("smith_6x6", |b| {
        b.iter(|| black_box(&m).smith_elementary_divisors())
    });
}

fn homology_order(c: &mut Criterion) {
    let data = SeifertData::from_pairs(0, &[(13, 6), (3, 2), (2, -1)]).unwrap();
    c.bench_function("h1_small_seifert", |b| {
        b.iter(|| black_box(&data).h1().unwrap().order())
    });
}

fn bound_sweep(c: &mut Criterion) {
    c.bench_function("m_bound_sweep_120", |b| {
        b.iter(|| {
            let mut total = int(0);
            for q in 3i64..=120 {
                for p in 2..q {
                    if gcd(p, q) == 1 {
                        total += m_bound(&int(p), &int(q)).unwrap();
                    }
                }
            }
            black_box(total)
        })
    });
}

fn positive_solution(c: &mut Criterion) {
    let q = intersection_matrix(&figure_one());
    let mut a = vec![rat(0, 1); 10];
    a[0] = rat(50, 1);
    a[1] = rat(23, 1);
    c.bench_function("limak_figure1", |b| {
        b.iter(|| limak_solve(black_box(&q), black_box(&a)).unwrap())
    });
}

fn resolution_contract(c: &mut Criterion) {
    c.bench_function("resolution_contract_2_13", |b| {
        b.iter(|| {
            let graph = cusp_resolution_graph(&int(2), &int(13), &int(24)).unwrap();
            let det = graph_determinant(&graph);
            let boundary = star_to_seifert(&graph, 0).unwrap();
            let class = classify_mpqm(&int(2), &int(13), &int(24)).unwrap();
            let same = match class.manifold {
                Manifold::Seifert(s) => boundary.same_seifert(&s).unwrap(),
                _ => false,
            };
            black_box((det, same))
        })
    });
}

criterion_group!(
    benches,
    smith_form,
    homology_order,
    bound_sweep,
    positive_solution,
    resolution_contract
);
criterion_main!(benches);
