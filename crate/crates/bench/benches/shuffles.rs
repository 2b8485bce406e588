use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use cshuffle_core::compat::{check_csc, check_sc};
use cshuffle_core::shuffle::{cyc_distribution, cyclic_shuffles, shuffles};
use cshuffle_core::{CycPerm, CycStatId, Perm, StatId};

fn enumerate(c: &mut Criterion) {
    let mut g = c.benchmark_group("shuffles");
    let cases: [(&[u32], &[u32]); 4] = [
        (&[3, 1, 4, 2], &[5, 7, 6]),
        (&[3, 1, 4, 2, 5], &[7, 9, 6, 8]),
        (&[3, 1, 6, 4, 2, 5], &[7, 9, 8]),
        (&[1, 4, 7, 6, 9, 10, 8, 2, 5, 3], &[11]),
    ];
    for (a, b) in cases {
        let (p, q) = (Perm::new(a.to_vec()).unwrap(), Perm::new(b.to_vec()).unwrap());
        let size = format!("{}+{}", p.len(), q.len());
        g.bench_with_input(BenchmarkId::new("linear", &size), &(p.clone(), q.clone()), |bch, (p, q)| {
            bch.iter(|| shuffles(black_box(p), black_box(q)).unwrap())
        });
        let (x, y) = (CycPerm::new(&p), CycPerm::new(&q));
        g.bench_with_input(BenchmarkId::new("cyclic", size), &(x, y), |bch, (x, y)| {
            bch.iter(|| cyclic_shuffles(black_box(x), black_box(y)).unwrap())
        });
    }
    g.finish();
}

fn distributions(c: &mut Criterion) {
    let x: CycPerm = "14769".parse().unwrap();
    let y: CycPerm = "2583".parse().unwrap();
    let classes = cyclic_shuffles(&x, &y).unwrap();
    let st: CycStatId = "ind:cmaj".parse().unwrap();
    c.bench_function("cyc_distribution ind:cmaj", |b| {
        b.iter(|| cyc_distribution(black_box(&st), &classes))
    });
}

fn checkers(c: &mut Criterion) {
    let mut g = c.benchmark_group("checkers");
    g.sample_size(10);
    let des: StatId = "des".parse().unwrap();
    g.bench_function("check_sc des n<=5", |b| b.iter(|| check_sc(black_box(&des), 5)));
    let cpkcdes: CycStatId = "cpk,cdes".parse().unwrap();
    g.bench_function("check_csc (cpk,cdes) n<=6", |b| b.iter(|| check_csc(black_box(&cpkcdes), 6)));
    g.finish();
}

criterion_group!(benches, enumerate, distributions, checkers);
criterion_main!(benches);
