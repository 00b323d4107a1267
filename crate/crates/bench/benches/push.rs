use std::hint::black_box;

use circbundle::sample::{random_reduced_word, trial_rng};
use circbundle::verify::push_identity;
use circbundle::{sigma, BundleContext, Conjugation, FreeWord, PushTable};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn table(c: &mut Criterion) {
    let mut group = c.benchmark_group("push_table");
    for g in [2usize, 3, 4] {
        group.bench_with_input(BenchmarkId::from_parameter(g), &g, |b, &g| {
            b.iter(|| PushTable::standard(black_box(g)).unwrap())
        });
    }
    group.finish();
}

fn push_words(c: &mut Criterion) {
    let mut group = c.benchmark_group("push_identity");
    for g in [2usize, 3] {
        let ctx = BundleContext::new(g, 1).unwrap();
        let t = PushTable::standard(g).unwrap();
        let mut rng = trial_rng(4, g as u64);
        let words: Vec<FreeWord> = (0..16)
            .map(|_| random_reduced_word(&mut rng, g, 6))
            .collect();
        group.bench_with_input(BenchmarkId::new("sigma_push", g), &words, |b, ws| {
            b.iter(|| {
                ws.iter()
                    .map(|w| {
                        sigma(&ctx, &t.push(black_box(w)).unwrap())
                            .unwrap()
                            .images()
                            .len()
                    })
                    .sum::<usize>()
            })
        });
        group.bench_with_input(BenchmarkId::new("check", g), &words, |b, ws| {
            b.iter(|| {
                ws.iter()
                    .filter(|w| push_identity(&ctx, &t, black_box(w), Conjugation::Left).is_ok())
                    .count()
            })
        });
    }
    group.finish();
}

criterion_group!(benches, table, push_words);
criterion_main!(benches);
