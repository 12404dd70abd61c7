use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use p3iso::enumerate::{enumerate, EnumSpec};
use p3iso::generators::random::eligible;
use p3iso::verify::{verify_enumerated, verify_stream};
use p3iso::{emit_graph6, isolate_p3_subcubic, Execution};
use rand::rngs::StdRng;
use rand::SeedableRng;

const MODES: [(&str, Execution); 2] = [
    ("sequential", Execution::Sequential),
    ("parallel", Execution::Parallel),
];

fn enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_connected_subcubic");
    group.sample_size(10);
    for n in [9, 10] {
        for (name, mode) in MODES {
            group.bench_with_input(BenchmarkId::new(name, n), &n, |b, &n| {
                b.iter(|| {
                    enumerate(&EnumSpec::connected_subcubic(n), mode, &|g| {
                        black_box(g);
                    })
                })
            });
        }
    }
    group.finish();
}

fn verification(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify_enumerated");
    group.sample_size(10);
    for (name, mode) in MODES {
        group.bench_function(BenchmarkId::new(name, 10), |b| {
            b.iter(|| verify_enumerated(1, 10, mode))
        });
    }
    group.finish();

    let mut corpus = String::new();
    let graphs = std::sync::Mutex::new(Vec::new());
    enumerate(
        &EnumSpec::connected_subcubic(11),
        Execution::Sequential,
        &|g| {
            if g.order() == 11 {
                graphs.lock().unwrap().push(emit_graph6(g));
            }
        },
    );
    let mut lines = graphs.into_inner().unwrap();
    lines.sort();
    for l in lines {
        corpus.push_str(&l);
        corpus.push('\n');
    }
    let mut group = c.benchmark_group("verify_stream_n11");
    group.sample_size(10);
    for (name, mode) in MODES {
        group.bench_function(name, |b| {
            b.iter(|| verify_stream(corpus.as_bytes(), 11..=11, mode).unwrap())
        });
    }
    group.finish();
}

fn construction(c: &mut Criterion) {
    let mut rng = StdRng::seed_from_u64(9);
    let graphs: Vec<_> = (0..50).map(|i| eligible(&mut rng, 16 + i)).collect();
    c.bench_function("isolate_random_eligible_16_65", |b| {
        b.iter(|| {
            for g in &graphs {
                black_box(isolate_p3_subcubic(g).unwrap());
            }
        })
    });
}

criterion_group!(benches, enumeration, verification, construction);
criterion_main!(benches);
