use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use modcount::coloring::{count_colorings_bruteforce_with, count_colorings_folklore_with, count_colorings_rank_with};
use modcount::cse::count_cse_treedp_with;
use modcount::fp::PrimeModulus;
use modcount::graph::{seeded_random_graph, td_from_ordering, ColorLists, Graph, LinearArrangement};
use modcount::tutte::{rational, tutte_eval_with};
use modcount::Exec;

const SCHEDULES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

/// Grid with `w` columns: its row-major order has cutwidth `w`.
fn grid(w: usize, h: usize) -> Graph {
    let id = |r: usize, c: usize| (r * w + c + 1) as u32;
    let mut edges = Vec::new();
    for r in 0..h {
        for c in 0..w {
            if c + 1 < w {
                edges.push((id(r, c), id(r, c + 1)));
            }
            if r + 1 < h {
                edges.push((id(r, c), id(r + 1, c)));
            }
        }
    }
    Graph::new(w * h, edges).unwrap()
}

fn coloring(c: &mut Criterion) {
    let g = grid(5, 6);
    let a = LinearArrangement::identity(g.n());
    let lists = ColorLists::full(g.n(), 4);
    let p = PrimeModulus::new(3).unwrap();
    let mut group = c.benchmark_group("coloring");
    group.sample_size(10);
    for (name, exec) in SCHEDULES {
        group.bench_with_input(BenchmarkId::new("folklore", name), &exec, |b, &e| {
            b.iter(|| count_colorings_folklore_with(black_box(&g), &lists, &a, Some(p), e).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("rank", name), &exec, |b, &e| {
            b.iter(|| count_colorings_rank_with(black_box(&g), &lists, &a, p, e).unwrap())
        });
    }
    let small = seeded_random_graph(10, 0.3, 1);
    let small_lists = ColorLists::full(10, 4);
    for (name, exec) in SCHEDULES {
        group.bench_with_input(BenchmarkId::new("brute", name), &exec, |b, &e| {
            b.iter(|| count_colorings_bruteforce_with(black_box(&small), &small_lists, e).unwrap())
        });
    }
    group.finish();
}

fn connectivity(c: &mut Criterion) {
    let g = grid(4, 6);
    let td = td_from_ordering(&g, &LinearArrangement::identity(g.n())).unwrap();
    let p = PrimeModulus::new(3).unwrap();
    let t = seeded_random_graph(9, 0.45, 3);
    let (x, y) = (rational(2, 1), rational(3, 2));
    let mut group = c.benchmark_group("connectivity");
    group.sample_size(10);
    for (name, exec) in SCHEDULES {
        group.bench_with_input(BenchmarkId::new("cse_treedp", name), &exec, |b, &e| {
            b.iter(|| count_cse_treedp_with(black_box(&g), &td, p, e).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("tutte", name), &exec, |b, &e| {
            b.iter(|| tutte_eval_with(black_box(&t), &x, &y, e).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, coloring, connectivity);
criterion_main!(benches);
