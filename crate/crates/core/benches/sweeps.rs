use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use multirel::finite::{search_models, Constraint, SearchConfig};
use multirel::laws::{run_suite, SuiteConfig, SweepMode, System};
use multirel::Execution;

const STRATEGIES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn law_sweeps(c: &mut Criterion) {
    let mut g = c.benchmark_group("law_sweep");
    g.sample_size(10);
    let cases = [
        ("exhaustive_x2_domain", SuiteConfig { size: 2, filter: Some("dp.".into()), ..SuiteConfig::default() }),
        (
            "random_x3_all",
            SuiteConfig { size: 3, mode: SweepMode::Random, samples: 200, ..SuiteConfig::default() },
        ),
    ];
    for (name, base) in &cases {
        for (label, execution) in STRATEGIES {
            let config = SuiteConfig { execution, ..base.clone() };
            g.bench_with_input(BenchmarkId::new(*name, label), &config, |b, cfg| {
                b.iter(|| run_suite(cfg).unwrap())
            });
        }
    }
    g.finish();
}

fn model_search(c: &mut Criterion) {
    let mut g = c.benchmark_group("model_search");
    g.sample_size(10);
    for (label, execution) in STRATEGIES {
        let mut config = SearchConfig::new(System::DpTrioid, 3, Constraint::Any);
        config.budget = 10_000;
        config.execution = execution;
        g.bench_with_input(BenchmarkId::new("dp_trioid_3", label), &config, |b, cfg| {
            b.iter(|| search_models(cfg).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, law_sweeps, model_search);
criterion_main!(benches);
