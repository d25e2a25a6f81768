//! One PASS/FAIL line per acceptance criterion; exits non-zero if any
//! criterion fails.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use multirel::finite::{builtin_model, check_table_axioms, complements_of, reify_multirelations};
use multirel::io::{load_env, parse_env, parse_relation_literal, render_env, save_env};
use multirel::laws::{
    self, list_laws, multirelation_from_index, random_multirelation, Method, Polarity, Status, SuiteConfig, SweepMode,
    System,
};
use multirel::{modal, star, Execution, Multirelation, SubIdentity, Universe};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check, Duration);

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn rel(u: &Universe, pairs: &[(&str, &[&str])]) -> Multirelation {
    Multirelation::from_named(u, pairs.iter().map(|(a, s)| (*a, s.iter().copied()))).unwrap()
}

fn worked_examples() -> Check {
    let u = Universe::new(["a", "b", "c"]).unwrap();
    let r = rel(&u, &[("a", &["b", "c"])]);
    let s = rel(&u, &[("b", &["b"])]);
    let t = rel(&u, &[("b", &["b"]), ("c", &[])]);
    let cases = [
        ("R·S", r.seq_compose(&s).unwrap(), Multirelation::empty(&u)),
        ("R·T", r.seq_compose(&t).unwrap(), rel(&u, &[("a", &["b"])])),
        ("T·S", t.seq_compose(&s).unwrap(), t.clone()),
    ];
    let r3 = rel(&u, &[("a", &["a", "b"])]);
    let s3 = rel(&u, &[("a", &["b", "c"]), ("b", &["b"])]);
    let t3 = rel(&u, &[("b", &[])]);
    let par = [
        ("R‖S", r3.par_compose(&s3).unwrap(), rel(&u, &[("a", &["a", "b", "c"])])),
        ("S‖T", s3.par_compose(&t3).unwrap(), rel(&u, &[("b", &["b"])])),
    ];
    for (name, got, want) in cases.iter().chain(&par) {
        ensure(got == want, || format!("{name} = {got}, expected {want}"))?;
    }
    ensure(
        common::to_rel(&cases[1].1) == common::seq(&common::to_rel(&r), &common::to_rel(&t)),
        || "oracle disagrees on R·T".into(),
    )?;
    Ok("5 values match".into())
}

fn counterexamples() -> Check {
    let report = laws::run_counterexamples().map_err(|e| e.to_string())?;
    for case in &report.cases {
        for c in &case.checks {
            ensure(c.passed, || format!("{}: {} = {}, expected {}", case.id, c.expression, c.observed, c.expected))?;
        }
    }
    for r in &report.refutations {
        ensure(r.status == Status::Refuted, || format!("{} not refuted", r.id))?;
    }
    let needed = [
        "right_annihilation",
        "seq_assoc",
        "seq_assoc_cube",
        "left_distr",
        "interaction_converse",
        "dia_additivity",
        "dia_strictness",
        "box_multiplicativity",
        "box_costrictness",
        "conjugation",
        "segerberg",
        "fixcounter",
    ];
    for id in needed {
        ensure(report.cases.iter().any(|c| c.id == id), || format!("case {id} missing"))?;
    }
    // Independent recomputation of the cube example.
    let cube = common::rel(&[(0, &[2]), (1, &[0, 2]), (2, &[1]), (2, &[2])]);
    let left = common::seq(&common::seq(&cube, &cube), &cube);
    let right = common::seq(&cube, &common::seq(&cube, &cube));
    ensure(left.len() == 11 && right.len() == 12 && left.is_subset(&right), || "cube sizes".into())?;
    let checks: usize = report.cases.iter().map(|c| c.checks.len()).sum();
    Ok(format!("{} cases, {checks} checks, {} refutations", report.cases.len(), report.refutations.len()))
}

fn soundness() -> Check {
    let mut summary = Vec::new();
    let runs = [
        (1, SweepMode::Exhaustive, u64::MAX),
        (2, SweepMode::Exhaustive, 1 << 16),
        (3, SweepMode::Random, 0),
    ];
    for (size, mode, limit) in runs {
        let config = SuiteConfig { size, mode, seed: 2024, samples: 500, exhaustive_limit: limit, ..SuiteConfig::default() };
        let report = laws::run_suite(&config).map_err(|e| e.to_string())?;
        if let Some(bad) = report.unexpected().next() {
            return Err(format!("|X|={size}: {} is {}", bad.id, bad.status.label()));
        }
        let valid: Vec<_> = report.results.iter().filter(|r| r.polarity == Polarity::Valid).collect();
        for r in &valid {
            let law = laws::law(&r.id).unwrap();
            let want_exhaustive = size == 1 || (size == 2 && law.arity() <= 2);
            ensure(!want_exhaustive || r.method == Method::Exhaustive, || format!("{} not exhaustive at |X|={size}", r.id))?;
            ensure(r.method == Method::Exhaustive || r.samples >= 500, || format!("{} has {} samples", r.id, r.samples))?;
        }
        summary.push(format!("|X|={size}: {} valid laws", valid.len()));
    }
    Ok(summary.join(", "))
}

fn oracle_equivalence() -> Check {
    let u = Universe::alphabetic(2).unwrap();
    let all: Vec<_> = (0..256).map(|i| multirelation_from_index(&u, i)).collect();
    let sets: Vec<_> = all.iter().map(common::to_rel).collect();
    let tests: Vec<_> = SubIdentity::all(&u).collect();
    for (r, rs) in all.iter().zip(&sets) {
        for (s, ss) in all.iter().zip(&sets) {
            let got = common::to_rel(&r.seq_compose(s).unwrap());
            ensure(got == common::seq(rs, ss), || format!("{r} ; {s}"))?;
        }
        for p in &tests {
            let dia = modal::diamond(r, p).unwrap();
            let bx = modal::box_(r, p).unwrap();
            ensure(dia == modal::diamond_direct(r, p).unwrap(), || format!("<{r}>{p}"))?;
            ensure(bx == modal::box_direct(r, p).unwrap(), || format!("[{r}]{p}"))?;
        }
    }
    let u3 = Universe::alphabetic(3).unwrap();
    let tests3: Vec<_> = SubIdentity::all(&u3).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for i in 0..1000 {
        let d = [0.5, 0.2, 0.08][i % 3];
        let r = random_multirelation(&u3, &mut rng, d);
        let s = random_multirelation(&u3, &mut rng, d);
        let got = common::to_rel(&r.seq_compose(&s).unwrap());
        ensure(got == common::seq(&common::to_rel(&r), &common::to_rel(&s)), || format!("{r} ; {s}"))?;
        let p = &tests3[i % tests3.len()];
        ensure(modal::diamond(&r, p).unwrap() == modal::diamond_direct(&r, p).unwrap(), || format!("<{r}>{p}"))?;
        ensure(modal::box_(&r, p).unwrap() == modal::box_direct(&r, p).unwrap(), || format!("[{r}]{p}"))?;
    }
    Ok("65536 pairs at |X|=2, 1000 at |X|=3".into())
}

fn star_laws() -> Check {
    let config = SuiteConfig { size: 3, mode: SweepMode::Random, seed: 77, samples: 300, ..SuiteConfig::default() };
    let report = laws::run_suite(&config).map_err(|e| e.to_string())?;
    let star_laws: Vec<_> =
        list_laws().iter().filter(|l| l.polarity == Polarity::Valid && l.uses_star()).map(|l| l.id).collect();
    for id in &star_laws {
        let r = report.results.iter().find(|r| r.id == *id).unwrap();
        ensure(r.status == Status::Pass && r.samples >= 200, || format!("{id}: {} after {}", r.status.label(), r.samples))?;
    }
    for id in ["star.unfold_eq", "star.induction", "star.fusion_incl", "star.subid_fusion", "star.simulation"] {
        ensure(star_laws.contains(&id), || format!("{id} missing"))?;
    }
    let u = Universe::alphabetic(3).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for i in 0..200 {
        let r = random_multirelation(&u, &mut rng, [0.3, 0.12, 0.05][i % 3]);
        let s = star::star(&r).unwrap();
        let t = star::star_trace(&r, star::default_max_steps(&u)).unwrap();
        let n = t.stabilized_at;
        ensure(star::approx_power(&r, n).unwrap() == s, || format!("R^({n}) != R* for {r}"))?;
        ensure(star::approx_power(&r, n + 1).unwrap() == s, || format!("R^({}) != R* for {r}", n + 1))?;
        ensure(common::to_rel(&s) == common::star(3, &common::to_rel(&r)), || format!("oracle star for {r}"))?;
    }
    let counter = laws::run_counterexamples().map_err(|e| e.to_string())?;
    let fix = counter.cases.iter().find(|c| c.id == "fixcounter").ok_or("fixcounter missing")?;
    ensure(fix.passed, || "fixcounter".into())?;
    Ok(format!("{} star laws on 300 samples, 200 stabilization instances", star_laws.len()))
}

fn finite_models() -> Check {
    let err = |e: multirel::Error| e.to_string();
    let chain4 = builtin_model("chain4").ok_or("chain4")?;
    let chain3 = builtin_model("chain3").ok_or("chain3")?;
    for m in [&chain4, &chain3] {
        for &s in &m.claims {
            ensure(check_table_axioms(m, s).map_err(err)?.passed, || format!("{} fails {s}", m.name))?;
        }
    }
    let [_, a, _, s] = [0, 1, 2, 3];
    let ys: Vec<usize> = (0..4).filter(|&y| chain4.plus[a][y] == s).collect();
    ensure(ys == vec![s], || format!("a + y = 1s for {ys:?}"))?;
    ensure(chain4.seq[s][a] == a && a != chain4.zero, || "1s;a".into())?;
    ensure(complements_of(&chain4, a).is_empty(), || "a has a complement".into())?;
    let (z3, s3, p3) = (0, 1, 2);
    let d3 = chain3.dom.as_ref().unwrap();
    ensure(d3[chain3.seq[p3][z3]] == z3 && z3 != s3, || "<1p>0".into())?;
    ensure(d3[s3] == s3 && d3[p3] == s3, || "d(1s), d(1p)".into())?;
    let mrel1 = reify_multirelations(&Universe::alphabetic(1).unwrap()).map_err(err)?;
    ensure(check_table_axioms(&mrel1, System::ApBiKleene).map_err(err)?.passed, || "mrel1 fails ap-bi-kleene".into())?;
    Ok("chain4, chain3, mrel1".into())
}

fn determinism() -> Check {
    let config = |execution| SuiteConfig {
        size: 3,
        mode: SweepMode::Random,
        seed: 31337,
        samples: 100,
        filter: Some("cdl.".into()),
        execution,
        ..SuiteConfig::default()
    };
    let run = |e| laws::run_suite(&config(e)).map_err(|e| e.to_string());
    let (a, b, c) = (run(Execution::Parallel)?, run(Execution::Parallel)?, run(Execution::Sequential)?);
    ensure(a.to_text() == b.to_text() && a.to_json() == b.to_json(), || "repeat run differs".into())?;
    ensure(a.to_text() == c.to_text(), || "sequential run differs".into())?;

    let canonical = "universe a b c\n\nrel P\nb -> { b }\nend\n\nrel R\na -> {}\na -> { b, c }\nc -> { a }\nend\n";
    let env = parse_env(canonical).map_err(|e| e.to_string())?;
    ensure(render_env(&env) == canonical, || format!("render differs:\n{}", render_env(&env)))?;
    let path = std::env::temp_dir().join(format!("multirel-acceptance-{}.txt", std::process::id()));
    save_env(&env, &path).map_err(|e| e.to_string())?;
    let back = load_env(&path).map_err(|e| e.to_string())?;
    let _ = std::fs::remove_file(&path);
    ensure(render_env(&back) == canonical, || "save then load differs".into())?;

    let u = env.universe().clone();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..200 {
        let r = random_multirelation(&u, &mut rng, 0.3);
        ensure(parse_relation_literal(&u, &r.to_string()).ok() == Some(r.clone()), || format!("{r} does not re-parse"))?;
    }
    Ok("suite reports identical, env and eval output round-trip".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("1 worked examples", worked_examples, Duration::from_secs(1)),
        ("2 counterexample registry", counterexamples, Duration::from_secs(5)),
        ("3 soundness sweeps", soundness, Duration::from_secs(300)),
        ("4 oracle equivalence", oracle_equivalence, Duration::from_secs(120)),
        ("5 star laws", star_laws, Duration::from_secs(120)),
        ("6 finite models", finite_models, Duration::from_secs(10)),
        ("7 determinism and round-trip", determinism, Duration::from_secs(60)),
    ];
    let mut failed = 0;
    for (name, run, budget) in criteria {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if took > budget => Err(format!("{detail}; over time budget {budget:?}")),
            other => other,
        };
        match outcome {
            Ok(detail) => println!("PASS criterion {name}: {detail} ({took:.2?})"),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {name}: {why} ({took:.2?})");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
