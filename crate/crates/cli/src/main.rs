//! `multirel`: evaluate terms, sweep laws, replay counterexamples and
//! check table models.
//!
//! Exit status: 0 when every check came out as expected, 1 when some law
//! or model check did not, 2 on usage, input or evaluation errors.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use multirel::finite::{self, Constraint, SearchConfig};
use multirel::io::{load_env, render_single};
use multirel::laws::{self, SuiteConfig, SweepMode, System};
use multirel::{eval_term, parse_term, star, Execution};

#[derive(Parser)]
#[command(name = "multirel", version, about = "Multirelation algebra workbench")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a term over the relations of an environment file.
    Eval {
        #[arg(long)]
        env: PathBuf,
        #[arg(long)]
        term: String,
        /// Print a `rel` block in the environment file format instead of
        /// the one-line form.
        #[arg(long)]
        block: bool,
        /// Relation name used with `--block`.
        #[arg(long, default_value = "result")]
        name: String,
    },
    /// Check the law registry on all or random environments.
    Laws {
        #[arg(long, default_value_t = 2)]
        size: usize,
        #[arg(long, default_value = "exhaustive")]
        mode: SweepMode,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 500)]
        samples: usize,
        /// Only laws whose id starts with this prefix.
        #[arg(long)]
        filter: Option<String>,
        #[arg(long)]
        json: bool,
        /// Run on one thread.
        #[arg(long)]
        sequential: bool,
    },
    /// Replay the stored counterexamples and displayed computations.
    Counterexamples {
        #[arg(long)]
        json: bool,
    },
    /// Compute the star of a relation by fixpoint iteration.
    Star {
        #[arg(long)]
        env: PathBuf,
        #[arg(long)]
        rel: String,
        /// Print every iterate of the ascending chain.
        #[arg(long)]
        trace: bool,
    },
    /// Built-in table models, table checks and bounded model search.
    Models {
        /// Print and check the built-in models.
        #[arg(long, conflicts_with_all = ["check", "search"])]
        builtin: bool,
        /// Check a model file against `--system`.
        #[arg(long, value_name = "FILE", conflicts_with = "search", requires = "system")]
        check: Option<PathBuf>,
        /// Search for models of `--system` with `--size` elements.
        #[arg(long, requires_all = ["system", "size"])]
        search: bool,
        #[arg(long)]
        system: Option<System>,
        #[arg(long)]
        size: Option<usize>,
        /// `any`, `uncomplemented-test` or `violate:<law-id>`.
        #[arg(long, default_value = "any")]
        constraint: Constraint,
        #[arg(long, default_value_t = 16)]
        budget: usize,
        #[arg(long)]
        json: bool,
    },
}

type Outcome = Result<bool, multirel::Error>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Eval { env, term, block, name } => {
            let env = load_env(&env)?;
            let t = parse_term(&term)?;
            let r = eval_term(&t, &env)?;
            if block {
                print!("{}", render_single(&name, &r));
            } else {
                println!("{r}");
            }
            Ok(true)
        }
        Command::Laws { size, mode, seed, samples, filter, json, sequential } => {
            let config = SuiteConfig {
                size,
                mode,
                seed,
                samples,
                filter,
                execution: if sequential { Execution::Sequential } else { Execution::Parallel },
                ..SuiteConfig::default()
            };
            let report = laws::run_suite(&config)?;
            if json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.to_text());
            }
            for r in report.unexpected() {
                eprintln!("unexpected: {} ({})", r.id, r.status.label());
            }
            Ok(report.passed)
        }
        Command::Counterexamples { json } => {
            let report = laws::run_counterexamples()?;
            if json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.to_text());
            }
            Ok(report.passed)
        }
        Command::Star { env, rel, trace } => {
            let env = load_env(&env)?;
            let r = env.lookup(&rel)?;
            let t = star::star_trace(r, star::default_max_steps(env.universe()))?;
            let mut out = String::new();
            if trace {
                for (i, x) in t.iterates.iter().enumerate() {
                    let _ = writeln!(out, "x{i} = {x}");
                }
            }
            let _ = writeln!(out, "stabilized at x{}", t.stabilized_at);
            let _ = writeln!(out, "{rel}* = {}", t.limit());
            print!("{out}");
            Ok(true)
        }
        Command::Models { builtin, check, search, system, size, constraint, budget, json } => {
            if let Some(path) = check {
                let text = std::fs::read_to_string(&path)
                    .map_err(|e| multirel::Error::Invalid(format!("{}: {e}", path.display())))?;
                let model = finite::parse_algebra(&text)?;
                let report = finite::check_table_axioms(&model, system.expect("required by clap"))?;
                if json {
                    println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
                } else {
                    print!("{}", report.to_text());
                }
                Ok(report.passed)
            } else if search {
                let mut config = SearchConfig::new(
                    system.expect("required by clap"),
                    size.expect("required by clap"),
                    constraint,
                );
                config.budget = budget;
                let result = finite::search_models(&config)?;
                if json {
                    println!("{}", serde_json::to_string_pretty(&result).expect("result serializes"));
                } else {
                    for m in &result.models {
                        println!("{}", finite::render_algebra(m));
                    }
                    println!(
                        "search system={} size={} constraint={}: {} models, {} candidates, {}",
                        result.system,
                        result.size,
                        result.constraint,
                        result.models.len(),
                        result.candidates,
                        if result.exhausted { "exhausted" } else { "budget reached" }
                    );
                }
                Ok(true)
            } else if builtin {
                builtin_models(json)
            } else {
                Err(multirel::Error::Invalid("models needs one of --builtin, --check FILE, --search".into()))
            }
        }
    }
}

fn builtin_models(json: bool) -> Outcome {
    let models = finite::builtin_models();
    let mut passed = true;
    let mut reports = Vec::new();
    for m in &models {
        for &s in &m.claims {
            let r = finite::check_table_axioms(m, s)?;
            passed &= r.passed;
            reports.push(r);
        }
    }
    if json {
        let v = serde_json::json!({ "models": models, "checks": reports });
        println!("{}", serde_json::to_string_pretty(&v).expect("models serialize"));
    } else {
        for m in &models {
            println!("{}", finite::render_algebra(m));
        }
        for r in &reports {
            println!("{} {} {}", if r.passed { "PASS" } else { "FAIL" }, r.model, r.system);
        }
    }
    Ok(passed)
}
