//! Sweeps of the law registry over generated environments.

use std::fmt::{self, Write as _};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand::Rng;
use serde::Serialize;

use super::generate::{exhaustive_count, multirelation_from_index, random_multirelation, random_subidentity};
use super::{list_laws, Law, Polarity, VarKind};
use crate::algebra::MrelAlgebra;
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::io::{parse_env, render_env};
use crate::mrel::{Multirelation, SubIdentity};
use crate::term::{eval_in, Environment};
use crate::universe::{Mask, Universe};

const CHUNK: usize = 256;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SweepMode {
    /// Enumerate every assignment where that stays under the limit,
    /// sample otherwise.
    Exhaustive,
    Random,
}

impl fmt::Display for SweepMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SweepMode::Exhaustive => "exhaustive",
            SweepMode::Random => "random",
        })
    }
}

impl std::str::FromStr for SweepMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exhaustive" => Ok(SweepMode::Exhaustive),
            "random" => Ok(SweepMode::Random),
            _ => Err(Error::Invalid(format!("unknown sweep mode `{s}`"))),
        }
    }
}

#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub size: usize,
    pub mode: SweepMode,
    pub seed: u64,
    /// Random environments per law.
    pub samples: usize,
    /// Only laws whose id starts with this prefix.
    pub filter: Option<String>,
    pub execution: Execution,
    /// Largest number of assignments enumerated in exhaustive mode.
    pub exhaustive_limit: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            size: 2,
            mode: SweepMode::Exhaustive,
            seed: 0,
            samples: 500,
            filter: None,
            execution: Execution::default(),
            exhaustive_limit: 1 << 20,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Exhaustive,
    Random,
    Witness,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    Refuted,
    NotRefuted,
    Error,
}

impl Status {
    pub fn as_expected(self) -> bool {
        matches!(self, Status::Pass | Status::Refuted)
    }

    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Refuted => "REFUTED",
            Status::NotRefuted => "NOT-REFUTED",
            Status::Error => "ERROR",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessRecord {
    /// Sample index within the sweep; 0 for stored witnesses.
    pub index: u64,
    /// The environment in the canonical file format.
    pub env: String,
    pub lhs: Option<String>,
    pub rhs: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LawResult {
    pub id: String,
    pub anchor: String,
    pub polarity: Polarity,
    pub method: Method,
    pub samples: u64,
    pub failures: u64,
    /// Samples on which the antecedent of a conditional law held.
    pub antecedent_hits: Option<u64>,
    pub status: Status,
    pub witness: Option<WitnessRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub source_discrepancy: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub size: usize,
    pub mode: SweepMode,
    pub seed: u64,
    pub samples: usize,
    pub filter: Option<String>,
    pub results: Vec<LawResult>,
    pub passed: bool,
}

fn fnv1a(s: &str) -> u64 {
    s.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| (h ^ b as u64).wrapping_mul(0x0100_0000_01b3))
}

fn env_of(law: &Law, universe: &Universe, values: &[Multirelation]) -> String {
    let mut env = Environment::new(universe);
    for (v, x) in law.vars.iter().zip(values) {
        env.bind(&v.name, x.clone()).expect("law variables are valid names");
    }
    render_env(&env)
}

/// Per-chunk partial result, merged in index order.
#[derive(Default)]
struct Tally {
    samples: u64,
    failures: u64,
    hits: u64,
    witness: Option<WitnessRecord>,
    error: Option<(u64, String)>,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        self.samples += other.samples;
        self.failures += other.failures;
        self.hits += other.hits;
        self.witness = self.witness.or(other.witness);
        self.error = self.error.or(other.error);
        self
    }
}

struct Sweep<'a> {
    law: &'a Law,
    universe: Universe,
    alg: MrelAlgebra,
    seed: u64,
}

impl Sweep<'_> {
    fn radix(&self, kind: VarKind) -> Option<u64> {
        match kind {
            VarKind::Any => exhaustive_count(&self.universe),
            VarKind::Test => Some(self.universe.subset_count()),
        }
    }

    fn exhaustive_values(&self, mut index: u64) -> Vec<Multirelation> {
        let mut values = Vec::with_capacity(self.law.arity());
        for v in self.law.vars.iter().rev() {
            let r = self.radix(v.kind).expect("checked before enumeration");
            let digit = index % r;
            index /= r;
            values.push(match v.kind {
                VarKind::Any => multirelation_from_index(&self.universe, digit),
                VarKind::Test => SubIdentity::from_mask(&self.universe, digit as Mask)
                    .expect("digit is a subset")
                    .into_multirelation(),
            });
        }
        values.reverse();
        values
    }

    fn random_values(&self, index: u64) -> Result<Vec<Multirelation>> {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed ^ fnv1a(self.law.id));
        rng.set_stream(index);
        let mut values: Vec<Multirelation> = self
            .law
            .vars
            .iter()
            .map(|v| match v.kind {
                VarKind::Any => {
                    let density = [0.5, 0.25, 0.125][rng.gen_range(0..3)];
                    random_multirelation(&self.universe, &mut rng, density)
                }
                VarKind::Test => random_subidentity(&self.universe, &mut rng).into_multirelation(),
            })
            .collect();
        if index % 2 == 1 {
            for (name, term) in &self.law.bias {
                let lookup = |n: &str| -> Result<Multirelation> {
                    let i = self.law.vars.iter().position(|v| v.name == n).ok_or_else(|| Error::Unbound(n.into()))?;
                    Ok(values[i].clone())
                };
                let value = eval_in(&self.alg, term, &lookup)?;
                let i = self.law.vars.iter().position(|v| &v.name == name).expect("registry checks bias targets");
                values[i] = value;
            }
        }
        Ok(values)
    }

    fn run(&self, range: std::ops::Range<u64>, exhaustive: bool) -> Tally {
        let mut tally = Tally::default();
        for index in range {
            let values = if exhaustive { Ok(self.exhaustive_values(index)) } else { self.random_values(index) };
            let verdict = values.and_then(|vals| Ok((self.law.check_values(&self.alg, &vals)?, vals)));
            match verdict {
                Ok((v, vals)) => {
                    tally.samples += 1;
                    if v.antecedent == Some(true) {
                        tally.hits += 1;
                    }
                    if !v.holds {
                        tally.failures += 1;
                        if tally.witness.is_none() {
                            tally.witness = Some(WitnessRecord {
                                index,
                                env: env_of(self.law, &self.universe, &vals),
                                lhs: v.lhs,
                                rhs: v.rhs,
                            });
                        }
                    }
                }
                Err(e) => {
                    if tally.error.is_none() {
                        tally.error = Some((index, e.to_string()));
                    }
                }
            }
        }
        tally
    }
}

fn conditional(law: &Law) -> bool {
    matches!(&law.check, super::Check::Formula(f) if f.is_conditional())
}

fn sweep_law(law: &Law, config: &SuiteConfig, universe: &Universe) -> LawResult {
    let sweep = Sweep { law, universe: universe.clone(), alg: MrelAlgebra::new(universe), seed: config.seed };
    let space = law
        .vars
        .iter()
        .try_fold(1u64, |acc, v| sweep.radix(v.kind).and_then(|r| acc.checked_mul(r)))
        .filter(|&n| n <= config.exhaustive_limit);
    let (method, total) = match (config.mode, space) {
        (SweepMode::Exhaustive, Some(n)) => (Method::Exhaustive, n),
        _ => (Method::Random, config.samples as u64),
    };
    let exhaustive = method == Method::Exhaustive;
    let chunks = total.div_ceil(CHUNK as u64) as usize;
    let tally = config
        .execution
        .map(chunks, |c| {
            let start = c as u64 * CHUNK as u64;
            sweep.run(start..(start + CHUNK as u64).min(total), exhaustive)
        })
        .into_iter()
        .fold(Tally::default(), Tally::merge);
    let status = if tally.error.is_some() {
        Status::Error
    } else if tally.failures > 0 {
        Status::Fail
    } else {
        Status::Pass
    };
    LawResult {
        id: law.id.to_string(),
        anchor: law.anchor.to_string(),
        polarity: law.polarity,
        method,
        samples: tally.samples,
        failures: tally.failures,
        antecedent_hits: conditional(law).then_some(tally.hits),
        status,
        witness: tally.witness,
        source_discrepancy: law.discrepancy.map(str::to_string),
        error: tally.error.map(|(i, e)| format!("sample {i}: {e}")),
    }
}

/// Checks a refutable law on its stored witness.
pub(super) fn replay_witness(law: &Law) -> Result<(bool, WitnessRecord)> {
    let env = parse_env(law.witness.ok_or(Error::Invalid(format!("`{}` has no stored witness", law.id)))?)?;
    let values = law.bind(&env)?;
    let v = law.check_values(&MrelAlgebra::new(env.universe()), &values)?;
    Ok((!v.holds, WitnessRecord { index: 0, env: render_env(&env), lhs: v.lhs, rhs: v.rhs }))
}

pub(super) fn witness_result(law: &Law) -> LawResult {
    let (status, witness, error) = match replay_witness(law) {
        Ok((true, w)) => (Status::Refuted, Some(w), None),
        Ok((false, w)) => (Status::NotRefuted, Some(w), None),
        Err(e) => (Status::Error, None, Some(e.to_string())),
    };
    LawResult {
        id: law.id.to_string(),
        anchor: law.anchor.to_string(),
        polarity: law.polarity,
        method: Method::Witness,
        samples: 1,
        failures: u64::from(status == Status::Refuted),
        antecedent_hits: None,
        status,
        witness,
        source_discrepancy: law.discrepancy.map(str::to_string),
        error,
    }
}

pub fn run_suite(config: &SuiteConfig) -> Result<SuiteReport> {
    let universe = Universe::alphabetic(config.size)?;
    let results: Vec<LawResult> = list_laws()
        .iter()
        .filter(|l| config.filter.as_deref().is_none_or(|f| l.id.starts_with(f)))
        .map(|law| match law.polarity {
            Polarity::Valid => sweep_law(law, config, &universe),
            Polarity::Refutable => witness_result(law),
        })
        .collect();
    let passed = results.iter().all(|r| r.status.as_expected());
    Ok(SuiteReport {
        size: config.size,
        mode: config.mode,
        seed: config.seed,
        samples: config.samples,
        filter: config.filter.clone(),
        results,
        passed,
    })
}

fn indent(text: &str) -> String {
    text.lines().map(|l| format!("    {l}\n")).collect()
}

impl SuiteReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn unexpected(&self) -> impl Iterator<Item = &LawResult> {
        self.results.iter().filter(|r| !r.status.as_expected())
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "suite size={} mode={} seed={} samples={} filter={}",
            self.size,
            self.mode,
            self.seed,
            self.samples,
            self.filter.as_deref().unwrap_or("-")
        );
        for r in &self.results {
            let _ = write!(
                out,
                "{:<11} {:<34} {:<18} {:<10} samples={} failures={}",
                r.status.label(),
                r.id,
                r.polarity,
                format!("{:?}", r.method).to_lowercase(),
                r.samples,
                r.failures
            );
            if let Some(h) = r.antecedent_hits {
                let _ = write!(out, " antecedent={h}");
            }
            out.push('\n');
            if let Some(d) = &r.source_discrepancy {
                let _ = writeln!(out, "    note: {d}");
            }
            if let Some(e) = &r.error {
                let _ = writeln!(out, "    error: {e}");
            }
            if let Some(w) = &r.witness {
                if r.polarity == Polarity::Refutable || r.status != Status::Pass {
                    let _ = writeln!(
                        out,
                        "    witness #{}: lhs = {}, rhs = {}",
                        w.index,
                        w.lhs.as_deref().unwrap_or("-"),
                        w.rhs.as_deref().unwrap_or("-")
                    );
                    out.push_str(&indent(&w.env));
                }
            }
        }
        let unexpected = self.unexpected().count();
        let _ = writeln!(
            out,
            "summary: {} laws, {} as expected, {} unexpected: {}",
            self.results.len(),
            self.results.len() - unexpected,
            unexpected,
            if self.passed { "PASS" } else { "FAIL" }
        );
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config(size: usize, filter: &str) -> SuiteConfig {
        SuiteConfig { size, filter: Some(filter.into()), samples: 64, ..SuiteConfig::default() }
    }

    #[test]
    fn proto_axioms_pass_exhaustively() {
        let report = run_suite(&config(1, "proto.")).unwrap();
        assert_eq!(report.results.len(), 14);
        assert!(report.passed, "{}", report.to_text());
        assert!(report.results.iter().all(|r| r.method == Method::Exhaustive));
    }

    #[test]
    fn refutations_replay() {
        let report = run_suite(&config(1, "neg.")).unwrap();
        assert!(report.passed, "{}", report.to_text());
        let r = report.results.iter().find(|r| r.id == "neg.seq_assoc").unwrap();
        assert_eq!(r.status, Status::Refuted);
    }

    #[test]
    fn strategies_agree_and_reports_are_stable() {
        let mut c = config(3, "dp.");
        c.mode = SweepMode::Random;
        c.execution = Execution::Sequential;
        let seq = run_suite(&c).unwrap();
        c.execution = Execution::Parallel;
        let par = run_suite(&c).unwrap();
        assert_eq!(seq, par);
        assert_eq!(seq.to_text(), par.to_text());
        assert!(seq.passed, "{}", seq.to_text());
    }

    #[test]
    fn failing_law_reports_witness() {
        let law = crate::laws::law("neg.right_annihilation").unwrap();
        let r = sweep_law(law, &config(1, ""), &Universe::alphabetic(1).unwrap());
        assert_eq!(r.status, Status::Fail);
        let w = r.witness.unwrap();
        assert_eq!(w.index, 1);
        assert_eq!(w.env, "universe a\n\nrel x\na -> {}\nend\n");
        assert_eq!(w.lhs.as_deref(), Some("{ a -> {} }"));
    }
}
