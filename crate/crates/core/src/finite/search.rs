//! Bounded search for table models of an axiom system.
//!
//! `0` is pinned to index 0 and `1σ` to index 1; `1π` is either `1σ` or
//! index 2. Tables are filled stage by stage (order, `;`, `‖`, `d`/`a`,
//! star), and each stage is filtered by the axioms that only mention the
//! operations fixed so far. Models are not quotiented by isomorphism.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::Serialize;

use super::check::{require_tables, sweep_law};
use super::{complements_of, FiniteAlgebra, Table};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::laws::{self, AxiomGroup, Check, Law, System};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Property {
    /// Some domain element has no complement.
    UncomplementedTest,
}

impl Property {
    fn holds(self, a: &FiniteAlgebra) -> bool {
        match self {
            Property::UncomplementedTest => {
                a.domain_elements().into_iter().any(|t| complements_of(a, t).is_empty())
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Constraint {
    Any,
    /// Every other axiom holds and this law fails.
    Violate(String),
    Property(Property),
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Constraint::Any => f.write_str("any"),
            Constraint::Violate(id) => write!(f, "violate:{id}"),
            Constraint::Property(Property::UncomplementedTest) => f.write_str("uncomplemented-test"),
        }
    }
}

impl FromStr for Constraint {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "any" => Ok(Constraint::Any),
            "uncomplemented-test" => Ok(Constraint::Property(Property::UncomplementedTest)),
            _ => match s.strip_prefix("violate:") {
                Some(id) => Ok(Constraint::Violate(id.to_string())),
                None => Err(Error::Invalid(format!(
                    "unknown constraint `{s}` (expected any, uncomplemented-test or violate:<law-id>)"
                ))),
            },
        }
    }
}

#[derive(Debug, Clone)]
pub struct SearchConfig {
    pub system: System,
    pub size: usize,
    pub constraint: Constraint,
    /// Maximum number of models returned.
    pub budget: usize,
    pub execution: Execution,
}

impl SearchConfig {
    pub fn new(system: System, size: usize, constraint: Constraint) -> Self {
        SearchConfig { system, size, constraint, budget: 16, execution: Execution::default() }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SearchResult {
    pub system: System,
    pub size: usize,
    pub constraint: Constraint,
    pub models: Vec<FiniteAlgebra>,
    /// Partial or complete tables submitted to an axiom filter.
    pub candidates: u64,
    /// False when some branch stopped early because the budget was reached.
    pub exhausted: bool,
}

/// Smallest and largest carrier accepted by [`search_models`].
pub const SEARCH_SIZES: std::ops::RangeInclusive<usize> = 2..=4;

struct Stages {
    seq: Vec<&'static Law>,
    par: Vec<&'static Law>,
    unary: Vec<&'static Law>,
    star: Vec<&'static Law>,
    target: Option<&'static Law>,
}

impl Stages {
    fn new(system: System, constraint: &Constraint) -> Result<Self> {
        let target = match constraint {
            Constraint::Violate(id) => {
                let law = laws::law(id).ok_or_else(|| Error::Invalid(format!("unknown law `{id}`")))?;
                if matches!(law.check, Check::Native(_)) {
                    return Err(Error::Invalid(format!("law `{id}` has no table form")));
                }
                if law.uses_star() && !system.needs_star() {
                    return Err(Error::Invalid(format!("law `{id}` needs a star table, which {system} lacks")));
                }
                Some(law)
            }
            _ => None,
        };
        let mut s = Stages { seq: vec![], par: vec![], unary: vec![], star: vec![], target };
        for law in system.axioms() {
            if target.is_some_and(|t| t.id == law.id) {
                continue;
            }
            use AxiomGroup::*;
            match law.group.expect("axioms have a group") {
                ProtoSeq => s.seq.push(law),
                ProtoPar => s.par.push(law),
                DomainSeq | DomainPar | AntidomainSeq | AntidomainPar => s.unary.push(law),
                DomainStar | AntidomainStar => s.star.push(law),
            }
        }
        Ok(s)
    }
}

fn holds_all(a: &FiniteAlgebra, laws: &[&Law]) -> Result<bool> {
    for law in laws {
        if sweep_law(a, law, true)?.failures > 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All `k`-tuples over `0..n`.
fn tuples(k: usize, n: usize) -> Box<dyn Iterator<Item = Vec<usize>>> {
    if k == 0 {
        Box::new(std::iter::once(Vec::new()))
    } else {
        Box::new((0..k).map(|_| 0..n).multi_cartesian_product())
    }
}

/// Join tables of every partial order on `0..n` with least element 0 in
/// which all binary joins exist.
fn join_semilattices(n: usize) -> Vec<Table> {
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|i| (1..n).filter(move |&j| j != i).map(move |j| (i, j))).collect();
    let mut out = Vec::new();
    for bits in 0u32..1 << pairs.len() {
        let mut le: Vec<Vec<bool>> = (0..n).map(|i| (0..n).map(|j| i == 0 || i == j).collect()).collect();
        for (k, &(i, j)) in pairs.iter().enumerate() {
            le[i][j] = bits >> k & 1 == 1;
        }
        let antisymmetric = (0..n).all(|i| (0..n).all(|j| i == j || !(le[i][j] && le[j][i])));
        let transitive =
            (0..n).all(|i| (0..n).all(|j| (0..n).all(|k| !(le[i][j] && le[j][k]) || le[i][k])));
        if !antisymmetric || !transitive {
            continue;
        }
        let join = |x: usize, y: usize| -> Option<usize> {
            let ubs: Vec<usize> = (0..n).filter(|&u| le[x][u] && le[y][u]).collect();
            ubs.iter().copied().find(|&u| ubs.iter().all(|&v| le[u][v]))
        };
        let table: Option<Table> = (0..n).map(|x| (0..n).map(|y| join(x, y)).collect()).collect();
        if let Some(t) = table {
            out.push(t);
        }
    }
    out
}

/// Sequential tables with `0·x = 0` and `1σ` as two-sided unit.
fn seq_tables(n: usize, one: usize) -> impl Iterator<Item = Table> {
    let cells: Vec<(usize, usize)> =
        (0..n).filter(|&r| r != 0 && r != one).flat_map(|r| (0..n).filter(|&c| c != one).map(move |c| (r, c))).collect();
    tuples(cells.len(), n).map(move |vals| {
        let mut t: Table = (0..n)
            .map(|r| (0..n).map(|c| if r == 0 { 0 } else if r == one { c } else if c == one { r } else { 0 }).collect())
            .collect();
        for (&(r, c), v) in cells.iter().zip(vals) {
            t[r][c] = v;
        }
        t
    })
}

/// Commutative parallel tables with unit `one` and annihilator 0.
fn par_tables(n: usize, one: usize) -> impl Iterator<Item = Table> {
    let free: Vec<usize> = (1..n).filter(|&x| x != one).collect();
    let cells: Vec<(usize, usize)> = free.iter().enumerate().flat_map(|(k, &i)| free[k..].iter().map(move |&j| (i, j))).collect();
    tuples(cells.len(), n).map(move |vals| {
        let mut t: Table = (0..n)
            .map(|r| (0..n).map(|c| if r == 0 || c == 0 { 0 } else if r == one { c } else if c == one { r } else { 0 }).collect())
            .collect();
        for (&(r, c), v) in cells.iter().zip(vals) {
            t[r][c] = v;
            t[c][r] = v;
        }
        t
    })
}

fn carrier_names(n: usize, one_par: Option<usize>) -> Vec<String> {
    (0..n)
        .map(|i| match i {
            0 => "0".to_string(),
            1 => "1s".to_string(),
            _ if one_par == Some(i) => "1p".to_string(),
            _ => format!("e{i}"),
        })
        .collect()
}

struct Branch<'a> {
    system: System,
    stages: &'a Stages,
    constraint: &'a Constraint,
    budget: usize,
    found: Vec<FiniteAlgebra>,
    candidates: u64,
    truncated: bool,
}

impl Branch<'_> {
    fn full(&self) -> bool {
        self.found.len() >= self.budget
    }

    fn test(&mut self, a: &FiniteAlgebra, laws: &[&Law]) -> Result<bool> {
        self.candidates += 1;
        holds_all(a, laws)
    }

    fn finish(&mut self, a: &FiniteAlgebra) -> Result<()> {
        let accept = match self.constraint {
            Constraint::Any => true,
            Constraint::Property(p) => p.holds(a),
            Constraint::Violate(_) => {
                let law = self.stages.target.expect("violation target");
                sweep_law(a, law, true)?.failures > 0
            }
        };
        if accept {
            if self.full() {
                self.truncated = true;
            } else {
                self.found.push(a.clone());
            }
        }
        Ok(())
    }

    fn star_stage(&mut self, a: &mut FiniteAlgebra) -> Result<()> {
        if !self.system.needs_star() {
            return self.finish(a);
        }
        let n = a.size();
        for t in tuples(n, n) {
            if self.truncated {
                break;
            }
            a.star = Some(t);
            if self.test(a, &self.stages.star)? {
                self.finish(a)?;
            }
        }
        a.star = None;
        Ok(())
    }

    fn unary_stage(&mut self, a: &mut FiniteAlgebra) -> Result<()> {
        let n = a.size();
        let anti = self.system.uses_antidomain();
        for t in tuples(n, n) {
            if self.truncated {
                break;
            }
            if anti {
                a.anti = Some(t);
            } else {
                a.dom = Some(t);
            }
            if self.test(a, &self.stages.unary)? {
                self.star_stage(a)?;
            }
        }
        a.anti = None;
        a.dom = None;
        Ok(())
    }

    fn par_stage(&mut self, a: &mut FiniteAlgebra) -> Result<()> {
        let Some(one) = a.one_par else {
            return self.unary_stage(a);
        };
        for t in par_tables(a.size(), one) {
            if self.truncated {
                break;
            }
            a.par = Some(t);
            if self.test(a, &self.stages.par)? {
                self.unary_stage(a)?;
            }
        }
        a.par = None;
        Ok(())
    }

    fn run(&mut self, plus: Table, one_par: Option<usize>) -> Result<()> {
        let n = plus.len();
        let mut a = FiniteAlgebra {
            name: String::new(),
            notes: vec![],
            claims: vec![self.system],
            carrier: carrier_names(n, one_par),
            zero: 0,
            one_seq: 1,
            one_par,
            plus,
            seq: vec![],
            par: None,
            dom: None,
            anti: None,
            star: None,
        };
        for t in seq_tables(n, 1) {
            if self.truncated {
                break;
            }
            a.seq = t;
            if self.test(&a, &self.stages.seq)? {
                self.par_stage(&mut a)?;
            }
        }
        Ok(())
    }
}

type SortKey = (Option<usize>, Table, Table, Option<Table>, Option<Vec<usize>>, Option<Vec<usize>>, Option<Vec<usize>>);

fn sort_key(a: &FiniteAlgebra) -> SortKey {
    (a.one_par, a.plus.clone(), a.seq.clone(), a.par.clone(), a.dom.clone(), a.anti.clone(), a.star.clone())
}

pub fn search_models(config: &SearchConfig) -> Result<SearchResult> {
    let n = config.size;
    if !SEARCH_SIZES.contains(&n) {
        return Err(Error::Invalid(format!(
            "search carrier size {n} outside {}..={}",
            SEARCH_SIZES.start(),
            SEARCH_SIZES.end()
        )));
    }
    if config.budget == 0 {
        return Err(Error::Invalid("search budget must be positive".into()));
    }
    let stages = Stages::new(config.system, &config.constraint)?;
    let one_pars: Vec<Option<usize>> = if config.system.needs_par() {
        (1..n.min(3)).map(Some).collect()
    } else {
        vec![None]
    };
    let branches: Vec<(Table, Option<usize>)> =
        join_semilattices(n).into_iter().cartesian_product(one_pars).collect();
    let outcomes = config.execution.map_slice(&branches, |(plus, one_par)| {
        let mut b = Branch {
            system: config.system,
            stages: &stages,
            constraint: &config.constraint,
            budget: config.budget,
            found: vec![],
            candidates: 0,
            truncated: false,
        };
        b.run(plus.clone(), *one_par).map(|()| (b.found, b.candidates, b.truncated))
    });
    let mut models = Vec::new();
    let mut candidates = 0;
    let mut exhausted = true;
    for o in outcomes {
        let (found, c, truncated) = o?;
        models.extend(found);
        candidates += c;
        exhausted &= !truncated;
    }
    models.sort_by_cached_key(sort_key);
    if models.len() > config.budget {
        models.truncate(config.budget);
        exhausted = false;
    }
    for (i, m) in models.iter_mut().enumerate() {
        m.name = format!("{}-{n}-{i}", config.system);
        debug_assert!(require_tables(m, config.system).is_ok());
    }
    Ok(SearchResult { system: config.system, size: n, constraint: config.constraint.clone(), models, candidates, exhausted })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn semilattice_counts() {
        // Above a fixed bottom: chains, and for four elements the three
        // diamonds. Antichains lack a top and so a join.
        assert_eq!(join_semilattices(2).len(), 1);
        assert_eq!(join_semilattices(3).len(), 2);
        assert_eq!(join_semilattices(4).len(), 9);
        for t in join_semilattices(4) {
            assert!((0..4).all(|x| t[0][x] == x && t[x][x] == x));
        }
    }

    #[test]
    fn constraint_round_trip() {
        for s in ["any", "uncomplemented-test", "violate:dom.seq_locality"] {
            assert_eq!(s.parse::<Constraint>().unwrap().to_string(), s);
        }
        assert!("bogus".parse::<Constraint>().is_err());
    }

    #[test]
    fn rejects_bad_requests() {
        let c = SearchConfig::new(System::DpTrioid, 5, Constraint::Any);
        assert!(search_models(&c).is_err());
        let c = SearchConfig::new(System::DpTrioid, 3, Constraint::Violate("no.such".into()));
        assert!(search_models(&c).is_err());
    }

    fn all(system: System, size: usize, constraint: Constraint) -> SearchResult {
        let mut c = SearchConfig::new(system, size, constraint);
        c.budget = 100_000;
        let r = search_models(&c).unwrap();
        assert!(r.exhausted);
        r
    }

    #[test]
    fn finds_the_three_element_model() {
        let chain3 = crate::finite::builtin_model("chain3").unwrap();
        let r = all(System::DpTrioid, 3, Constraint::Any);
        assert!(r.models.iter().any(|m| super::super::is_isomorphic(m, &chain3)));
        for m in &r.models {
            assert!(super::super::check_table_axioms(m, System::DpTrioid).unwrap().passed);
        }
    }

    #[test]
    fn finds_the_uncomplemented_model() {
        let chain4 = crate::finite::builtin_model("chain4").unwrap();
        let r = all(System::DpTrioid, 4, Constraint::Property(Property::UncomplementedTest));
        eprintln!("{} models, {} candidates", r.models.len(), r.candidates);
        assert!(r.models.iter().any(|m| super::super::is_isomorphic(m, &chain4)));
    }

    #[test]
    fn violation_search_runs() {
        let r = all(System::ProtoDioid, 2, Constraint::Violate("neg.left_distr".into()));
        let law = laws::law("neg.left_distr").unwrap();
        for m in &r.models {
            assert!(holds_all(m, &System::ProtoDioid.axioms()).unwrap());
            assert!(sweep_law(m, law, true).unwrap().failures > 0);
        }
    }

    #[test]
    fn strategies_agree() {
        let mut c = SearchConfig::new(System::DpTrioid, 3, Constraint::Any);
        c.budget = 5;
        c.execution = Execution::Sequential;
        let a = search_models(&c).unwrap();
        c.execution = Execution::Parallel;
        let b = search_models(&c).unwrap();
        assert_eq!(a.models, b.models);
        assert_eq!(a.models.len(), 5);
    }
}
