//! Exhaustive axiom checking over operation tables.

use std::fmt::Write as _;

use itertools::Itertools;
use serde::Serialize;

use super::FiniteAlgebra;
use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::laws::{Law, System, VarKind, Verdict};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomCheck {
    pub id: String,
    pub anchor: String,
    pub assignments: u64,
    pub failures: u64,
    /// First failing assignment, e.g. `x = a, y = 0: a vs 0`.
    pub witness: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableReport {
    pub model: String,
    pub system: System,
    pub results: Vec<AxiomCheck>,
    pub passed: bool,
}

/// Errors out if `a` lacks an operation that `system` mentions.
pub(crate) fn require_tables(a: &FiniteAlgebra, system: System) -> Result<()> {
    let missing = |what: &str| {
        Err(Error::Invalid(format!("model `{}` has no {what}, required by {system}", a.name)))
    };
    if system.needs_par() && (a.par.is_none() || a.one_par.is_none()) {
        return missing("`par` table or 1p constant");
    }
    if system.needs_star() && a.star.is_none() {
        return missing("`star` table");
    }
    if system.uses_antidomain() && a.anti.is_none() {
        return missing("`a` table");
    }
    if !system.uses_antidomain() && system != System::ProtoDioid && system != System::ProtoTrioid
        && a.dom.is_none() && a.anti.is_none()
    {
        return missing("`d` table");
    }
    Ok(())
}

pub(crate) struct Sweep {
    pub assignments: u64,
    pub failures: u64,
    pub witness: Option<(Vec<usize>, Verdict)>,
}

/// Quantifies `law` over every assignment; test variables range over
/// domain elements.
pub(crate) fn sweep_law(a: &FiniteAlgebra, law: &Law, stop_at_first: bool) -> Result<Sweep> {
    let all: Vec<usize> = (0..a.size()).collect();
    let tests = if law.vars.iter().any(|v| v.kind == VarKind::Test) { a.tests()? } else { Vec::new() };
    let ranges: Vec<&[usize]> =
        law.vars.iter().map(|v| if v.kind == VarKind::Test { &tests[..] } else { &all[..] }).collect();
    let mut out = Sweep { assignments: 0, failures: 0, witness: None };
    for values in assignments(&ranges) {
        out.assignments += 1;
        let v = law.check_in(a, &values)?;
        if !v.holds {
            out.failures += 1;
            if out.witness.is_none() {
                out.witness = Some((values, v));
            }
            if stop_at_first {
                break;
            }
        }
    }
    Ok(out)
}

/// Every assignment over `ranges`; a single empty one when there are no
/// variables.
fn assignments<'a>(ranges: &'a [&'a [usize]]) -> Box<dyn Iterator<Item = Vec<usize>> + 'a> {
    if ranges.is_empty() {
        Box::new(std::iter::once(Vec::new()))
    } else {
        Box::new(ranges.iter().map(|r| r.iter().copied()).multi_cartesian_product())
    }
}

fn describe(a: &FiniteAlgebra, law: &Law, values: &[usize], v: &Verdict) -> String {
    let mut s = law.vars.iter().zip(values).map(|(var, &x)| format!("{} = {}", var.name, a.carrier[x])).join(", ");
    let _ = write!(s, ": {} vs {}", v.lhs.as_deref().unwrap_or("-"), v.rhs.as_deref().unwrap_or("-"));
    s
}

pub fn check_table_axioms(a: &FiniteAlgebra, system: System) -> Result<TableReport> {
    a.validate()?;
    require_tables(a, system)?;
    let results = system
        .axioms()
        .into_iter()
        .map(|law| {
            let s = sweep_law(a, law, false)?;
            Ok(AxiomCheck {
                id: law.id.to_string(),
                anchor: law.anchor.to_string(),
                assignments: s.assignments,
                failures: s.failures,
                witness: s.witness.map(|(vals, v)| describe(a, law, &vals, &v)),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let passed = results.iter().all(|r| r.failures == 0);
    Ok(TableReport { model: a.name.clone(), system, results, passed })
}

impl TableReport {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.results {
            let _ = write!(
                out,
                "{} {:<24} assignments={} failures={}",
                if r.failures == 0 { "PASS" } else { "FAIL" },
                r.id,
                r.assignments,
                r.failures
            );
            if let Some(w) = &r.witness {
                let _ = write!(out, "  first: {w}");
            }
            out.push('\n');
        }
        let _ = writeln!(
            out,
            "model {} {} {}",
            self.model,
            if self.passed { "satisfies" } else { "violates" },
            self.system
        );
        out
    }
}

/// All `y` with `x + y = 1σ`, `y·x = 0` and `x·y = 0`.
pub fn complements_of(a: &FiniteAlgebra, x: usize) -> Vec<usize> {
    (0..a.size())
        .filter(|&y| a.plus[x][y] == a.one_seq && a.seq[y][x] == a.zero && a.seq[x][y] == a.zero)
        .collect()
}

fn same_shape(a: &FiniteAlgebra, b: &FiniteAlgebra) -> bool {
    a.size() == b.size()
        && a.one_par.is_some() == b.one_par.is_some()
        && a.par.is_some() == b.par.is_some()
        && a.dom.is_some() == b.dom.is_some()
        && a.anti.is_some() == b.anti.is_some()
        && a.star.is_some() == b.star.is_some()
}

fn preserves(a: &FiniteAlgebra, b: &FiniteAlgebra, f: &[usize]) -> bool {
    let n = a.size();
    let bin = |x: &Vec<Vec<usize>>, y: &Vec<Vec<usize>>| {
        (0..n).all(|i| (0..n).all(|j| f[x[i][j]] == y[f[i]][f[j]]))
    };
    let un = |x: &Option<Vec<usize>>, y: &Option<Vec<usize>>| match (x, y) {
        (Some(x), Some(y)) => (0..n).all(|i| f[x[i]] == y[f[i]]),
        _ => true,
    };
    f[a.zero] == b.zero
        && f[a.one_seq] == b.one_seq
        && a.one_par.map(|p| f[p]) == b.one_par
        && bin(&a.plus, &b.plus)
        && bin(&a.seq, &b.seq)
        && match (&a.par, &b.par) {
            (Some(x), Some(y)) => bin(x, y),
            _ => true,
        }
        && un(&a.dom, &b.dom)
        && un(&a.anti, &b.anti)
        && un(&a.star, &b.star)
}

/// Whether some bijection of carriers maps every constant and table of
/// `a` onto `b`.
pub fn is_isomorphic(a: &FiniteAlgebra, b: &FiniteAlgebra) -> bool {
    same_shape(a, b) && (0..a.size()).permutations(a.size()).any(|f| preserves(a, b, &f))
}
