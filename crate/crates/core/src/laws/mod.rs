//! Registry of algebraic laws, model generators, and sweep reports.
//!
//! Variables named `p`, `q`, `r` (optionally with digits or primes) range
//! over tests, i.e. domain elements; all other variables range over the
//! whole carrier.

mod counter;
mod formula;
mod generate;
mod native;
mod registry;
mod suite;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algebra::{Algebra, MrelAlgebra};
use crate::error::{Error, Result};
use crate::mrel::Multirelation;
use crate::term::{Environment, Term};

pub use counter::{run_counterexamples, CaseResult, CheckResult, CounterexampleReport};
pub use formula::{eval_formula, parse_formula, Atom, Formula, Verdict};
pub use generate::{
    exhaustive_count, gen_multirelations, multirelation_from_index, random_multirelation, random_subidentity,
    GenMode, EXHAUSTIVE_MAX_ELEMENTS,
};
pub use registry::{law, list_laws};
pub use suite::{run_suite, LawResult, Method, Status, SuiteConfig, SuiteReport, SweepMode, WitnessRecord};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Polarity {
    Valid,
    Refutable,
}

impl fmt::Display for Polarity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Polarity::Valid => "expected-valid",
            Polarity::Refutable => "expected-refutable",
        })
    }
}

/// Blocks of axioms from which the axiom systems are assembled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum AxiomGroup {
    /// Semilattice and sequential axioms of a proto-dioid.
    ProtoSeq,
    /// Commutative dioid axioms of parallel composition.
    ProtoPar,
    DomainSeq,
    DomainPar,
    DomainStar,
    AntidomainSeq,
    AntidomainPar,
    AntidomainStar,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum System {
    ProtoDioid,
    ProtoTrioid,
    DpDioid,
    DpTrioid,
    DpKleene,
    DpBiKleene,
    ApDioid,
    ApTrioid,
    ApKleene,
    ApBiKleene,
}

impl System {
    pub const ALL: [System; 10] = [
        System::ProtoDioid,
        System::ProtoTrioid,
        System::DpDioid,
        System::DpTrioid,
        System::DpKleene,
        System::DpBiKleene,
        System::ApDioid,
        System::ApTrioid,
        System::ApKleene,
        System::ApBiKleene,
    ];

    pub fn name(self) -> &'static str {
        match self {
            System::ProtoDioid => "proto-dioid",
            System::ProtoTrioid => "proto-trioid",
            System::DpDioid => "dp-dioid",
            System::DpTrioid => "dp-trioid",
            System::DpKleene => "dp-kleene",
            System::DpBiKleene => "dp-bi-kleene",
            System::ApDioid => "ap-dioid",
            System::ApTrioid => "ap-trioid",
            System::ApKleene => "ap-kleene",
            System::ApBiKleene => "ap-bi-kleene",
        }
    }

    pub fn groups(self) -> &'static [AxiomGroup] {
        use AxiomGroup::*;
        match self {
            System::ProtoDioid => &[ProtoSeq],
            System::ProtoTrioid => &[ProtoSeq, ProtoPar],
            System::DpDioid => &[ProtoSeq, DomainSeq],
            System::DpTrioid => &[ProtoSeq, ProtoPar, DomainSeq, DomainPar],
            System::DpKleene => &[ProtoSeq, DomainSeq, DomainStar],
            System::DpBiKleene => &[ProtoSeq, ProtoPar, DomainSeq, DomainPar, DomainStar],
            System::ApDioid => &[ProtoSeq, AntidomainSeq],
            System::ApTrioid => &[ProtoSeq, ProtoPar, AntidomainSeq, AntidomainPar],
            System::ApKleene => &[ProtoSeq, AntidomainSeq, AntidomainStar],
            System::ApBiKleene => &[ProtoSeq, ProtoPar, AntidomainSeq, AntidomainPar, AntidomainStar],
        }
    }

    pub fn needs_par(self) -> bool {
        self.groups().contains(&AxiomGroup::ProtoPar)
    }

    pub fn needs_star(self) -> bool {
        self.groups().iter().any(|g| matches!(g, AxiomGroup::DomainStar | AxiomGroup::AntidomainStar))
    }

    pub fn uses_antidomain(self) -> bool {
        self.groups().contains(&AxiomGroup::AntidomainSeq)
    }

    /// The axioms of this system, in registry order.
    pub fn axioms(self) -> Vec<&'static Law> {
        list_laws().iter().filter(|l| l.group.is_some_and(|g| self.groups().contains(&g))).collect()
    }
}

impl fmt::Display for System {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for System {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        System::ALL
            .into_iter()
            .find(|sys| sys.name() == s)
            .ok_or_else(|| Error::Invalid(format!("unknown axiom system `{s}`")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VarKind {
    Any,
    Test,
}

impl VarKind {
    pub fn of(name: &str) -> VarKind {
        match name.chars().next() {
            Some('p' | 'q' | 'r') => VarKind::Test,
            _ => VarKind::Any,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Variable {
    pub name: String,
    pub kind: VarKind,
}

/// A check computed directly on multirelations, for characterizations that
/// the term language cannot state.
pub type NativeCheck = fn(&[Multirelation]) -> Result<Verdict>;

#[derive(Clone)]
pub enum Check {
    Formula(Formula),
    Native(NativeCheck),
}

impl fmt::Debug for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Check::Formula(x) => write!(f, "Formula({x})"),
            Check::Native(_) => f.write_str("Native"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Law {
    pub id: &'static str,
    pub anchor: &'static str,
    pub polarity: Polarity,
    pub group: Option<AxiomGroup>,
    pub check: Check,
    pub vars: Vec<Variable>,
    /// Reassignments applied to every other random sample so that the
    /// antecedent of a conditional law is exercised.
    pub bias: Vec<(String, Term)>,
    /// Stored counterexample in the environment file format.
    pub witness: Option<&'static str>,
    /// Where the value checked here differs from a displayed source value.
    pub discrepancy: Option<&'static str>,
    uses_star: bool,
}

fn term_uses_star(t: &Term) -> bool {
    match t {
        Term::Star(_) | Term::BStar(..) => true,
        Term::Zero | Term::UnitSeq | Term::UnitPar | Term::Univ | Term::Var(_) => false,
        Term::Dom(x) | Term::Anti(x) => term_uses_star(x),
        Term::Plus(x, y) | Term::Seq(x, y) | Term::Par(x, y) | Term::Dia(x, y) | Term::Box(x, y) => {
            term_uses_star(x) || term_uses_star(y)
        }
    }
}

fn formula_uses_star(f: &Formula) -> bool {
    let atoms: Vec<&Atom> = match f {
        Formula::Conj(c) => c.iter().collect(),
        Formula::Implies(a, c) | Formula::Iff(a, c) => a.iter().chain(c).collect(),
    };
    atoms.into_iter().any(|a| match a {
        Atom::Eq(l, r) | Atom::Le(l, r) | Atom::Ge(l, r) => term_uses_star(l) || term_uses_star(r),
    })
}

impl Law {
    pub fn arity(&self) -> usize {
        self.vars.len()
    }

    pub fn uses_star(&self) -> bool {
        self.uses_star
    }

    pub fn statement(&self) -> String {
        match &self.check {
            Check::Formula(f) => f.to_string(),
            Check::Native(_) => self.anchor.to_string(),
        }
    }

    pub fn is_axiom(&self) -> bool {
        self.group.is_some()
    }

    /// Checks the law in an arbitrary algebra; `values` follows `self.vars`.
    pub fn check_in<A: Algebra + ?Sized>(&self, alg: &A, values: &[A::Elem]) -> Result<Verdict> {
        let Check::Formula(f) = &self.check else {
            return Err(Error::Unsupported("native law outside the multirelation model"));
        };
        let lookup = |name: &str| -> Result<A::Elem> {
            self.vars
                .iter()
                .position(|v| v.name == name)
                .map(|i| values[i].clone())
                .ok_or_else(|| Error::Unbound(name.to_string()))
        };
        eval_formula(alg, f, &lookup)
    }

    fn check_values(&self, alg: &MrelAlgebra, values: &[Multirelation]) -> Result<Verdict> {
        match &self.check {
            Check::Formula(_) => self.check_in(alg, values),
            Check::Native(f) => f(values),
        }
    }

    /// Binding values for this law's variables from an environment,
    /// enforcing the test constraint.
    pub fn bind(&self, env: &Environment) -> Result<Vec<Multirelation>> {
        self.vars
            .iter()
            .map(|v| {
                let value = env.lookup(&v.name)?;
                if v.kind == VarKind::Test && !value.is_subidentity() {
                    return Err(Error::Invalid(format!("`{}` must be bound to a subidentity", v.name)));
                }
                Ok(value.clone())
            })
            .collect()
    }
}

/// Checks `law` on the bindings in `env`.
pub fn check_law(law: &Law, env: &Environment) -> Result<Verdict> {
    let values = law.bind(env)?;
    law.check_values(&MrelAlgebra::new(env.universe()), &values)
}
