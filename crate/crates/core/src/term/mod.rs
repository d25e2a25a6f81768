//! Concurrent dynamic algebra terms: syntax, parsing, printing, evaluation.
//!
//! Concrete syntax (ASCII):
//!
//! ```text
//! t ::= 0 | 1s | 1p | U | ident | d(t) | a(t) | bstar(t, t)
//!     | t + t | t ; t | t || t | t^* | <t> t | [t] t | (t)
//! ```
//!
//! Precedence from tightest: postfix `^*`, prefix `<t>`/`[t]`, `;`, `||`, `+`.
//! Binary operators associate to the left.

mod env;
mod eval;
mod parse;

use std::fmt;

pub use env::Environment;
pub use eval::{eval_in, eval_term};
pub use parse::parse_term;
pub(crate) use parse::{Parser, Token};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Term {
    Zero,
    UnitSeq,
    UnitPar,
    Univ,
    Var(String),
    Plus(Box<Term>, Box<Term>),
    Seq(Box<Term>, Box<Term>),
    Par(Box<Term>, Box<Term>),
    Dom(Box<Term>),
    Anti(Box<Term>),
    Star(Box<Term>),
    BStar(Box<Term>, Box<Term>),
    Dia(Box<Term>, Box<Term>),
    Box(Box<Term>, Box<Term>),
}

/// Words that cannot name variables.
pub const RESERVED: &[&str] = &["U", "bstar"];

impl Term {
    pub fn var(name: impl Into<String>) -> Term {
        Term::Var(name.into())
    }

    pub fn plus(x: Term, y: Term) -> Term {
        Term::Plus(Box::new(x), Box::new(y))
    }

    pub fn seq(x: Term, y: Term) -> Term {
        Term::Seq(Box::new(x), Box::new(y))
    }

    pub fn par(x: Term, y: Term) -> Term {
        Term::Par(Box::new(x), Box::new(y))
    }

    pub fn dom(x: Term) -> Term {
        Term::Dom(Box::new(x))
    }

    pub fn anti(x: Term) -> Term {
        Term::Anti(Box::new(x))
    }

    pub fn star(x: Term) -> Term {
        Term::Star(Box::new(x))
    }

    pub fn bstar(x: Term, y: Term) -> Term {
        Term::BStar(Box::new(x), Box::new(y))
    }

    pub fn dia(x: Term, y: Term) -> Term {
        Term::Dia(Box::new(x), Box::new(y))
    }

    pub fn boxed(x: Term, y: Term) -> Term {
        Term::Box(Box::new(x), Box::new(y))
    }

    /// Variable names in order of first occurrence.
    pub fn variables(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.collect_vars(&mut out);
        out
    }

    pub(crate) fn collect_vars(&self, out: &mut Vec<String>) {
        match self {
            Term::Var(v) => {
                if !out.contains(v) {
                    out.push(v.clone());
                }
            }
            Term::Zero | Term::UnitSeq | Term::UnitPar | Term::Univ => {}
            Term::Dom(x) | Term::Anti(x) | Term::Star(x) => x.collect_vars(out),
            Term::Plus(x, y)
            | Term::Seq(x, y)
            | Term::Par(x, y)
            | Term::BStar(x, y)
            | Term::Dia(x, y)
            | Term::Box(x, y) => {
                x.collect_vars(out);
                y.collect_vars(out);
            }
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            Term::Plus(..) => 1,
            Term::Par(..) => 2,
            Term::Seq(..) => 3,
            Term::Dia(..) | Term::Box(..) => 4,
            Term::Star(..) => 5,
            _ => 6,
        }
    }

    fn write_child(&self, f: &mut fmt::Formatter<'_>, child: &Term, min: u8) -> fmt::Result {
        let _ = self;
        if child.precedence() < min {
            write!(f, "({child})")
        } else {
            write!(f, "{child}")
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let binary = |f: &mut fmt::Formatter<'_>, x: &Term, op: &str, y: &Term| {
            let p = self.precedence();
            self.write_child(f, x, p)?;
            f.write_str(op)?;
            self.write_child(f, y, p + 1)
        };
        match self {
            Term::Zero => f.write_str("0"),
            Term::UnitSeq => f.write_str("1s"),
            Term::UnitPar => f.write_str("1p"),
            Term::Univ => f.write_str("U"),
            Term::Var(v) => f.write_str(v),
            Term::Plus(x, y) => binary(f, x, " + ", y),
            Term::Seq(x, y) => binary(f, x, " ; ", y),
            Term::Par(x, y) => binary(f, x, " || ", y),
            Term::Dom(x) => write!(f, "d({x})"),
            Term::Anti(x) => write!(f, "a({x})"),
            Term::BStar(x, y) => write!(f, "bstar({x}, {y})"),
            Term::Star(x) => {
                self.write_child(f, x, 5)?;
                f.write_str("^*")
            }
            Term::Dia(x, y) => {
                write!(f, "<{x}>")?;
                self.write_child(f, y, 4)
            }
            Term::Box(x, y) => {
                write!(f, "[{x}]")?;
                self.write_child(f, y, 4)
            }
        }
    }
}
