//! Law formulas: equations and inequations between terms, joined by
//! conjunction, implication, or equivalence.
//!
//! ```text
//! formula ::= conj | conj => conj | conj <=> conj
//! conj    ::= atom (& atom)*
//! atom    ::= t = t | t <= t | t >= t
//! ```

use std::fmt;

use crate::algebra::Algebra;
use crate::error::Result;
use crate::term::{eval_in, Parser, Term, Token};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Atom {
    Eq(Term, Term),
    Le(Term, Term),
    Ge(Term, Term),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Formula {
    Conj(Vec<Atom>),
    Implies(Vec<Atom>, Vec<Atom>),
    Iff(Vec<Atom>, Vec<Atom>),
}

/// Outcome of checking a formula under one assignment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub holds: bool,
    /// Whether the antecedent held, for implications.
    pub antecedent: Option<bool>,
    /// Values of the two sides of the first failing atom.
    pub lhs: Option<String>,
    pub rhs: Option<String>,
}

impl Atom {
    fn sides(&self) -> (&Term, &Term) {
        match self {
            Atom::Eq(l, r) | Atom::Le(l, r) | Atom::Ge(l, r) => (l, r),
        }
    }

    fn collect_vars(&self, out: &mut Vec<String>) {
        let (l, r) = self.sides();
        l.collect_vars(out);
        r.collect_vars(out);
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Eq(l, r) => write!(f, "{l} = {r}"),
            Atom::Le(l, r) => write!(f, "{l} <= {r}"),
            Atom::Ge(l, r) => write!(f, "{l} >= {r}"),
        }
    }
}

fn write_conj(f: &mut fmt::Formatter<'_>, atoms: &[Atom]) -> fmt::Result {
    for (i, a) in atoms.iter().enumerate() {
        if i > 0 {
            f.write_str(" & ")?;
        }
        write!(f, "{a}")?;
    }
    Ok(())
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Conj(c) => write_conj(f, c),
            Formula::Implies(a, c) => {
                write_conj(f, a)?;
                f.write_str(" => ")?;
                write_conj(f, c)
            }
            Formula::Iff(a, c) => {
                write_conj(f, a)?;
                f.write_str(" <=> ")?;
                write_conj(f, c)
            }
        }
    }
}

impl Formula {
    /// Variables in order of first occurrence.
    pub fn variables(&self) -> Vec<String> {
        let mut out = Vec::new();
        let (a, b): (&[Atom], &[Atom]) = match self {
            Formula::Conj(c) => (c, &[]),
            Formula::Implies(a, c) | Formula::Iff(a, c) => (a, c),
        };
        a.iter().chain(b).for_each(|atom| atom.collect_vars(&mut out));
        out
    }

    pub fn is_conditional(&self) -> bool {
        !matches!(self, Formula::Conj(_))
    }
}

fn parse_atom(p: &mut Parser) -> Result<Atom> {
    let lhs = p.term()?;
    let op = p.bump();
    let rhs = p.term()?;
    match op {
        Token::Eq => Ok(Atom::Eq(lhs, rhs)),
        Token::Le => Ok(Atom::Le(lhs, rhs)),
        Token::Ge => Ok(Atom::Ge(lhs, rhs)),
        _ => Err(p.error("expected `=`, `<=` or `>=`")),
    }
}

fn parse_conj(p: &mut Parser) -> Result<Vec<Atom>> {
    let mut atoms = vec![parse_atom(p)?];
    while *p.peek() == Token::Amp {
        p.bump();
        atoms.push(parse_atom(p)?);
    }
    Ok(atoms)
}

pub fn parse_formula(text: &str) -> Result<Formula> {
    let mut p = Parser::new(text)?;
    let first = parse_conj(&mut p)?;
    let f = match p.peek() {
        Token::Implies => {
            p.bump();
            Formula::Implies(first, parse_conj(&mut p)?)
        }
        Token::Iff => {
            p.bump();
            Formula::Iff(first, parse_conj(&mut p)?)
        }
        _ => Formula::Conj(first),
    };
    p.finish()?;
    Ok(f)
}

struct AtomValue {
    holds: bool,
    lhs: String,
    rhs: String,
}

fn eval_atom<A, F>(alg: &A, atom: &Atom, lookup: &F) -> Result<AtomValue>
where
    A: Algebra + ?Sized,
    F: Fn(&str) -> Result<A::Elem> + ?Sized,
{
    let (l, r) = atom.sides();
    let lv = eval_in(alg, l, lookup)?;
    let rv = eval_in(alg, r, lookup)?;
    let holds = match atom {
        Atom::Eq(..) => lv == rv,
        Atom::Le(..) => alg.le(&lv, &rv)?,
        Atom::Ge(..) => alg.le(&rv, &lv)?,
    };
    let (lhs, rhs) = if holds { (String::new(), String::new()) } else { (alg.render(&lv), alg.render(&rv)) };
    Ok(AtomValue { holds, lhs, rhs })
}

/// First failing atom of a conjunction, if any.
fn eval_conj<A, F>(alg: &A, atoms: &[Atom], lookup: &F) -> Result<Option<AtomValue>>
where
    A: Algebra + ?Sized,
    F: Fn(&str) -> Result<A::Elem> + ?Sized,
{
    for atom in atoms {
        let v = eval_atom(alg, atom, lookup)?;
        if !v.holds {
            return Ok(Some(v));
        }
    }
    Ok(None)
}

pub fn eval_formula<A, F>(alg: &A, formula: &Formula, lookup: &F) -> Result<Verdict>
where
    A: Algebra + ?Sized,
    F: Fn(&str) -> Result<A::Elem> + ?Sized,
{
    let fail = |v: AtomValue, antecedent| Verdict { holds: false, antecedent, lhs: Some(v.lhs), rhs: Some(v.rhs) };
    let pass = |antecedent| Verdict { holds: true, antecedent, lhs: None, rhs: None };
    match formula {
        Formula::Conj(atoms) => Ok(match eval_conj(alg, atoms, lookup)? {
            Some(v) => fail(v, None),
            None => pass(None),
        }),
        Formula::Implies(ante, cons) => {
            if eval_conj(alg, ante, lookup)?.is_some() {
                return Ok(pass(Some(false)));
            }
            Ok(match eval_conj(alg, cons, lookup)? {
                Some(v) => fail(v, Some(true)),
                None => pass(Some(true)),
            })
        }
        Formula::Iff(left, right) => {
            let l = eval_conj(alg, left, lookup)?;
            let r = eval_conj(alg, right, lookup)?;
            let describe = |side: &Option<AtomValue>, atoms: &[Atom]| match side {
                None => format!("holds: {}", atoms.iter().map(ToString::to_string).collect::<Vec<_>>().join(" & ")),
                Some(v) => format!("fails: {} vs {}", v.lhs, v.rhs),
            };
            if l.is_none() == r.is_none() {
                Ok(pass(Some(l.is_none())))
            } else {
                Ok(Verdict {
                    holds: false,
                    antecedent: Some(l.is_none()),
                    lhs: Some(describe(&l, left)),
                    rhs: Some(describe(&r, right)),
                })
            }
        }
    }
}
