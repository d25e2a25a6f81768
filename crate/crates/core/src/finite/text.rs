//! Text format for table models.
//!
//! ```text
//! name chain3
//! note <1p>0 = 0
//! claims dp-trioid
//! carrier 0 1s 1p
//! const zero 0
//! const one_seq 1s
//! const one_par 1p
//! table plus
//! 0  | 0 1s 1p
//! 1s | 1s 1s 1p
//! 1p | 1p 1p 1p
//! end
//! table d
//! 0  | 0
//! 1s | 1s
//! 1p | 1s
//! end
//! ```
//!
//! Binary tables are `plus`, `seq` and `par`; unary ones are `d`, `a` and
//! `star`. Rows may come in any order. `#` starts a comment.

use std::fmt::Write as _;

use super::FiniteAlgebra;
use crate::error::{Error, Result};
use crate::laws::System;

fn err(line: usize, message: impl Into<String>) -> Error {
    Error::Format { line, message: message.into() }
}

#[derive(Default)]
struct Draft {
    name: Option<String>,
    notes: Vec<String>,
    claims: Vec<System>,
    carrier: Option<Vec<String>>,
    zero: Option<usize>,
    one_seq: Option<usize>,
    one_par: Option<usize>,
    plus: Option<Vec<Vec<usize>>>,
    seq: Option<Vec<Vec<usize>>>,
    par: Option<Vec<Vec<usize>>>,
    dom: Option<Vec<usize>>,
    anti: Option<Vec<usize>>,
    star: Option<Vec<usize>>,
}

fn lookup(carrier: &[String], name: &str, line: usize) -> Result<usize> {
    carrier.iter().position(|c| c == name).ok_or_else(|| err(line, format!("`{name}` is not in the carrier")))
}

pub fn parse_algebra(text: &str) -> Result<FiniteAlgebra> {
    let mut d = Draft::default();
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()));
    while let Some((no, line)) = lines.next() {
        if line.is_empty() {
            continue;
        }
        let (key, rest) = line.split_once(char::is_whitespace).map_or((line, ""), |(k, r)| (k, r.trim()));
        match key {
            "name" => d.name = Some(rest.to_string()),
            "note" => d.notes.push(rest.to_string()),
            "claims" => {
                for s in rest.split_whitespace() {
                    d.claims.push(s.parse().map_err(|e: Error| err(no, e.to_string()))?);
                }
            }
            "carrier" => {
                let names: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
                if names.is_empty() || names.iter().any(|n| n.contains('|')) {
                    return Err(err(no, "carrier needs one or more names without `|`"));
                }
                d.carrier = Some(names);
            }
            "const" => {
                let carrier = d.carrier.as_ref().ok_or_else(|| err(no, "`const` before `carrier`"))?;
                let (which, value) =
                    rest.split_once(char::is_whitespace).ok_or_else(|| err(no, "expected `const <which> <element>`"))?;
                let v = lookup(carrier, value.trim(), no)?;
                match which {
                    "zero" => d.zero = Some(v),
                    "one_seq" => d.one_seq = Some(v),
                    "one_par" => d.one_par = Some(v),
                    _ => return Err(err(no, format!("unknown constant `{which}`"))),
                }
            }
            "table" => {
                let carrier = d.carrier.clone().ok_or_else(|| err(no, "`table` before `carrier`"))?;
                let n = carrier.len();
                let binary = match rest {
                    "plus" | "seq" | "par" => true,
                    "d" | "a" | "star" => false,
                    _ => return Err(err(no, format!("unknown table `{rest}`"))),
                };
                let mut rows: Vec<Option<Vec<usize>>> = vec![None; n];
                loop {
                    let (rno, row) = lines.next().ok_or_else(|| err(no, format!("table `{rest}` lacks `end`")))?;
                    if row.is_empty() {
                        continue;
                    }
                    if row == "end" {
                        break;
                    }
                    let (label, values) =
                        row.split_once('|').ok_or_else(|| err(rno, "expected `<element> | <values>`"))?;
                    let r = lookup(&carrier, label.trim(), rno)?;
                    let values =
                        values.split_whitespace().map(|v| lookup(&carrier, v, rno)).collect::<Result<Vec<_>>>()?;
                    let want = if binary { n } else { 1 };
                    if values.len() != want {
                        return Err(err(rno, format!("expected {want} values, found {}", values.len())));
                    }
                    if rows[r].replace(values).is_some() {
                        return Err(err(rno, format!("row `{}` given twice", carrier[r])));
                    }
                }
                let rows: Vec<Vec<usize>> = rows
                    .into_iter()
                    .enumerate()
                    .map(|(i, r)| r.ok_or_else(|| err(no, format!("table `{rest}` has no row `{}`", carrier[i]))))
                    .collect::<Result<_>>()?;
                let unary = || rows.iter().map(|r| r[0]).collect::<Vec<_>>();
                match rest {
                    "plus" => d.plus = Some(rows),
                    "seq" => d.seq = Some(rows),
                    "par" => d.par = Some(rows),
                    "d" => d.dom = Some(unary()),
                    "a" => d.anti = Some(unary()),
                    _ => d.star = Some(unary()),
                }
            }
            _ => return Err(err(no, format!("unknown directive `{key}`"))),
        }
    }
    let last = text.lines().count();
    let need = |what: &str| err(last, format!("missing {what}"));
    let a = FiniteAlgebra {
        name: d.name.unwrap_or_else(|| "model".into()),
        notes: d.notes,
        claims: d.claims,
        carrier: d.carrier.ok_or_else(|| need("`carrier`"))?,
        zero: d.zero.ok_or_else(|| need("`const zero`"))?,
        one_seq: d.one_seq.ok_or_else(|| need("`const one_seq`"))?,
        one_par: d.one_par,
        plus: d.plus.ok_or_else(|| need("`table plus`"))?,
        seq: d.seq.ok_or_else(|| need("`table seq`"))?,
        par: d.par,
        dom: d.dom,
        anti: d.anti,
        star: d.star,
    };
    a.validate()?;
    Ok(a)
}

pub fn render_algebra(a: &FiniteAlgebra) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "name {}", a.name);
    for n in &a.notes {
        let _ = writeln!(out, "note {n}");
    }
    if !a.claims.is_empty() {
        let claims: Vec<&str> = a.claims.iter().map(|s| s.name()).collect();
        let _ = writeln!(out, "claims {}", claims.join(" "));
    }
    let _ = writeln!(out, "carrier {}", a.carrier.join(" "));
    let _ = writeln!(out, "const zero {}", a.carrier[a.zero]);
    let _ = writeln!(out, "const one_seq {}", a.carrier[a.one_seq]);
    if let Some(p) = a.one_par {
        let _ = writeln!(out, "const one_par {}", a.carrier[p]);
    }
    let width = a.carrier.iter().map(String::len).max().unwrap_or(1);
    let mut table = |name: &str, rows: Vec<Vec<usize>>| {
        let _ = writeln!(out, "table {name}");
        for (label, row) in a.carrier.iter().zip(rows) {
            let cells: Vec<&str> = row.iter().map(|&v| a.carrier[v].as_str()).collect();
            let _ = writeln!(out, "{label:<width$} | {}", cells.join(" "));
        }
        out.push_str("end\n");
    };
    table("plus", a.plus.clone());
    table("seq", a.seq.clone());
    if let Some(t) = &a.par {
        table("par", t.clone());
    }
    for (name, t) in [("d", &a.dom), ("a", &a.anti), ("star", &a.star)] {
        if let Some(t) = t {
            table(name, t.iter().map(|&v| vec![v]).collect());
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite::builtin_models;

    #[test]
    fn builtins_round_trip() {
        for m in builtin_models() {
            let text = render_algebra(&m);
            assert_eq!(parse_algebra(&text).unwrap(), m, "{text}");
        }
    }

    #[test]
    fn errors_carry_lines() {
        let text = "carrier 0 1\nconst zero 0\nconst one_seq 2\n";
        assert!(matches!(parse_algebra(text), Err(Error::Format { line: 3, .. })));
        let text = "carrier 0 1\nconst zero 0\nconst one_seq 1\ntable plus\n0 | 0 1\n1 | 1\nend\n";
        assert!(matches!(parse_algebra(text), Err(Error::Format { line: 6, .. })));
        let text = "carrier 0 1\nconst zero 0\nconst one_seq 1\ntable plus\n0 | 0 1\nend\n";
        assert!(matches!(parse_algebra(text), Err(Error::Format { line: 4, .. })));
        let text = "carrier 0 1\nconst zero 0\nconst one_seq 1\ntable plus\n0 | 0 1\n1 | 1 1\nend\n";
        assert!(matches!(parse_algebra(text), Err(Error::Format { .. })));
    }
}
