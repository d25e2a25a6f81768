//! Line-oriented text format for environments of named multirelations.
//!
//! ```text
//! # comment
//! universe a b c
//! rel R
//! a -> { b, c }
//! b -> {}
//! end
//! ```

use std::fs;
use std::path::Path;

use crate::error::{Error, Result};
use crate::mrel::Multirelation;
use crate::term::Environment;
use crate::universe::{Mask, Universe};

fn format_err(line: usize, message: impl Into<String>) -> Error {
    Error::Format { line, message: message.into() }
}

/// Parses `{ a, b }` (or `{}`) into a mask; `line` is used for diagnostics.
fn parse_set(universe: &Universe, text: &str, line: usize) -> Result<Mask> {
    let inner = text
        .trim()
        .strip_prefix('{')
        .and_then(|s| s.strip_suffix('}'))
        .ok_or_else(|| format_err(line, format!("expected a set in braces, found `{}`", text.trim())))?;
    if inner.trim().is_empty() {
        return Ok(0);
    }
    inner.split(',').try_fold(0, |mask, name| {
        let name = name.trim();
        let i = universe
            .index_of(name)
            .ok_or_else(|| format_err(line, format!("unknown element `{name}`")))?;
        Ok(mask | (1 << i))
    })
}

fn parse_pair(universe: &Universe, text: &str, line: usize) -> Result<(usize, Mask)> {
    let (lhs, rhs) = text
        .split_once("->")
        .ok_or_else(|| format_err(line, format!("expected `elem -> {{ ... }}`, found `{text}`")))?;
    let a = lhs.trim();
    let a = universe
        .index_of(a)
        .ok_or_else(|| format_err(line, format!("unknown element `{a}`")))?;
    Ok((a, parse_set(universe, rhs, line)?))
}

/// Parses an environment document.
type OpenBlock = (String, usize, Vec<(usize, Mask)>);

pub fn parse_env(text: &str) -> Result<Environment> {
    let mut env: Option<Environment> = None;
    // Name, opening line and pairs of the relation block being read.
    let mut open: Option<OpenBlock> = None;
    let mut seen = std::collections::HashSet::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let mut words = content.split_whitespace();
        let head = words.next().unwrap_or("");
        match head {
            "universe" if open.is_none() => {
                if env.is_some() {
                    return Err(format_err(line, "duplicate `universe` line"));
                }
                let universe = Universe::new(words).map_err(|e| format_err(line, e.to_string()))?;
                env = Some(Environment::new(&universe));
            }
            "rel" if open.is_none() => {
                if env.is_none() {
                    return Err(format_err(line, "`rel` before `universe`"));
                }
                let name = words.next().ok_or_else(|| format_err(line, "`rel` needs a name"))?;
                if words.next().is_some() {
                    return Err(format_err(line, "trailing text after relation name"));
                }
                if !seen.insert(name.to_string()) {
                    return Err(format_err(line, format!("duplicate relation `{name}`")));
                }
                open = Some((name.to_string(), line, Vec::new()));
            }
            "end" if content == "end" => {
                let (name, start, pairs) = open.take().ok_or_else(|| format_err(line, "`end` outside a relation block"))?;
                let env = env.as_mut().expect("checked at `rel`");
                let r = Multirelation::from_pairs(env.universe(), pairs).map_err(|e| format_err(line, e.to_string()))?;
                env.bind(&name, r).map_err(|e| format_err(start, e.to_string()))?;
            }
            _ => match open.as_mut() {
                Some((_, _, pairs)) => {
                    let universe = env.as_ref().expect("checked at `rel`").universe();
                    pairs.push(parse_pair(universe, content, line)?);
                }
                None => return Err(format_err(line, format!("unexpected `{content}`"))),
            },
        }
    }
    if let Some((name, start, _)) = open {
        return Err(format_err(start, format!("relation `{name}` is missing `end`")));
    }
    env.ok_or_else(|| format_err(0, "missing `universe` line"))
}

/// One relation block, without the universe line.
pub fn render_relation(name: &str, r: &Multirelation) -> String {
    let u = r.universe();
    let mut out = format!("rel {name}\n");
    for (a, m) in r.pairs() {
        out.push_str(&format!("{} -> {}\n", u.name(a), u.render_mask(m)));
    }
    out.push_str("end\n");
    out
}

/// The canonical form: relations in name order, pairs in canonical order.
pub fn render_env(env: &Environment) -> String {
    let mut out = format!("universe {}\n", env.universe().names().join(" "));
    for (name, r) in env.iter() {
        out.push('\n');
        out.push_str(&render_relation(name, r));
    }
    out
}

/// A standalone document binding a single relation.
pub fn render_single(name: &str, r: &Multirelation) -> String {
    format!("universe {}\n\n{}", r.universe().names().join(" "), render_relation(name, r))
}

pub fn load_env(path: impl AsRef<Path>) -> Result<Environment> {
    parse_env(&fs::read_to_string(path)?)
}

pub fn save_env(env: &Environment, path: impl AsRef<Path>) -> Result<()> {
    fs::write(path, render_env(env))?;
    Ok(())
}

/// Parses the compact form `{ a -> {a}, b -> {} }` produced by
/// [`Multirelation::to_compact_string`].
pub fn parse_relation_literal(universe: &Universe, text: &str) -> Result<Multirelation> {
    let bad = |m: &str| Error::Syntax { offset: 0, message: m.to_string() };
    let inner = text
        .trim()
        .strip_prefix('{')
        .and_then(|s| s.strip_suffix('}'))
        .ok_or_else(|| bad("expected `{ ... }`"))?;
    let mut pairs = Vec::new();
    let mut rest = inner.trim();
    while !rest.is_empty() {
        let close = rest.find('}').ok_or_else(|| bad("unterminated set"))?;
        let (a, m) = parse_pair(universe, &rest[..=close], 1).map_err(|e| bad(&e.to_string()))?;
        pairs.push((a, m));
        rest = rest[close + 1..].trim_start();
        if let Some(r) = rest.strip_prefix(',') {
            rest = r.trim_start();
            if rest.is_empty() {
                return Err(bad("trailing comma"));
            }
        } else if !rest.is_empty() {
            return Err(bad("expected `,` between pairs"));
        }
    }
    Multirelation::from_pairs(universe, pairs)
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE: &str = "# sample\nuniverse a b\n\nrel S\nb -> { a, b }\na -> {b}   # trailing comment\na -> {}\nend\nrel R\na -> {}\nend\n";

    #[test]
    fn loads_and_canonicalizes() {
        let env = parse_env(SAMPLE).unwrap();
        let u = env.universe().clone();
        assert_eq!(env.lookup("R").unwrap(), &Multirelation::from_named(&u, [("a", Vec::<&str>::new())]).unwrap());
        let canonical = render_env(&env);
        assert_eq!(
            canonical,
            "universe a b\n\nrel R\na -> {}\nend\n\nrel S\na -> {}\na -> { b }\nb -> { a, b }\nend\n"
        );
        assert_eq!(render_env(&parse_env(&canonical).unwrap()), canonical);
    }

    #[test]
    fn errors_carry_lines() {
        let e = parse_env("universe a b\nrel R\na -> { c }\nend\n").unwrap_err();
        assert!(matches!(e, Error::Format { line: 3, .. }), "{e:?}");
        let e = parse_env("universe a\nrel R\nend\nrel R\nend\n").unwrap_err();
        assert!(matches!(e, Error::Format { line: 4, .. }), "{e:?}");
        let e = parse_env("universe a\nrel R\na -> {}\n").unwrap_err();
        assert!(matches!(e, Error::Format { line: 2, .. }), "{e:?}");
        let e = parse_env("rel R\nend\n").unwrap_err();
        assert!(matches!(e, Error::Format { line: 1, .. }), "{e:?}");
        let e = parse_env("universe a a\n").unwrap_err();
        assert!(matches!(e, Error::Format { line: 1, .. }), "{e:?}");
        let e = parse_env("universe a\nrel U\nend\n").unwrap_err();
        assert!(matches!(e, Error::Format { line: 2, .. }), "{e:?}");
        let e = parse_env("universe a\na -> {}\n").unwrap_err();
        assert!(matches!(e, Error::Format { line: 2, .. }), "{e:?}");
    }

    #[test]
    fn compact_literals_round_trip() {
        let u = Universe::alphabetic(3).unwrap();
        let r = Multirelation::from_named(&u, [("a", vec!["a", "c"]), ("b", vec![]), ("c", vec!["b"])]).unwrap();
        let text = r.to_compact_string();
        assert_eq!(text, "{ a -> {a, c}, b -> {}, c -> {b} }");
        assert_eq!(parse_relation_literal(&u, &text).unwrap(), r);
        assert!(parse_relation_literal(&u, "{}").unwrap().is_empty());
        assert!(parse_relation_literal(&u, "{ a -> {a}, }").is_err());
        assert!(parse_relation_literal(&u, "{ a -> {z} }").is_err());
    }

    #[test]
    fn single_documents_load() {
        let u = Universe::alphabetic(2).unwrap();
        let r = Multirelation::universal(&u);
        let env = parse_env(&render_single("result", &r)).unwrap();
        assert_eq!(env.lookup("result").unwrap(), &r);
    }
}
