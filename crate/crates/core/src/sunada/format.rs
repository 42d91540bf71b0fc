//! Text format for a finite group and some of its subgroups:
//!
//! ```text
//! group: zn-semidirect 8
//! sub: (1,0) (3,0) (5,0) (7,0)
//! ```
//!
//! or
//!
//! ```text
//! group: perm 7
//! gen: (1 2 3 4 5 6 7)
//! gen: (2 3)(4 7)
//! sub: e3 e7
//! ```
//!
//! A `sub:` line lists elements (by label or as `eK`) and denotes the
//! subgroup they generate.

use crate::error::{Error, ParseError};
use crate::sunada::group::{
    format_cycles, group_from_permutations, parse_cycles, semidirect_zn, FiniteGroup, Permutation, Subgroup,
    DEFAULT_ORDER_CAP,
};

#[derive(Clone, Debug)]
pub struct GroupFile {
    pub group: FiniteGroup,
    pub subgroups: Vec<Subgroup>,
}

enum Kind {
    Semidirect(u64),
    Perm(usize),
}

pub fn parse_group_file(text: &str) -> Result<GroupFile, Error> {
    let syntax = |line: usize, message: String| Error::Parse(ParseError::Syntax { line, message });
    let mut kind = None;
    let mut gens: Vec<Permutation> = Vec::new();
    let mut subs: Vec<(usize, Vec<String>)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) =
            line.split_once(':').ok_or_else(|| syntax(lineno, format!("expected `key: value`, found {line:?}")))?;
        let value = value.trim();
        match key.trim() {
            "group" => {
                let mut it = value.split_whitespace();
                let k = match (it.next(), it.next(), it.next()) {
                    (Some("zn-semidirect"), Some(n), None) => {
                        Kind::Semidirect(n.parse().map_err(|_| syntax(lineno, format!("bad modulus {n:?}")))?)
                    }
                    (Some("perm"), Some(d), None) => {
                        Kind::Perm(d.parse().map_err(|_| syntax(lineno, format!("bad degree {d:?}")))?)
                    }
                    _ => return Err(syntax(lineno, format!("unknown group description {value:?}"))),
                };
                if kind.replace(k).is_some() {
                    return Err(syntax(lineno, "second `group:` line".into()));
                }
            }
            "gen" => match kind {
                Some(Kind::Perm(degree)) => gens.push(parse_cycles(value, degree)?),
                _ => return Err(syntax(lineno, "`gen:` is only valid after `group: perm N`".into())),
            },
            "sub" => subs.push((lineno, split_elements(value))),
            other => return Err(syntax(lineno, format!("unknown key `{other}`"))),
        }
    }
    let kind_degree = match kind {
        Some(Kind::Perm(d)) => Some(d),
        _ => None,
    };
    let group = match kind {
        Some(Kind::Semidirect(n)) => semidirect_zn(n)?,
        Some(Kind::Perm(degree)) => group_from_permutations(degree, &gens, DEFAULT_ORDER_CAP)?,
        None => return Err(syntax(1, "missing `group:` line".into())),
    };
    let mut subgroups = Vec::with_capacity(subs.len());
    for (lineno, tokens) in subs {
        let mut elems = Vec::with_capacity(tokens.len());
        for t in tokens {
            let e = resolve(&group, kind_degree, &t).ok_or_else(|| syntax(lineno, format!("unknown element {t:?}")))?;
            elems.push(e);
        }
        subgroups.push(Subgroup::generated(&group, &elems));
    }
    Ok(GroupFile { group, subgroups })
}

/// Look up an element written as `eK`, as a `(a,b)` pair, or (for
/// permutation groups of the given degree) in cycle notation.
fn resolve(group: &FiniteGroup, degree: Option<usize>, token: &str) -> Option<usize> {
    if let Some(e) = group.find(token) {
        return Some(e);
    }
    match degree {
        Some(d) => group.find(&format_cycles(&parse_cycles(token, d).ok()?)),
        None => group.find(&token.split_whitespace().collect::<String>()),
    }
}

/// Split `(1,0) (3, 4) e5` into `["(1,0)", "(3, 4)", "e5"]`.
fn split_elements(value: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut depth = 0;
    for ch in value.chars() {
        match ch {
            '(' => {
                depth += 1;
                cur.push(ch);
            }
            ')' => {
                depth -= 1;
                cur.push(ch);
            }
            c if c.is_whitespace() => {
                if depth == 0 {
                    if !cur.is_empty() {
                        out.push(std::mem::take(&mut cur));
                    }
                } else {
                    cur.push(' ');
                }
            }
            c => cur.push(c),
        }
    }
    if !cur.is_empty() {
        out.push(cur);
    }
    out
}
