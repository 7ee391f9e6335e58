//! Group-spec mini-language used by the CLI.
//!
//! `atom := "C"uint | "D"uint | "S"uint | "A"uint | "klein"` and
//! `group := atom ("x" atom)*`. Subgroup specs are either `elems:i,j,...`
//! or `gens:<tokens>`, where tokens are dihedral words over {s,t} (with
//! optional exponents, e.g. `s2`, `ts`), cycle notation for permutation
//! groups (e.g. `(0 1)(2 3)`, 0-based), and element indices otherwise.

use std::sync::Arc;

use super::{FiniteGroup, GroupError, Structure, Subgroup};
use crate::symchar::Permutation;

fn parse_atom(tok: &str) -> Result<Arc<FiniteGroup>, GroupError> {
    let bad = || GroupError::BadSpec(tok.to_string());
    if tok.eq_ignore_ascii_case("klein") {
        return FiniteGroup::klein();
    }
    let (head, num) = tok.split_at(1);
    let n: usize = num.parse().map_err(|_| bad())?;
    match head {
        "C" | "c" => FiniteGroup::cyclic(n),
        "D" | "d" => FiniteGroup::dihedral(n),
        "S" | "s" => FiniteGroup::symmetric(n),
        "A" | "a" => FiniteGroup::alternating(n),
        _ => Err(bad()),
    }
}

/// Parse e.g. `C4`, `D3`, `S4`, `klein`, `C3xC2xC2`.
pub fn parse_group_spec(spec: &str) -> Result<Arc<FiniteGroup>, GroupError> {
    let atoms: Vec<&str> = spec.split('x').collect();
    if atoms.is_empty() {
        return Err(GroupError::BadSpec(spec.to_string()));
    }
    let factors = atoms
        .iter()
        .map(|a| parse_atom(a.trim()))
        .collect::<Result<Vec<_>, _>>()?;
    FiniteGroup::direct_product(&factors)
}

/// Parse a dihedral word over the letters s and t with optional exponents.
fn dihedral_word(group: &FiniteGroup, word: &str) -> Result<usize, GroupError> {
    let Structure::Dihedral(m) = group.structure() else {
        return Err(GroupError::WrongStructure("dihedral"));
    };
    let m = *m as usize;
    let bytes = word.as_bytes();
    let mut i = 0;
    let mut acc = group.identity();
    while i < bytes.len() {
        let letter = bytes[i];
        i += 1;
        let mut exp = String::new();
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            exp.push(bytes[i] as char);
            i += 1;
        }
        let e: usize = if exp.is_empty() {
            1
        } else {
            exp.parse().unwrap()
        };
        let base = match letter {
            b's' => 1,
            b't' => m,
            _ => return Err(GroupError::BadSpec(format!("dihedral word `{word}`"))),
        };
        acc = group.mul(acc, group.pow(base, e));
    }
    Ok(acc)
}

/// Parse 0-based cycle notation like `(0 1)(2 3)` or `(0,1,2)`.
fn cycles_to_element(group: &FiniteGroup, text: &str) -> Result<usize, GroupError> {
    let perms = group
        .perm_realization()
        .ok_or(GroupError::WrongStructure("permutation"))?;
    let degree = perms[0].degree();
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut rest = text.trim();
    while !rest.is_empty() {
        if !rest.starts_with('(') {
            return Err(GroupError::BadSpec(format!("cycle notation `{text}`")));
        }
        let close = rest
            .find(')')
            .ok_or_else(|| GroupError::BadSpec(format!("cycle notation `{text}`")))?;
        let inner = &rest[1..close];
        let cyc: Vec<usize> = inner
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .map(|s| {
                s.parse()
                    .map_err(|_| GroupError::BadSpec(format!("cycle entry `{s}`")))
            })
            .collect::<Result<_, _>>()?;
        cycles.push(cyc);
        rest = rest[close + 1..].trim_start();
    }
    let p = Permutation::from_cycles(degree, &cycles)
        .map_err(|e| GroupError::BadSpec(e.to_string()))?;
    perms
        .iter()
        .position(|x| *x == p)
        .ok_or_else(|| GroupError::BadSpec(format!("permutation {text} not in group")))
}

/// Parse `elems:0,2` or `gens:...` relative to a group.
pub fn parse_subgroup_spec(
    group: &Arc<FiniteGroup>,
    spec: &str,
) -> Result<Subgroup, GroupError> {
    if let Some(rest) = spec.strip_prefix("elems:") {
        let elems: Vec<usize> = rest
            .split(',')
            .filter(|s| !s.is_empty())
            .map(|s| {
                s.trim()
                    .parse()
                    .map_err(|_| GroupError::BadSpec(format!("element `{s}`")))
            })
            .collect::<Result<_, _>>()?;
        return Subgroup::from_elements(group, elems);
    }
    if let Some(rest) = spec.strip_prefix("gens:") {
        let rest = rest.trim();
        let gens: Vec<usize> = if rest.is_empty() {
            Vec::new()
        } else if rest.starts_with('(') {
            // cycle notation: each generator separated by ';'
            rest.split(';')
                .filter(|s| !s.trim().is_empty())
                .map(|s| cycles_to_element(group, s.trim()))
                .collect::<Result<_, _>>()?
        } else if matches!(group.structure(), Structure::Dihedral(_))
            && rest
                .chars()
                .all(|c| c == 's' || c == 't' || c.is_ascii_digit() || c == ',' || c == ' ')
            && rest.chars().any(|c| c == 's' || c == 't')
        {
            rest.split(',')
                .filter(|s| !s.trim().is_empty())
                .map(|w| dihedral_word(group, w.trim()))
                .collect::<Result<_, _>>()?
        } else {
            rest.split(',')
                .filter(|s| !s.trim().is_empty())
                .map(|s| {
                    s.trim()
                        .parse()
                        .map_err(|_| GroupError::BadSpec(format!("element `{s}`")))
                })
                .collect::<Result<_, _>>()?
        };
        return group.subgroup_closure(&gens);
    }
    Err(GroupError::BadSpec(spec.to_string()))
}
