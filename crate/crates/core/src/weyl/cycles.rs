//! Cycle notation for (signed) permutations.

use std::collections::HashMap;

use crate::error::{Error, Result};

use super::{GroupKind, WeylElement};

pub(super) fn format_cycles(w: &WeylElement, with_fixed_points: bool) -> String {
    let mut out = String::new();
    for cycle in w.cycles() {
        if cycle.len() == 1 && !(with_fixed_points && cycle[0] > 0) {
            continue;
        }
        out.push('(');
        let body: Vec<String> = cycle.iter().map(i32::to_string).collect();
        out.push_str(&body.join(","));
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

pub(super) fn parse_cycles(kind: GroupKind, n: usize, text: &str) -> Result<WeylElement> {
    let normalized = text.replace('\u{2212}', "-");
    let trimmed = normalized.trim();
    let mut map: HashMap<i32, i32> = HashMap::new();
    let mut assign = |from: i32, to: i32, token: &str| -> Result<()> {
        match map.insert(from, to) {
            Some(old) if old != to => Err(Error::parse(
                token,
                format!("{from} is sent to both {old} and {to}"),
            )),
            _ => Ok(()),
        }
    };
    if !(trimmed.is_empty() || trimmed == "e" || trimmed == "()") {
        let mut rest = trimmed;
        while !rest.is_empty() {
            let open = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::parse(rest, "expected `(` to start a cycle"))?;
            let close = open
                .find(')')
                .ok_or_else(|| Error::parse(rest, "unterminated cycle"))?;
            let token = &rest[..close + 2];
            let entries = open[..close]
                .split(',')
                .map(|s| {
                    let s = s.trim();
                    let v: i32 = s
                        .parse()
                        .map_err(|_| Error::parse(s, "expected an integer"))?;
                    if v == 0 || v.unsigned_abs() as usize > n || (v < 0 && !kind.is_signed()) {
                        return Err(Error::parse(
                            s,
                            format!("not a point of the group acting on {n} letters"),
                        ));
                    }
                    Ok(v)
                })
                .collect::<Result<Vec<i32>>>()?;
            for k in 0..entries.len() {
                let (from, to) = (entries[k], entries[(k + 1) % entries.len()]);
                assign(from, to, token)?;
                if kind.is_signed() {
                    assign(-from, -to, token)?;
                }
            }
            rest = open[close + 1..].trim_start();
        }
    }
    let images = (1..=n as i32)
        .map(|i| map.get(&i).copied().unwrap_or(i))
        .collect();
    WeylElement::from_images(kind, images).map_err(|e| Error::parse(text, e.to_string()))
}
