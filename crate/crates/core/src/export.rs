//! Text, JSON and Graphviz forms of roots, antichains and lattices.
//!
//! Antichain text is a comma-separated list of roots, each written as an
//! interval `[i,j]` (type A only), a coefficient vector `(c_1,…,c_r)` in the
//! simple roots, or a simple root `a3`. The empty antichain is `{}`.

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::poset::Antichain;
use crate::roots::RootPoset;
use crate::weyl::NoncrossingLattice;

fn is_type_a(rp: &RootPoset) -> bool {
    rp.cartan_type().family() == 'A'
}

/// `[i,j]` in type A, the coefficient vector otherwise.
pub fn root_label(rp: &RootPoset, x: usize) -> String {
    match rp.interval(x) {
        Ok((i, j)) => format!("[{i},{j}]"),
        Err(_) => {
            let body: Vec<String> = rp.root(x).coeffs.iter().map(i32::to_string).collect();
            format!("({})", body.join(","))
        }
    }
}

pub fn format_antichain(rp: &RootPoset, a: &Antichain) -> String {
    if a.is_empty() {
        return "{}".into();
    }
    let mut xs = a.to_vec();
    if is_type_a(rp) {
        xs.sort_by_key(|&x| rp.interval(x).unwrap());
    }
    xs.iter()
        .map(|&x| root_label(rp, x))
        .collect::<Vec<_>>()
        .join(",")
}

fn parse_numbers(token: &str, body: &str) -> Result<Vec<i32>> {
    body.split(',')
        .map(|s| {
            s.trim()
                .replace('\u{2212}', "-")
                .parse::<i32>()
                .map_err(|_| Error::parse(token, "expected a comma-separated list of integers"))
        })
        .collect()
}

fn parse_root(rp: &RootPoset, token: &str) -> Result<usize> {
    let unknown = || {
        Error::parse(
            token,
            format!("not a positive root of {}", rp.cartan_type()),
        )
    };
    if let Some(body) = token.strip_prefix('[').and_then(|t| t.strip_suffix(']')) {
        if !is_type_a(rp) {
            return Err(Error::parse(
                token,
                "interval notation is only available in type A",
            ));
        }
        match parse_numbers(token, body)?[..] {
            [i, j] if i > 0 && j > 0 => rp
                .index_of_interval(i as usize, j as usize)
                .map_err(|_| unknown()),
            _ => Err(unknown()),
        }
    } else if let Some(body) = token.strip_prefix('(').and_then(|t| t.strip_suffix(')')) {
        rp.index_of_coeffs(&parse_numbers(token, body)?)
            .ok_or_else(unknown)
    } else if let Some(digits) = token.strip_prefix('a').or_else(|| token.strip_prefix('α')) {
        match digits.parse::<usize>() {
            Ok(i) if (1..=rp.rank()).contains(&i) => Ok(rp.simple(i)),
            _ => Err(unknown()),
        }
    } else {
        Err(Error::parse(token, "expected [i,j], (c1,...,cr) or a<i>"))
    }
}

/// Splits antichain text into root tokens, respecting brackets.
fn tokens(text: &str) -> Result<Vec<&str>> {
    let mut out = Vec::new();
    let mut rest = text.trim();
    loop {
        rest = rest.trim_start_matches(|c: char| c == ',' || c.is_whitespace());
        if rest.is_empty() {
            return Ok(out);
        }
        let close = match rest.chars().next().unwrap() {
            '[' => Some(']'),
            '(' => Some(')'),
            _ => None,
        };
        let end = match close {
            Some(c) => rest
                .find(c)
                .map(|k| k + 1)
                .ok_or_else(|| Error::parse(rest, format!("missing `{c}`")))?,
            None => rest
                .find(|c: char| c == ',' || c.is_whitespace())
                .unwrap_or(rest.len()),
        };
        out.push(&rest[..end]);
        rest = &rest[end..];
    }
}

pub fn parse_antichain(rp: &RootPoset, text: &str) -> Result<Antichain> {
    let trimmed = text.trim();
    let inner = match trimmed {
        "{}" | "∅" => "",
        _ => trimmed
            .strip_prefix('{')
            .and_then(|t| t.strip_suffix('}'))
            .unwrap_or(trimmed),
    };
    let elems = tokens(inner)?
        .into_iter()
        .map(|t| parse_root(rp, t))
        .collect::<Result<Vec<_>>>()?;
    rp.antichain(elems)
        .map_err(|e| Error::parse(text, format!("not an antichain: {e}")))
}

/// JSON list of roots: `"[i,j]"` strings in type A, `{"coeffs": [...]}` otherwise.
pub fn antichain_to_json(rp: &RootPoset, a: &Antichain) -> Value {
    let mut xs = a.to_vec();
    if is_type_a(rp) {
        xs.sort_by_key(|&x| rp.interval(x).unwrap());
        Value::Array(
            xs.iter()
                .map(|&x| Value::String(root_label(rp, x)))
                .collect(),
        )
    } else {
        Value::Array(
            xs.iter()
                .map(|&x| json!({ "coeffs": rp.root(x).coeffs }))
                .collect(),
        )
    }
}

pub fn antichain_from_json(rp: &RootPoset, value: &Value) -> Result<Antichain> {
    let items = value
        .as_array()
        .ok_or_else(|| Error::parse(value.to_string(), "expected a JSON list of roots"))?;
    let elems = items
        .iter()
        .map(|item| match item {
            Value::String(s) => parse_root(rp, s),
            Value::Object(map) => {
                let coeffs: Vec<i32> = map
                    .get("coeffs")
                    .and_then(|c| serde_json::from_value(c.clone()).ok())
                    .ok_or_else(|| {
                        Error::parse(item.to_string(), "expected {\"coeffs\": [...]}")
                    })?;
                rp.index_of_coeffs(&coeffs)
                    .ok_or_else(|| Error::parse(item.to_string(), "not a positive root"))
            }
            _ => Err(Error::parse(item.to_string(), "expected a root")),
        })
        .collect::<Result<Vec<_>>>()?;
    rp.antichain(elems)
        .map_err(|e| Error::parse(value.to_string(), format!("not an antichain: {e}")))
}

/// Hasse diagram of the root poset, bottom to top, with `highlight` filled.
pub fn hasse_dot(rp: &RootPoset, highlight: &[usize]) -> String {
    let p = rp.poset();
    let mut out = format!(
        "digraph \"{}\" {{\n  rankdir=BT;\n  node [shape=box, fontsize=10];\n  edge [arrowhead=none];\n",
        rp.cartan_type()
    );
    for x in 0..rp.len() {
        let style = if highlight.contains(&x) {
            ", style=filled, fillcolor=\"#e34a33\""
        } else {
            ""
        };
        out.push_str(&format!(
            "  r{x} [label=\"{}\"{style}];\n",
            root_label(rp, x)
        ));
    }
    for level in 0..p.num_ranks() {
        let names: Vec<String> = p.level(level).iter().map(|x| format!("r{x}")).collect();
        out.push_str(&format!("  {{ rank=same; {}; }}\n", names.join("; ")));
    }
    for &(x, y) in p.covers() {
        out.push_str(&format!("  r{x} -> r{y};\n"));
    }
    out.push_str("}\n");
    out
}

/// Hasse diagram of `NC(W, c)` in absolute order.
pub fn nc_lattice_dot(nc: &NoncrossingLattice) -> String {
    let mut out = format!(
        "digraph \"NC {}\" {{\n  rankdir=BT;\n  node [shape=plaintext, fontsize=10];\n  edge [arrowhead=none];\n",
        nc.group().cartan_type()
    );
    for (i, w) in nc.elements().iter().enumerate() {
        out.push_str(&format!("  w{i} [label=\"{w}\"];\n"));
    }
    for (u, w) in nc.covers() {
        out.push_str(&format!("  w{u} -> w{w};\n"));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::CartanType;

    #[test]
    fn type_a_round_trip() {
        let rp = RootPoset::type_a(3).unwrap();
        let a = parse_antichain(&rp, "[3,4], [1,3]").unwrap();
        assert_eq!(format_antichain(&rp, &a), "[1,3],[3,4]");
        assert_eq!(parse_antichain(&rp, "{[1,3],[3,4]}").unwrap(), a);
        assert_eq!(
            antichain_from_json(&rp, &antichain_to_json(&rp, &a)).unwrap(),
            a
        );
        assert_eq!(antichain_to_json(&rp, &a), json!(["[1,3]", "[3,4]"]));
        for empty in ["", "{}", "∅", "  "] {
            assert!(parse_antichain(&rp, empty).unwrap().is_empty());
        }
        assert_eq!(format_antichain(&rp, &Antichain::empty(rp.len())), "{}");
    }

    #[test]
    fn coefficient_and_simple_forms() {
        let rp = RootPoset::new(CartanType::D(4)).unwrap();
        let a = parse_antichain(&rp, "a1,(0,1,1,0)").unwrap();
        let text = format_antichain(&rp, &a);
        assert_eq!(text, "(1,0,0,0),(0,1,1,0)");
        assert_eq!(parse_antichain(&rp, &text).unwrap(), a);
        let j = antichain_to_json(&rp, &a);
        assert_eq!(j[0], json!({"coeffs": [1, 0, 0, 0]}));
        assert_eq!(antichain_from_json(&rp, &j).unwrap(), a);
    }

    #[test]
    fn errors_name_the_token() {
        let rp = RootPoset::type_a(3).unwrap();
        let cases = [
            ("[1,3],[1,5]", "[1,5]"),
            ("[1,3],x7", "x7"),
            ("[1,3", "[1,3"),
        ];
        for (text, token) in cases {
            match parse_antichain(&rp, text).unwrap_err() {
                Error::Parse { token: t, .. } => assert_eq!(t, token, "{text}"),
                e => panic!("{text}: {e}"),
            }
        }
        // Comparable roots are rejected as a whole.
        assert!(parse_antichain(&rp, "[1,2],[1,3]").is_err());
        let d = RootPoset::type_d(4).unwrap();
        assert!(parse_antichain(&d, "[1,2]").is_err());
    }

    #[test]
    fn dot_output_is_deterministic() {
        let rp = RootPoset::new(CartanType::D(6)).unwrap();
        let l = rp.subset_l().unwrap().to_vec();
        let dot = hasse_dot(&rp, &l);
        assert_eq!(dot, hasse_dot(&rp, &l));
        assert_eq!(dot.matches("style=filled").count(), 6);
        let nc = NoncrossingLattice::new(CartanType::A(2)).unwrap();
        assert_eq!(nc_lattice_dot(&nc).matches(" -> ").count(), 6);
    }
}
