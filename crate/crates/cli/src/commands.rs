use rowvac::ast::{hat, phi_diagram_a, theta_d_partial, xi_and_phi_d, Theta};
use rowvac::dynamics::{all_orbits, orbit, ratio_string, toggle, Operator, OrbitReport};
use rowvac::export::{
    antichain_to_json, format_antichain, hasse_dot, nc_lattice_dot, parse_antichain, root_label,
};
use rowvac::roots::{catalan, narayana, TypeDFolding};
use rowvac::verify::{find_counterexample, run_with_jobs, Suite, VerificationReport};
use rowvac::weyl::DEFAULT_CAPACITY;
use rowvac::{Antichain, CartanType, Error, NoncrossingLattice, Result, RootPoset};
use serde_json::json;

use crate::output::{self, unsupported};
use crate::{Cli, Command, ExportKind, Format, Global};

type Step<'a> = dyn Fn(&Antichain) -> Result<Antichain> + 'a;

/// What a command prints, plus the message for a failing suite.
pub struct Outcome {
    pub stdout: String,
    pub failure: Option<String>,
}

impl From<String> for Outcome {
    fn from(stdout: String) -> Self {
        Outcome {
            stdout,
            failure: None,
        }
    }
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    let g = &cli.global;
    match &cli.command {
        Command::Verify { suite } => verify(g, suite),
        Command::Narayana => narayana_table(g).map(Into::into),
        Command::Catalan => catalan_number(g).map(Into::into),
        Command::Apply {
            operator,
            element,
            count,
            antichain,
        } => apply(g, operator, element.as_deref(), *count, antichain).map(Into::into),
        Command::Orbit {
            operator,
            antichain,
        } => orbits(g, operator, antichain.as_deref()).map(Into::into),
        Command::Theta { antichain } => theta(g, antichain).map(Into::into),
        Command::Hat { antichain } => hat_image(g, antichain).map(Into::into),
        Command::Export {
            what,
            highlight,
            antichain,
        } => export(g, *what, highlight.as_deref(), antichain).map(Into::into),
        Command::Counterexample => counterexample(g).map(Into::into),
    }
}

/// The type selected by `--type` and `--rank`, if any.
fn selected_type(g: &Global) -> Result<Option<CartanType>> {
    match (g.cartan.as_deref(), g.rank) {
        (None, None) => Ok(None),
        (None, Some(_)) => Err(Error::Argument("--rank needs --type".into())),
        (Some(label), None) => label.parse().map(Some),
        (Some(label), Some(rank)) => {
            let mut chars = label.trim().chars();
            match (chars.next(), chars.next()) {
                (Some(family), None) => {
                    CartanType::new(family.to_ascii_uppercase(), rank).map(Some)
                }
                _ => {
                    let t: CartanType = label.parse()?;
                    if t.rank() != rank {
                        return Err(Error::Argument(format!(
                            "--type {label} has rank {}, not {rank}",
                            t.rank()
                        )));
                    }
                    Ok(Some(t))
                }
            }
        }
    }
}

fn required_type(g: &Global) -> Result<CartanType> {
    selected_type(g)?.ok_or_else(|| Error::Argument("this command needs --type".into()))
}

fn root_poset(g: &Global) -> Result<RootPoset> {
    RootPoset::new(required_type(g)?)
}

fn verify(g: &Global, name: &str) -> Result<Outcome> {
    let suites = if name == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![name.parse::<Suite>()?]
    };
    let chosen = selected_type(g)?;
    let mut reports: Vec<VerificationReport> = Vec::new();
    for suite in suites {
        let types = match chosen {
            Some(t) if name == "all" && !suite.applies_to(t) => continue,
            Some(t) => vec![t],
            None => suite.default_types(g.large),
        };
        for t in types {
            let mut report = run_with_jobs(g.jobs, || suite.run(t, g.seed))??;
            if !g.timing {
                report.elapsed = Default::default();
            }
            reports.push(report);
        }
    }
    Ok(Outcome {
        stdout: output::reports(&reports, g.format, g.timing)?,
        failure: output::first_failure(&reports),
    })
}

fn narayana_table(g: &Global) -> Result<String> {
    let rp = root_poset(g)?;
    let nar = narayana(&rp)?;
    let total = catalan(&rp)?;
    let reversed: Vec<u64> = nar.iter().rev().copied().collect();
    if reversed != nar || nar.iter().map(|&x| x as u128).sum::<u128>() != total {
        return Err(Error::Invariant(format!(
            "Narayana numbers {nar:?} disagree with Catalan number {total}"
        )));
    }
    let t = rp.cartan_type().to_string();
    match g.format {
        Format::Text => {
            let mut out = format!("# {t}\nk\tNar\n");
            for (k, v) in nar.iter().enumerate() {
                out.push_str(&format!("{k}\t{v}\n"));
            }
            out.push_str(&format!("total\t{total}\n"));
            Ok(out)
        }
        Format::Json => {
            output::json(&json!({ "type": t, "narayana": nar, "catalan": total.to_string() }))
        }
        Format::Csv => output::csv(
            &["k", "narayana"],
            nar.iter()
                .enumerate()
                .map(|(k, v)| vec![k.to_string(), v.to_string()])
                .chain([vec!["total".into(), total.to_string()]]),
        ),
        Format::Dot => Err(unsupported("narayana", g.format)),
    }
}

fn catalan_number(g: &Global) -> Result<String> {
    let t = required_type(g)?;
    let rp = RootPoset::new(t)?;
    let total = catalan(&rp)?;
    match g.format {
        Format::Text => Ok(format!("{total}\n")),
        Format::Json => {
            output::json(&json!({ "type": t.to_string(), "catalan": total.to_string() }))
        }
        Format::Csv => output::csv(
            &["type", "catalan"],
            [vec![t.to_string(), total.to_string()]],
        ),
        Format::Dot => Err(unsupported("catalan", g.format)),
    }
}

fn single_root(rp: &RootPoset, text: &str) -> Result<usize> {
    let a = parse_antichain(rp, text)?;
    match a.to_vec().as_slice() {
        [x] => Ok(*x),
        _ => Err(Error::Parse {
            token: text.into(),
            message: "expected exactly one root".into(),
        }),
    }
}

fn apply(
    g: &Global,
    operator: &str,
    element: Option<&str>,
    count: usize,
    text: &str,
) -> Result<String> {
    let rp = root_poset(g)?;
    let p = rp.poset();
    let mut a = parse_antichain(&rp, text)?;
    let step: Box<Step> = if operator == "toggle" {
        let x = single_root(
            &rp,
            element.ok_or_else(|| Error::Argument("--op toggle needs --element".into()))?,
        )?;
        Box::new(move |a| toggle(p, x, a))
    } else {
        let op: Operator = operator.parse()?;
        Box::new(move |a| Ok(op.apply(p, a)))
    };
    let mut path = vec![a.clone()];
    for _ in 0..count {
        a = step(&a)?;
        path.push(a.clone());
    }
    match g.format {
        Format::Text => Ok(path
            .iter()
            .map(|a| format_antichain(&rp, a) + "\n")
            .collect()),
        Format::Json => {
            let steps: Vec<_> = path.iter().map(|a| antichain_to_json(&rp, a)).collect();
            output::json(
                &json!({ "type": rp.cartan_type().to_string(), "operator": operator, "trajectory": steps }),
            )
        }
        Format::Csv => output::csv(
            &["step", "size", "antichain"],
            path.iter()
                .enumerate()
                .map(|(i, a)| vec![i.to_string(), a.len().to_string(), format_antichain(&rp, a)]),
        ),
        Format::Dot => Err(unsupported("apply", g.format)),
    }
}

fn orbits(g: &Global, operator: &str, text: Option<&str>) -> Result<String> {
    let rp = root_poset(g)?;
    let p = rp.poset();
    let op: Operator = operator.parse()?;
    let list = match text {
        Some(text) => vec![orbit(p, &parse_antichain(&rp, text)?, op)?],
        None => all_orbits(p, op)?,
    };
    let members = |o: &OrbitReport| {
        o.orbit
            .iter()
            .map(|a| format_antichain(&rp, a))
            .collect::<Vec<_>>()
    };
    match g.format {
        Format::Text => {
            let mut out = String::new();
            for (i, o) in list.iter().enumerate() {
                out.push_str(&format!(
                    "orbit {i}: size {}, average {}\n",
                    o.len(),
                    ratio_string(&o.average_cardinality)
                ));
                for m in members(o) {
                    out.push_str(&format!("  {m}\n"));
                }
            }
            Ok(out)
        }
        Format::Json => {
            let items: Vec<_> = list
                .iter()
                .map(|o| {
                    json!({
                        "operator": o.operator_name,
                        "size": o.len(),
                        "average_cardinality": ratio_string(&o.average_cardinality),
                        "orbit": members(o),
                    })
                })
                .collect();
            output::json(&items)
        }
        Format::Csv => output::csv(
            &["orbit", "size", "average", "representative"],
            list.iter().enumerate().map(|(i, o)| {
                vec![
                    i.to_string(),
                    o.len().to_string(),
                    ratio_string(&o.average_cardinality),
                    members(o)[0].clone(),
                ]
            }),
        ),
        Format::Dot => Err(unsupported("orbit", g.format)),
    }
}

fn theta(g: &Global, text: &str) -> Result<String> {
    let rp = root_poset(g)?;
    let a = parse_antichain(&rp, text)?;
    let w = Theta::new(&rp)?.apply(&a)?;
    let t = rp.cartan_type();
    let diagram = match t.family() {
        'A' => Some(phi_diagram_a(&rp, &a)?.chord_list()),
        _ => None,
    };
    let partial = match t.family() {
        'D' if rp.delta_antichain(&a)? != a => {
            Some(theta_d_partial(&TypeDFolding::new(t.rank())?, &a)?)
        }
        _ => None,
    };
    match g.format {
        Format::Text => {
            let mut out = format!("{}\n", w.to_cycle_string_with_fixed_points());
            if let Some(d) = &diagram {
                out.push_str(&format!("diagram: {d}\n"));
            }
            Ok(out)
        }
        Format::Json => output::json(&json!({
            "type": t.to_string(),
            "antichain": format_antichain(&rp, &a),
            "theta": w.to_cycle_string_with_fixed_points(),
            "images": w.images(),
            "diagram": diagram,
            "partial": partial,
        })),
        Format::Csv | Format::Dot => Err(unsupported("theta", g.format)),
    }
}

fn hat_image(g: &Global, text: &str) -> Result<String> {
    let t = required_type(g)?;
    if t.family() != 'D' {
        return Err(Error::Argument(format!(
            "the hat construction needs type D, not {t}"
        )));
    }
    let fold = TypeDFolding::new(t.rank())?;
    let a = parse_antichain(&fold.d, text)?;
    let image = hat(&fold, &a)?;
    let ap = &fold.unfold.a;
    let unfolded: Vec<String> = image.unfolded.iter().map(|&x| root_label(ap, x)).collect();
    let q: Vec<String> = image
        .q_intersection
        .iter()
        .map(|(i, j)| format!("[{i},{j}]"))
        .collect();
    let result = format_antichain(ap, &image.result);
    match g.format {
        Format::Text => Ok(format!(
            "unfolded: {}\nmiddle: {}\nhat: {result}\n",
            unfolded.join(","),
            q.join(",")
        )),
        Format::Json => output::json(&json!({
            "type": t.to_string(),
            "unfolded_type": ap.cartan_type().to_string(),
            "unfolded": unfolded,
            "middle": q,
            "hat": antichain_to_json(ap, &image.result),
        })),
        Format::Csv | Format::Dot => Err(unsupported("hat", g.format)),
    }
}

fn export(g: &Global, what: ExportKind, highlight: Option<&str>, text: &str) -> Result<String> {
    if !matches!(g.format, Format::Text | Format::Dot) {
        return Err(unsupported("export", g.format));
    }
    let t = required_type(g)?;
    let rp = RootPoset::new(t)?;
    match what {
        ExportKind::Hasse => {
            let marked = match highlight {
                None => Vec::new(),
                Some(subset @ ("L" | "S")) => {
                    let found = if subset == "L" {
                        rp.subset_l()
                    } else {
                        rp.subset_s()
                    };
                    found
                        .ok_or_else(|| Error::Argument(format!("{t} has no {subset} subset")))?
                        .to_vec()
                }
                Some(text) => parse_antichain(&rp, text)?.to_vec(),
            };
            Ok(hasse_dot(&rp, &marked))
        }
        ExportKind::NcLattice => Ok(nc_lattice_dot(&NoncrossingLattice::with_capacity(
            t,
            DEFAULT_CAPACITY,
        )?)),
        ExportKind::MatchingDiagram => {
            let a = parse_antichain(&rp, text)?;
            let diagram = match t.family() {
                'A' => phi_diagram_a(&rp, &a)?,
                'D' => xi_and_phi_d(&TypeDFolding::new(t.rank())?, &a)?,
                _ => {
                    return Err(Error::Argument(format!(
                        "matching diagrams exist for types A and D, not {t}"
                    )))
                }
            };
            Ok(diagram.to_dot(&t.to_string()))
        }
    }
}

fn counterexample(g: &Global) -> Result<String> {
    let types = match selected_type(g)? {
        Some(t) => vec![t],
        None if g.large => vec![
            CartanType::F4,
            CartanType::E(6),
            CartanType::E(7),
            CartanType::E(8),
        ],
        None => vec![CartanType::F4, CartanType::E(6)],
    };
    let mut rows = Vec::new();
    for t in types {
        let rp = RootPoset::new(t)?;
        let found = run_with_jobs(g.jobs, || find_counterexample(t))??;
        let row = found.map(|a| {
            let b = rowvac::dynamics::rowvacuation(rp.poset(), &a);
            (
                format_antichain(&rp, &a),
                format_antichain(&rp, &b),
                a.len(),
                b.len(),
            )
        });
        rows.push((t, rp.rank(), row));
    }
    match g.format {
        Format::Text => Ok(rows
            .iter()
            .map(|(t, r, row)| match row {
                Some((a, b, x, y)) => format!("{t}: {a} -> {b} ({x} + {y} != {r})\n"),
                None => format!("{t}: none\n"),
            })
            .collect()),
        Format::Json => {
            let items: Vec<_> = rows
                .iter()
                .map(|(t, r, row)| {
                    json!({
                        "type": t.to_string(),
                        "rank": r,
                        "witness": row.as_ref().map(|w| w.0.clone()),
                        "rowvacuation": row.as_ref().map(|w| w.1.clone()),
                    })
                })
                .collect();
            output::json(&items)
        }
        Format::Csv => output::csv(
            &["type", "witness", "rowvacuation"],
            rows.iter().map(|(t, _, row)| {
                let (a, b) = row
                    .as_ref()
                    .map(|w| (w.0.clone(), w.1.clone()))
                    .unwrap_or_default();
                vec![t.to_string(), a, b]
            }),
        ),
        Format::Dot => Err(unsupported("counterexample", g.format)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn global(cartan: Option<&str>, rank: Option<usize>) -> Global {
        Global {
            cartan: cartan.map(Into::into),
            rank,
            format: Format::Text,
            jobs: 1,
            seed: 0,
            large: false,
            timing: false,
        }
    }

    #[test]
    fn type_selection() {
        assert_eq!(
            selected_type(&global(Some("D"), Some(6))).unwrap(),
            Some(CartanType::D(6))
        );
        assert_eq!(
            selected_type(&global(Some("D6"), None)).unwrap(),
            Some(CartanType::D(6))
        );
        assert_eq!(
            selected_type(&global(Some("F4"), Some(4))).unwrap(),
            Some(CartanType::F4)
        );
        assert!(selected_type(&global(Some("F4"), Some(5))).is_err());
        assert!(selected_type(&global(None, Some(3))).is_err());
        assert_eq!(selected_type(&global(None, None)).unwrap(), None);
    }
}
