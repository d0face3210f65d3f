//! One PASS/FAIL line per acceptance criterion.
//!
//! Set `ROWVAC_LARGE=1` to include E7 and E8 in the rowmotion sweep.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rowvac::ast::{theta_a, Theta};
use rowvac::dynamics::rowvacuation;
use rowvac::export::format_antichain;
use rowvac::lalanne_kreweras::lalanne_kreweras;
use rowvac::verify::{
    build_matrix, find_counterexample, nc_matrix, Suite, VerificationReport, DEFAULT_EXTENSIONS,
};
use rowvac::{CartanType, Result, RootPoset};

type Criterion = (&'static str, fn() -> Result<Outcome>);

struct Outcome {
    ok: bool,
    detail: String,
}

fn suites(suite: Suite, types: &[CartanType]) -> Result<Vec<VerificationReport>> {
    types.iter().map(|&t| suite.run(t, 0)).collect()
}

/// Passes when every report is clean; the detail names the first failure.
fn all_pass(reports: &[VerificationReport]) -> Outcome {
    let checked: u64 = reports.iter().map(|r| r.checked_count).sum();
    match reports.iter().find(|r| !r.passed()) {
        None => Outcome {
            ok: true,
            detail: format!("{} types, {checked} antichains", reports.len()),
        },
        Some(r) => Outcome {
            ok: false,
            detail: format!("{}: {:?}", r.summary(), r.failures[0]),
        },
    }
}

fn within(outcome: Outcome, elapsed: Duration, budget: Duration) -> Outcome {
    let ok = outcome.ok && elapsed < budget;
    Outcome {
        ok,
        detail: format!(
            "{}, {:.2}s of {}s",
            outcome.detail,
            elapsed.as_secs_f64(),
            budget.as_secs()
        ),
    }
}

fn classical_bounds() -> Vec<CartanType> {
    build_matrix(false)
        .into_iter()
        .filter(|t| t.is_classical())
        .collect()
}

fn panyushev_identity() -> Result<Outcome> {
    let start = Instant::now();
    let reports = suites(Suite::Panyushev, &classical_bounds())?;
    Ok(within(
        all_pass(&reports),
        start.elapsed(),
        Duration::from_secs(60),
    ))
}

fn counterexamples() -> Result<Outcome> {
    let f4 = RootPoset::new(CartanType::F4)?;
    let e6 = RootPoset::new(CartanType::E(6))?;
    let sizes = (
        f4.len(),
        f4.poset().count_antichains(),
        e6.len(),
        e6.poset().count_antichains(),
    );
    let golden =
        f4.antichain([[0, 1, 2, 0], [1, 1, 1, 1]].map(|c| f4.index_of_coeffs(&c).unwrap()))?;
    let f4_witness = find_counterexample(CartanType::F4)?;
    let e6_witness = find_counterexample(CartanType::E(6))?;
    let g2_witness = find_counterexample(CartanType::G2)?;
    let violates = |rp: &RootPoset, a: &rowvac::Antichain| {
        a.len() + rowvacuation(rp.poset(), a).len() != rp.rank()
    };
    let ok = sizes == (24, 105, 36, 833)
        && f4_witness.as_ref() == Some(&golden)
        && violates(&f4, &golden)
        && e6_witness.as_ref().is_some_and(|a| violates(&e6, a))
        && g2_witness.is_none();
    let show = |rp: &RootPoset, w: &Option<rowvac::Antichain>| match w {
        Some(a) => format_antichain(rp, a),
        None => "none".into(),
    };
    let g2 = RootPoset::new(CartanType::G2)?;
    Ok(Outcome {
        ok,
        detail: format!(
            "sizes {sizes:?}, F4 {}, E6 {}, G2 {}",
            show(&f4, &f4_witness),
            show(&e6, &e6_witness),
            show(&g2, &g2_witness)
        ),
    })
}

fn rowmotion_theorem() -> Result<Outcome> {
    let large = std::env::var("ROWVAC_LARGE").is_ok_and(|v| v == "1");
    let start = Instant::now();
    let reports = suites(Suite::Rowmotion, &build_matrix(large))?;
    let budget = Duration::from_secs(if large { 600 } else { 120 });
    Ok(within(all_pass(&reports), start.elapsed(), budget))
}

fn theta_axioms() -> Result<Outcome> {
    Ok(all_pass(&suites(Suite::Ast, &nc_matrix())?))
}

fn explicit_type_a() -> Result<Outcome> {
    let mut agree = 0;
    let mut total = 0;
    for n in 1..=5 {
        let rp = RootPoset::type_a(n)?;
        let theta = Theta::new(&rp)?;
        for a in rp.poset().antichains() {
            total += 1;
            if theta_a(&rp, &a)? == theta.apply(&a)? {
                agree += 1;
            }
        }
    }
    let rp = RootPoset::type_a(9)?;
    let example = rp.antichain_of_intervals(&[(1, 3), (2, 6), (3, 7), (4, 8), (5, 9), (8, 10)])?;
    let image = theta_a(&rp, &example)?.to_cycle_string_with_fixed_points();
    Ok(Outcome {
        ok: agree == total && image == "(1,10)(2,4,8)(3,9,7)(5)(6)",
        detail: format!("{agree}/{total} agree, example maps to {image}"),
    })
}

fn interval_formula() -> Result<Outcome> {
    let reports = suites(
        Suite::LalanneKreweras,
        &(1..=7).map(CartanType::A).collect::<Vec<_>>(),
    )?;
    let rp = RootPoset::type_a(3)?;
    let a = rp.antichain_of_intervals(&[(1, 3)])?;
    let example = lalanne_kreweras(&rp, &a)? == rp.antichain_of_intervals(&[(1, 3), (3, 4)])?;
    let mut outcome = all_pass(&reports);
    outcome.ok &= example;
    outcome.detail.push_str(if example {
        ", [1,3] -> [1,3],[3,4]"
    } else {
        ", small instance differs"
    });
    Ok(outcome)
}

fn hat_lemmas() -> Result<Outcome> {
    let reports = suites(Suite::Hat, &[CartanType::D(5), CartanType::D(6)])?;
    let witnessed = reports
        .iter()
        .all(|r| r.counts.get("hat-rvac-needs-hypothesis") == Some(&1));
    let mut outcome = all_pass(&reports);
    outcome.ok &= witnessed;
    outcome.detail.push_str(", {α_n} witness checked");
    Ok(outcome)
}

fn structural() -> Result<Outcome> {
    let types = Suite::Structural.default_types(false);
    let reports = suites(Suite::Structural, &types)?;
    let extensions = reports
        .iter()
        .all(|r| r.counts["linear-extensions"] >= DEFAULT_EXTENSIONS as u64);
    let mut outcome = all_pass(&reports);
    outcome.ok &= extensions && DEFAULT_EXTENSIONS >= 5;
    Ok(outcome)
}

fn counting() -> Result<Outcome> {
    let reports = suites(Suite::Counting, &build_matrix(true))?;
    let nc_compared = reports
        .iter()
        .filter(|r| r.counts.contains_key("nc-ranks"))
        .count();
    let mut outcome = all_pass(&reports);
    outcome
        .detail
        .push_str(&format!(", NC ranks compared on {nc_compared} types"));
    Ok(outcome)
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("#A + #Rvac(A) = r on classical types", panyushev_identity),
        ("counterexamples in F4 and E6, none in G2", counterexamples),
        (
            "row^2h = id, row^h = -w0, orbit averages r/2",
            rowmotion_theorem,
        ),
        ("Θ axioms and Flip equivariance", theta_axioms),
        ("explicit type-A Θ equals the uniform Θ", explicit_type_a),
        (
            "interval formula equals toggle rowvacuation",
            interval_formula,
        ),
        ("hat lemmas on D5 and D6", hat_lemmas),
        (
            "structural properties on posets with at most 30 elements",
            structural,
        ),
        ("antichain and Narayana counts", counting),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let outcome = run().unwrap_or_else(|e| Outcome {
            ok: false,
            detail: format!("error: {e}"),
        });
        let status = if outcome.ok { "PASS" } else { "FAIL" };
        println!("criterion {}: {status} {name} ({})", i + 1, outcome.detail);
        failed += usize::from(!outcome.ok);
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
