use std::process::{Command, Output};

use rowvac::verify::VerificationReport;

fn rowvac(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rowvac"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = rowvac(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn rvac_of_single_interval() {
    let out = stdout(&[
        "apply", "--type", "A", "--rank", "3", "--op", "rvac", "[1,3]",
    ]);
    assert_eq!(out, "[1,3]\n[1,3],[3,4]\n");
}

#[test]
fn rowmotion_orbit_of_empty_in_a2() {
    let out = stdout(&["apply", "-t", "A2", "--op", "row", "--count", "3", ""]);
    assert_eq!(out, "{}\n[1,2],[2,3]\n[1,3]\n{}\n");
}

#[test]
fn rvac_twice_is_identity() {
    let out = stdout(&[
        "apply",
        "-t",
        "B3",
        "--op",
        "rvac",
        "--count",
        "2",
        "(0,1,1),(1,1,0)",
    ]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 3);
    assert_eq!(lines[0], lines[2]);
}

#[test]
fn toggle_needs_an_element() {
    let out = stdout(&[
        "apply",
        "-t",
        "A2",
        "--op",
        "toggle",
        "--element",
        "[1,2]",
        "",
    ]);
    assert_eq!(out, "{}\n[1,2]\n");
    assert_eq!(
        rowvac(&["apply", "-t", "A2", "--op", "toggle", ""])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn narayana_table_and_json() {
    assert_eq!(
        stdout(&["narayana", "-t", "A2"]),
        "# A2\nk\tNar\n0\t1\n1\t3\n2\t1\ntotal\t5\n"
    );
    let v: serde_json::Value =
        serde_json::from_str(&stdout(&["narayana", "-t", "D4", "--format", "json"])).unwrap();
    let nar: Vec<u64> = v["narayana"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_u64().unwrap())
        .collect();
    let mut reversed = nar.clone();
    reversed.reverse();
    assert_eq!(nar, reversed);
    assert_eq!(
        nar.iter().sum::<u64>().to_string(),
        v["catalan"].as_str().unwrap()
    );
    assert_eq!(
        stdout(&["narayana", "-t", "C3", "--format", "csv"])
            .lines()
            .last(),
        Some("total,20")
    );
}

#[test]
fn catalan_of_e8() {
    assert_eq!(stdout(&["catalan", "-t", "E8"]), "25080\n");
}

#[test]
fn theta_of_the_a9_example() {
    let out = stdout(&["theta", "-t", "A9", "[1,3],[2,6],[3,7],[4,8],[5,9],[8,10]"]);
    assert_eq!(out.lines().next(), Some("(1,10)(2,4,8)(3,9,7)(5)(6)"));
}

#[test]
fn hat_of_the_d6_example() {
    let out = stdout(&[
        "hat",
        "-t",
        "D6",
        "(1,1,0,0,0,0),(0,1,1,1,1,0),(0,0,1,1,0,1),(0,0,0,1,1,1)",
    ]);
    assert!(
        out.contains("middle: [2,6],[3,6],[4,7],[5,8],[5,9]\n"),
        "{out}"
    );
    assert!(
        out.ends_with("hat: [1,3],[2,6],[3,7],[4,8],[5,9],[8,10]\n"),
        "{out}"
    );
}

#[test]
fn hasse_highlights_long_and_short_subsets() {
    let d6 = stdout(&["export", "hasse", "-t", "D6", "--highlight", "L"]);
    assert_eq!(d6.matches("style=filled").count(), 6);
    let c5 = stdout(&["export", "hasse", "-t", "C5", "--highlight", "S"]);
    assert_eq!(c5.matches("style=filled").count(), 5);
    assert_eq!(
        d6,
        stdout(&["export", "hasse", "-t", "D6", "--highlight", "L"])
    );
}

#[test]
fn matching_diagram_and_nc_lattice_export() {
    let dot = stdout(&["export", "matching-diagram", "-t", "A3", "[1,3]"]);
    assert!(dot.starts_with("graph \"A3\""));
    let nc = stdout(&["export", "nc-lattice", "-t", "A2"]);
    assert_eq!(nc.matches("label=").count(), 5);
}

#[test]
fn panyushev_fails_on_f4_with_witness() {
    let out = rowvac(&["verify", "panyushev", "-t", "F4"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(
        err.starts_with("panyushev failed on F4: cardinality at "),
        "{err}"
    );
    assert!(stdout(&["verify", "panyushev", "-t", "G2"]).starts_with("PASS"));
    assert!(stdout(&["verify", "panyushev", "-t", "D", "-r", "6"])
        .starts_with("PASS panyushev D6: 672 antichains, 0 failures"));
}

#[test]
fn counterexample_search() {
    let out = stdout(&["counterexample"]);
    assert_eq!(
        out.lines().next(),
        Some("F4: (0,1,2,0),(1,1,1,1) -> (1,1,2,1) (2 + 1 != 4)")
    );
    assert!(out.lines().nth(1).unwrap().starts_with("E6: "));
    assert_eq!(stdout(&["counterexample", "-t", "G2"]), "G2: none\n");
}

#[test]
fn json_reports_round_trip_and_ignore_jobs() {
    let args = ["verify", "rowmotion", "-t", "B3", "--format", "json"];
    let one = stdout(&[&args[..], &["--jobs", "1"]].concat());
    let many = stdout(&[&args[..], &["--jobs", "3"]].concat());
    assert_eq!(one, many);
    let reports: Vec<VerificationReport> = serde_json::from_str(&one).unwrap();
    assert_eq!(reports.len(), 1);
    assert_eq!(reports[0].checked_count, 20);
    assert!(reports[0].elapsed.is_zero());
    assert_eq!(serde_json::to_string_pretty(&reports).unwrap() + "\n", one);
}

#[test]
fn orbit_averages_are_exact() {
    let out = stdout(&["orbit", "-t", "A2"]);
    assert!(out.contains("orbit 0: size 3, average 1/1"));
    assert!(out.contains("orbit 1: size 2, average 1/1"));
}

#[test]
fn bad_input_reports_the_token() {
    let out = rowvac(&["apply", "-t", "A3", "[1,5]"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("`[1,5]`"));
    let out = rowvac(&["apply", "-t", "A3", "[1,2],[1,3]"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(
        rowvac(&["verify", "nonsense", "-t", "A3"]).status.code(),
        Some(2)
    );
    assert_eq!(rowvac(&["narayana"]).status.code(), Some(2));
}
