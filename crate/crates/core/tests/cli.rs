use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> String {
    format!("{}/../../fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn bigrees(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bigrees"))
        .args(args)
        .output()
        .unwrap()
}

fn temp_problem(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

fn json(out: &Output) -> Value {
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn hilbert_of_example() {
    let v = json(&bigrees(&[
        "hilbert",
        "--input",
        &fixture("non_cm_example.txt"),
    ]));
    assert_eq!(v["schema"], 1);
    assert_eq!(v["results"]["numerator"], serde_json::json!([1, 1, -1]));
}

#[test]
fn fit_of_example_warns() {
    let v = json(&bigrees(&[
        "fit",
        "--input",
        &fixture("non_cm_example.txt"),
    ]));
    assert_eq!(v["results"]["e00"], -1);
    assert_eq!(
        v["warnings"][0],
        "non-CM: cohomological coefficient formulas not applicable"
    );
}

#[test]
fn verify_grid_4_on_plane() {
    let v = json(&bigrees(&[
        "verify",
        "--grid",
        "4",
        "--input",
        &fixture("plane_maximal.txt"),
    ]));
    let r = &v["results"];
    assert_eq!(r["all_residuals_zero"], true);
    assert_eq!(r["coefficients"]["agree_with_fit"], true);
    assert_eq!(r["e11_routes_agree"], true);
    assert_eq!(r["residuals"].as_array().unwrap().len(), 5);
}

#[test]
fn csv_table() {
    let out = bigrees(&[
        "table",
        "--grid",
        "2",
        "--csv",
        "--input",
        &fixture("plane_maximal.txt"),
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("r,s,B\n0,0,0\n0,1,1\n0,2,3\n1,0,1\n"));
    assert_eq!(text.lines().count(), 10);
}

#[test]
fn rr_and_cohomology_commands() {
    let v = json(&bigrees(&[
        "rr",
        "--a",
        "1",
        "--b",
        "0",
        "--input",
        &fixture("ratliff_rush.txt"),
    ]));
    assert_eq!(v["results"]["is_closed"], false);
    assert_eq!(v["results"]["routes_agree"], true);
    assert!(v["results"]["generators"]
        .as_array()
        .unwrap()
        .iter()
        .any(|g| g == "x^2*y^2"));
    let v = json(&bigrees(&[
        "cohomology",
        "--r",
        "1",
        "--s",
        "0",
        "--both-routes",
        "--input",
        &fixture("ratliff_rush.txt"),
    ]));
    assert_eq!(v["results"]["h1"]["value"], 1);
    assert_eq!(v["results"]["routes_agree"], true);
}

#[test]
fn cohomology_outside_cm_needs_force() {
    let args = [
        "cohomology",
        "--r",
        "0",
        "--s",
        "0",
        "--input",
        &fixture("non_cm_example.txt"),
    ];
    assert_eq!(bigrees(&args).status.code(), Some(2));
    let mut forced = args.to_vec();
    forced.push("--force");
    let v = json(&bigrees(&forced));
    assert_eq!(v["results"]["h2_formula"]["value"], -1);
    assert_eq!(v["results"]["h2_formula"]["formula_unproven"], true);
}

#[test]
fn report_round_trip_is_byte_identical() {
    let first = bigrees(&[
        "report",
        "--grid",
        "3",
        "--input",
        &fixture("non_cm_example.txt"),
    ]);
    assert!(first.status.success());
    let again = temp_problem(std::str::from_utf8(&first.stdout).unwrap());
    let second = bigrees(&["report", "--input", again.path().to_str().unwrap()]);
    assert!(second.status.success());
    assert_eq!(first.stdout, second.stdout);
    let twice = bigrees(&[
        "report",
        "--grid",
        "3",
        "--input",
        &fixture("non_cm_example.txt"),
    ]);
    assert_eq!(first.stdout, twice.stdout);
}

#[test]
fn exit_code_contract() {
    let cases: [(&str, &[&str], i32); 6] = [
        ("variables = x, y\ncohen_macaulay = true\nI = x\nJ = x, y\n", &["table"], 3),
        ("characteristic = 15\nvariables = x, y\nI = x, y\nJ = x, y\n", &["hilbert"], 2),
        ("variables = x, y\nI = x, w\nJ = x, y\n", &["hilbert"], 2),
        ("variables = x, y\nI = x +* y\nJ = x, y\n", &["hilbert"], 2),
        ("variables = x, y\nI = x, y\nJ = x, y\n", &["rr", "--a", "1", "--b", "0", "--kmax", "2"], 4),
        (
            "characteristic = 2\nvariables = x, y\ncohen_macaulay = true\nI = x, y\nJ = x, y\nseed = 3\nretries = 3\n",
            &["reduction"],
            5,
        ),
    ];
    for (text, args, code) in cases {
        let f = temp_problem(text);
        let mut full = args.to_vec();
        full.extend(["--input", f.path().to_str().unwrap()]);
        let out = bigrees(&full);
        assert_eq!(
            out.status.code(),
            Some(code),
            "{text:?} {args:?}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
    }
    assert_eq!(
        bigrees(&["hilbert", "--input", "/nonexistent/file"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(bigrees(&["nonsense"]).status.code(), Some(2));
}
