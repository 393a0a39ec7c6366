//! Drives the installed binary end to end: output shapes, JSON modes,
//! and the stable exit-code contract (0 proven/success, 1 refuted or
//! failed check, 2 inconclusive, 64 usage).

use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_ktcores"))
}

fn fixture(name: &str) -> String {
    format!("{}/examples/cores/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_str(&stdout(out)).expect("valid JSON on stdout")
}

#[test]
fn sgp_info_reports_invariants() {
    let out = run(&["sgp", "info", "--gens", "4,11,13"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("conductor: 19"));
    assert!(text.contains("frobenius: 18"));
    assert!(text.contains("multiplicity: 4"));

    let out = run(&["sgp", "info", "--gens", "4,11,13", "--json"]);
    let doc = json(&out);
    assert_eq!(doc["conductor"], 19);
    assert_eq!(doc["minimal_generators"], serde_json::json!([4, 11, 13]));
    assert_eq!(doc["gaps"].as_array().unwrap().len(), 10);
}

#[test]
fn core_basis_reads_description_files() {
    let out = run(&["core", "basis", "--core", &fixture("cusp.toml")]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("semigroup ring: no"));
    assert!(text.contains("3: t^2 + t^3"));

    let out = run(&["core", "basis", "--core", &fixture("h_2_3_gf2.json"), "--json"]);
    let doc = json(&out);
    assert_eq!(doc["field"], "Fp:2");
    assert_eq!(doc["is_semigroup_ring"], true);
    assert_eq!(doc["keys"][1], 2);
}

#[test]
fn twogen_prints_the_presentation() {
    let out =
        run(&["ideal", "twogen", "--gens", "2,3", "--f", "1 - t", "--c", "10", "--ell", "10"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("I = (t^10 - t^11, 1 - t^10)"));
    assert!(text.contains("mu upper bound: 2"));
}

#[test]
fn point_ideal_over_a_prime_field() {
    let out =
        run(&["ideal", "point", "--gens", "2,3", "--alpha", "2", "--field", "Fp:5", "--json"]);
    let doc = json(&out);
    assert_eq!(doc["generators"], serde_json::json!(["4 + 4*t^2", "3 + 4*t^3"]));
    assert_eq!(doc["mu_upper_bound"], 2);
}

#[test]
fn monomial_and_closure_presentations() {
    let out = run(&["ideal", "monomial", "--gens", "4,11,13", "--q", "12"]);
    assert!(stdout(&out).contains("I = (t^12, t^13, t^15, t^22)"));

    let out = run(&["ideal", "closure", "--gens", "4,11,13", "--q", "12"]);
    assert!(stdout(&out).contains("I = (t^12 - t^13, t^13 - t^26, t^15 - t^28, t^22 - t^35)"));

    let out =
        run(&["ideal", "closure", "--gens", "4,11,13", "--q", "12", "--f", "1 + t^2", "--json"]);
    let doc = json(&out);
    assert_eq!(doc["mu_upper_bound"], 5);
    assert_eq!(doc["generators"][0], "t^19 + t^21");
}

#[test]
fn verify_proven_exits_zero() {
    let out = run(&[
        "verify",
        "equality",
        "--core",
        &fixture("h_4_11_13.toml"),
        "--phi",
        "t^12 - t^13",
        "--gens",
        "t^12 - t^13; t^13 - t^26; t^15 - t^28; t^22 - t^35",
        "--max-deg",
        "60",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("Proven"));
}

#[test]
fn verify_refuted_exits_one_and_names_a_witness() {
    let out = run(&[
        "verify",
        "equality",
        "--core",
        &fixture("h_4_11_13.toml"),
        "--phi",
        "t^12 - t^13",
        "--gens",
        "t^12; t^13 + t^14; t^15; t^22",
        "--max-deg",
        "60",
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let doc = json(&out);
    assert_eq!(doc["verdict"], "refuted");
    assert_eq!(doc["witness"], "t^12");
    assert_eq!(doc["kind"], "generator-not-multiple");
}

#[test]
fn verify_inconclusive_exits_two() {
    let out = run(&[
        "verify",
        "equality",
        "--core",
        &fixture("h_4_11_13.toml"),
        "--phi",
        "t^12 - t^13",
        "--gens",
        "t^12 - t^13",
        "--max-deg",
        "25",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout(&out).contains("Inconclusive"));
}

#[test]
fn spectra_check_passes_for_a_semigroup_ring() {
    let out = run(&[
        "spectra",
        "check",
        "--core",
        &fixture("h_2_3_gf2.json"),
        "--max-irr-deg",
        "3",
        "--max-deg",
        "24",
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_eq!(doc["passes"], true);
    assert_eq!(doc["points"].as_array().unwrap().len(), 5);
    assert_eq!(doc["collisions"].as_array().unwrap().len(), 0);
}

#[test]
fn reproduce_single_row_and_json() {
    let out = run(&["paper", "reproduce", "--only", "ex2.1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("1 of 1 rows passed"));

    let out = run(&["paper", "reproduce", "--only", "ex4.3", "--json"]);
    let doc = json(&out);
    assert_eq!(doc[0]["id"], "ex4.3");
    assert_eq!(doc[0]["passed"], true);
}

#[test]
fn usage_errors_exit_sixty_four() {
    let conflicting =
        run(&["ideal", "twogen", "--core", &fixture("cusp.toml"), "--gens", "2,3", "--f", "1 - t"]);
    assert_eq!(conflicting.status.code(), Some(64));

    let missing_source = run(&["ideal", "twogen", "--f", "1 - t"]);
    assert_eq!(missing_source.status.code(), Some(64));

    let bad_field = run(&["core", "basis", "--gens", "2,5", "--field", "Fp:4"]);
    assert_eq!(bad_field.status.code(), Some(64));

    let bad_gens = run(&["sgp", "info", "--gens", "4,x"]);
    assert_eq!(bad_gens.status.code(), Some(64));
    assert!(stderr(&bad_gens).contains("bad --gens entry"));

    let bad_poly = run(&["ideal", "twogen", "--gens", "2,5", "--f", "1 + q"]);
    assert_eq!(bad_poly.status.code(), Some(64));

    let unknown_row = run(&["paper", "reproduce", "--only", "ex9.9"]);
    assert_eq!(unknown_row.status.code(), Some(64));

    let missing_bound =
        run(&["spectra", "check", "--core", &fixture("h_2_3_gf2.json"), "--max-irr-deg", "2"]);
    assert_eq!(missing_bound.status.code(), Some(64));
    assert!(stderr(&missing_bound).contains("--max-deg"));
}

#[test]
fn help_exits_zero() {
    let out = run(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("ideal"));
}
