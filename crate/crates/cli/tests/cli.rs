use sasaki_cli::{analyze, AnalysisReport, LinkSpec};
use std::path::Path;
use std::process::{Command, Output};

fn sasaki(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sasaki"))
        .args(args)
        .output()
        .unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

const UNIT_TANGENT: &str =
    "name = \"unit tangent\"\ninner_weights = [1]\ninner_degree = 6\ntail = 5\n";

#[test]
fn unit_tangent_report() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "ut.toml", UNIT_TANGENT);
    let out = sasaki(&["analyze", "--input", &input, "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let report = AnalysisReport::from_json(std::str::from_utf8(&out.stdout).unwrap()).unwrap();
    assert_eq!(report.whp.value, "5");
    assert_eq!(report.verdict, "ObstructedStrict");
    assert!(report.obstructed);
    assert_eq!(report.errata.len(), 2);
}

#[test]
fn a_series_threefold_is_not_obstructed() {
    let spec =
        LinkSpec::parse("name = \"A2, n=3\"\nfamily = \"A\"\n[params]\nk = 3\nn = 3\n").unwrap();
    let report = analyze(&spec.resolve().unwrap()).unwrap();
    assert_eq!(report.verdict, "NotObstructedByThisTest");
    assert_eq!(report.cone_dimension, 2);
    assert!(report.to_text().contains("no obstruction found"));
    assert!(!report.to_text().contains("semistable"));
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad_rational = write(
        dir.path(),
        "r.toml",
        &format!("{UNIT_TANGENT}reeb = [\"1/0\", \"0\", \"0\"]\n"),
    );
    assert_eq!(
        sasaki(&["analyze", "--input", &bad_rational]).status.code(),
        Some(3)
    );
    let bad_toml = write(dir.path(), "t.toml", "name = \n");
    assert_eq!(
        sasaki(&["analyze", "--input", &bad_toml]).status.code(),
        Some(3)
    );
    let linear = write(
        dir.path(),
        "l.toml",
        "name = \"x\"\ninner_weights = [3]\ninner_degree = 3\ntail = 2\n",
    );
    let out = sasaki(&["analyze", "--input", &linear]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("linear factor"));
    let missing = dir.path().join("missing.toml");
    assert_eq!(
        sasaki(&["analyze", "--input", missing.to_str().unwrap()])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        sasaki(&["catalog", "--family", "F4"]).status.code(),
        Some(2)
    );
    assert_eq!(
        sasaki(&["catalog", "--family", "A", "--params", "k=x"])
            .status
            .code(),
        Some(3)
    );
}

#[test]
fn report_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let spec = format!("{UNIT_TANGENT}reeb = [\"1/2\", \"1/5\", \"-1/7\"]\n");
    let input = write(dir.path(), "ut.toml", &spec);
    let output = dir.path().join("out.json");
    let out = sasaki(&[
        "analyze",
        "--input",
        &input,
        "--json",
        "--output",
        output.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let bytes = std::fs::read_to_string(&output).unwrap();
    let report = AnalysisReport::from_json(&bytes).unwrap();
    assert_eq!(report.to_json(), bytes);
    assert!(report.extremal.requested);
    assert_ne!(report.extremal.chi, vec!["0", "0", "0"]);
}

#[test]
fn catalog_spec_reproduces_the_family_member() {
    let out = sasaki(&["catalog", "--family", "E7", "--params", "n=4"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let spec_text = text.split("\n\n").nth(1).unwrap();
    let explicit = analyze(&LinkSpec::parse(spec_text).unwrap().resolve().unwrap()).unwrap();
    let family = LinkSpec::parse("name = \"E7\"\nfamily = \"E7\"\n[params]\nn = 4\n").unwrap();
    let family = analyze(&family.resolve().unwrap()).unwrap();
    assert_eq!(explicit.a0, family.a0);
    assert_eq!(explicit.verdict, family.verdict);
}

#[test]
fn tables_and_orders() {
    let out = sasaki(&["tables", "--which", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 32);
    assert!(!text.contains("MISMATCH"));
    let out = sasaki(&["bp", "--max", "4"]);
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "|bP_8| = 28\n|bP_12| = 992\n|bP_16| = 8128\n"
    );
    assert!(sasaki(&["bp", "--max", "1"]).stdout.is_empty());
}
