use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_altdimap"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn path(name: &str) -> String {
    fixture(name).to_string_lossy().into_owned()
}

#[test]
fn eti_of_g13_has_two_values() {
    let o = run(&["eti", &path("g13.adm"), "--all-orders", "--distinct"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(stdout(&o), "w*y*z\na*w^2 + b*w*y + c*w*z\n");
}

#[test]
fn ctutte_of_g23c_lists_witness_orderings() {
    let o = run(&["ctutte", &path("g23c.adm"), "--all-orders"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(stdout(&o), "x*y\t[e1,e2,e3]\n1\t[e2,e1,e3]\n");
}

#[test]
fn eti_at_a_fixed_ordering() {
    let o = run(&["--json", "eti", &path("g23c.adm"), "--order", "e1,e2,e3"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["value"], "w*x*y");
}

#[test]
fn numeric_parameters_are_substituted() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("p.json");
    std::fs::write(&p, r#"{"format": "params-v1", "w": 2, "y": "1/2", "z": 3}"#).unwrap();
    let p = p.to_str().unwrap();
    assert_eq!(
        stdout(&run(&[
            "eti",
            &path("g13.adm"),
            "--order",
            "e1,e2,e3",
            "--params",
            p
        ])),
        "3\n"
    );
    assert_eq!(
        stdout(&run(&[
            "eti",
            &path("g13.adm"),
            "--order",
            "e2,e1,e3",
            "--params",
            p
        ])),
        "4*a + b + 6*c\n"
    );
}

#[test]
fn triangle_matches_its_c_digon_dimap() {
    assert_eq!(
        stdout(&run(&["tutte", &path("triangle.pg")])),
        "x^2 + x + y\n"
    );
    let o = run(&["match", &path("triangle.pg"), &path("triangle_c.adm")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("routes agree true"));
}

#[test]
fn altc_reproduces_the_stored_dimap() {
    let o = run(&["altc", &path("triangle.pg")]);
    assert_eq!(
        stdout(&o),
        std::fs::read_to_string(fixture("triangle_c.adm")).unwrap()
    );
}

/// Rotations and edge ends with vertex names erased; trial renames vertices
/// but keeps edge names.
fn shape(file: &std::path::Path) -> Vec<Vec<String>> {
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(file).unwrap()).unwrap();
    let mut rots: Vec<Vec<String>> = v["vertices"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| {
            x["rot"]
                .as_array()
                .unwrap()
                .iter()
                .map(|s| s.as_str().unwrap().to_string())
                .collect()
        })
        .collect();
    rots.sort();
    rots
}

#[test]
fn trial_cubed_reproduces_each_file() {
    for name in [
        "g13.adm",
        "g23a.adm",
        "g23c.adm",
        "g24.adm",
        "g351.adm",
        "triangle_c.adm",
    ] {
        let dir = tempfile::tempdir().unwrap();
        let mut cur = fixture(name);
        for i in 0..3 {
            let o = run(&["trial", cur.to_str().unwrap()]);
            assert_eq!(o.status.code(), Some(0));
            cur = dir.path().join(format!("t{i}.adm"));
            std::fs::write(&cur, o.stdout).unwrap();
        }
        assert_eq!(shape(&cur), shape(&fixture(name)), "{name}");
    }
}

#[test]
fn fixtures_are_canonical() {
    for name in [
        "g13.adm",
        "g23a.adm",
        "g23c.adm",
        "g24.adm",
        "g351.adm",
        "triangle_c.adm",
    ] {
        let text = std::fs::read_to_string(fixture(name)).unwrap();
        assert_eq!(
            altdimap::formats::emit_adm(&altdimap::formats::parse_adm(&text).unwrap()),
            text,
            "{name}"
        );
    }
    let text = std::fs::read_to_string(fixture("triangle.pg")).unwrap();
    assert_eq!(
        altdimap::formats::emit_pg(&altdimap::formats::parse_pg(&text).unwrap()),
        text
    );
}

#[test]
fn output_is_deterministic() {
    for args in [
        ["eti", &path("g24.adm"), "--all-orders"],
        ["faces", &path("g351.adm"), "--json"],
        ["trial", &path("g351.adm"), "--square"],
    ] {
        assert_eq!(run(&args).stdout, run(&args).stdout);
    }
}

#[test]
fn classify_names_edge_types() {
    let o = run(&["classify", &path("g13.adm")]);
    assert_eq!(
        stdout(&o),
        "e1: proper w-loop\ne2: proper 1-semiloop\ne3: proper w2-loop\n"
    );
}

#[test]
fn minor_search_reports_a_trace() {
    let o = run(&["--json", "minor", &path("g24.adm"), "--target", "g13"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["minor"], true);
    assert_eq!(v["trace"].as_array().unwrap().len(), 1);
    let o = run(&["minor", &path("g13.adm"), "--target", "g24"]);
    assert_eq!(stdout(&o), "no minor\n");
}

#[test]
fn errors_map_to_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.adm");
    std::fs::write(
        &bad,
        r#"{"format":"adm-v1","vertices":[{"id":"v","rot":["+e","+e"]}],"edges":[{"id":"e","tail":"v","head":"v"}]}"#,
    )
    .unwrap();
    let o = run(&["validate", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("error:"));
    assert_eq!(
        run(&["reduce", &path("g13.adm"), "--edge", "zz", "--op", "w"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        run(&["validate", "/nonexistent.adm"]).status.code(),
        Some(1)
    );
    assert_eq!(run(&["tutte", &path("g13.adm")]).status.code(), Some(1));
}

#[test]
fn zeta_evaluation_agrees_with_all_orderings() {
    let o = run(&["ctutte", &path("g13.adm"), "--zeta", "plus"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1 - zeta\n");
}

#[test]
fn enumerate_writes_a_corpus() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("c.jsonl");
    let o = run(&[
        "--json",
        "enumerate",
        "--edges",
        "3",
        "--connected",
        "--out",
        out.to_str().unwrap(),
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert!(v["classes"].as_u64().unwrap() > 0);
    assert!(out.exists());
}

#[test]
fn verify_all_suites_pass() {
    let o = run(&["verify", "--suite", "all", "--max-edges", "4"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let out = stdout(&o);
    for suite in ["eti", "triality", "ctutte", "minors"] {
        assert!(out.contains(&format!("{suite}: ")), "{out}");
    }
    assert!(
        !out.contains(", 1 failed") && out.matches(" 0 failed").count() == 4,
        "{out}"
    );
}
