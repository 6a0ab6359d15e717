//! End-to-end checks of the command-line surface: subcommands, flags,
//! output formats, and the exit-code contract.

use hyperlie_core::catalog;
use hyperlie_core::dsl::{self, AlgebraSpec};
use std::path::PathBuf;
use std::process::Command;

struct TempFile {
    path: PathBuf,
}

impl TempFile {
    fn new(name: &str, contents: &str) -> TempFile {
        let path = std::env::temp_dir().join(format!("hyperlie-cli-{}-{name}", std::process::id()));
        std::fs::write(&path, contents).expect("temp files are writable");
        TempFile { path }
    }

    fn path(&self) -> &str {
        self.path.to_str().expect("temp paths are unicode")
    }
}

impl Drop for TempFile {
    fn drop(&mut self) {
        let _ = std::fs::remove_file(&self.path);
    }
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_hyperlie"))
        .args(args)
        .output()
        .expect("the binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

#[test]
fn analyze_accepts_catalog_names_and_flags() {
    let (code, stdout, _) = run(&["analyze", "n8"]);
    assert_eq!(code, 0, "{stdout}");
    assert!(stdout.contains("flat: yes"));
    assert!(stdout.contains("nilpotency step: 2"));

    let (code, stdout, _) = run(&["analyze", "ex_nonflat", "--permutation", "2", "--max-iter", "6"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("connection permutation: (2, 3, 1)"));
    assert!(stdout.contains("flat: no"));
}

#[test]
fn analyze_emits_machine_readable_json() {
    let (code, stdout, _) = run(&["analyze", "ex_nonflat", "--json"]);
    assert_eq!(code, 0);
    let doc: serde_json::Value = serde_json::from_str(&stdout).expect("stdout is one JSON document");
    assert_eq!(doc["name"], "ex_nonflat");
    assert_eq!(doc["valid"], true);
    assert_eq!(doc["analysis"]["holonomy"]["dim"], 5);
    assert_eq!(doc["analysis"]["j_steps"], serde_json::json!([3, 3, 3]));
}

#[test]
fn analyze_requires_complex_structures() {
    let file = TempFile::new("lie-only.dsl", "name bare\ndim 4\nde4 = e12\n");
    let (code, _, stderr) = run(&["analyze", file.path()]);
    assert_eq!(code, 1);
    assert!(stderr.contains("no complex structures"), "{stderr}");
}

#[test]
fn validate_covers_lie_only_files() {
    let file = TempFile::new("bare.dsl", "name bare\ndim 4\nde4 = e12\n");
    let (code, stdout, _) = run(&["validate", file.path()]);
    assert_eq!(code, 0);
    assert!(stdout.contains("validity: ok"));
}

#[test]
fn holonomy_reports_the_basis() {
    let (code, stdout, _) = run(&["holonomy", "ex_nonflat"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("holonomy dim: 5"));
    assert!(stdout.contains("basis element: R(e1, e2)"));

    let (code, stdout, _) = run(&["holonomy", "n8", "--json"]);
    assert_eq!(code, 0);
    let doc: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(doc["holonomy_dim"], 0);
}

#[test]
fn construct_mu_output_feeds_back_into_the_parser() {
    let mu = TempFile::new(
        "mu.json",
        r#"{ "fiber_dim": 4, "terms": [
            { "i": 1, "j": 5, "value": ["1", "0", "0", "0"] },
            { "i": 2, "j": 5, "value": ["0", "1", "0", "0"] },
            { "i": 3, "j": 5, "value": ["0", "0", "1", "0"] },
            { "i": 4, "j": 5, "value": ["0", "0", "0", "1"] }
        ] }"#,
    );
    let (code, stdout, _) = run(&["construct", "mu", "n8", mu.path()]);
    assert_eq!(code, 0);
    let spec = dsl::parse_dsl(&stdout).expect("construct emits parseable text");
    let built = spec.to_hypercomplex().unwrap();
    let expected = catalog::entry("ex_2_2_3").unwrap();
    assert_eq!(built.algebra, expected.algebra);
    for alpha in 1..=3 {
        assert_eq!(built.structure.j(alpha), expected.structure.j(alpha));
    }
}

#[test]
fn construct_rejects_non_integrable_data_with_exit_2() {
    let mu = TempFile::new(
        "bad-mu.json",
        r#"{ "fiber_dim": 4, "terms": [
            { "i": 5, "j": 6, "value": ["0", "1", "0", "0"] }
        ] }"#,
    );
    let (code, _, stderr) = run(&["construct", "mu", "n8", mu.path()]);
    assert_eq!(code, 2);
    assert!(stderr.contains("integrability"), "{stderr}");
}

#[test]
fn construct_semidirect_builds_the_catalog_product() {
    let mut matrix = vec![vec!["0".to_string(); 8]; 8];
    for f in 0..4 {
        matrix[4 + f][f] = "1".to_string();
    }
    let doc = serde_json::json!({
        "fiber_dim": 8,
        "generators": [ { "index": 1, "matrix": matrix } ]
    });
    let rho = TempFile::new("rho.json", &doc.to_string());
    let (code, stdout, _) = run(&["construct", "semidirect", "ex_nonflat", rho.path(), "--json"]);
    assert_eq!(code, 0);
    let spec = dsl::parse_json(&stdout).expect("construct emits the JSON schema");
    let built = spec.to_hypercomplex().unwrap();
    let expected = catalog::entry("ex_semidirect").unwrap();
    assert_eq!(built.algebra, expected.algebra);
    for alpha in 1..=3 {
        assert_eq!(built.structure.j(alpha), expected.structure.j(alpha));
    }
}

#[test]
fn catalog_list_and_show_round_trip() {
    let (code, stdout, _) = run(&["catalog", "list"]);
    assert_eq!(code, 0);
    let listed: Vec<&str> = stdout.lines().collect();
    assert_eq!(listed, catalog::names());

    let (code, stdout, _) = run(&["catalog", "list", "--json"]);
    assert_eq!(code, 0);
    let names: Vec<String> = serde_json::from_str(&stdout).unwrap();
    assert_eq!(names, catalog::names());

    for name in catalog::names() {
        let (code, stdout, _) = run(&["catalog", "show", &name]);
        assert_eq!(code, 0, "{name}");
        let spec = dsl::parse_dsl(&stdout).expect("catalog output parses");
        assert_eq!(
            spec,
            AlgebraSpec::from_hypercomplex(&catalog::entry(&name).unwrap())
        );
    }

    let (code, _, stderr) = run(&["catalog", "show", "nonexistent"]);
    assert_eq!(code, 1);
    assert!(stderr.contains("nonexistent"));
}

#[test]
fn json_files_are_accepted_as_input() {
    let spec = AlgebraSpec::from_hypercomplex(&catalog::entry("ex_nonflat").unwrap());
    let file = TempFile::new("algebra.json", &spec.to_json());
    let (code, stdout, _) = run(&["analyze", file.path()]);
    assert_eq!(code, 0);
    assert!(stdout.contains("holonomy dim: 5"));
}

#[test]
fn json_output_is_deterministic() {
    let (_, first, _) = run(&["analyze", "ex_2_3_3", "--json"]);
    let (_, second, _) = run(&["analyze", "ex_2_3_3", "--json"]);
    assert_eq!(first, second);
}
