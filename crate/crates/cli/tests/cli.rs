use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn coring(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coring"))
        .args(args)
        .env_remove("COLUMNS")
        .output()
        .expect("run coring")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn report(args: &[&str]) -> (i32, Value) {
    let mut full = args.to_vec();
    full.push("--json");
    let o = coring(&full);
    let v = serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", stdout(&o)));
    (code(&o), v)
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn builtin_algebras_check() {
    for name in ["kn:3", "mat:2", "upper:2"] {
        let o = coring(&["algebra", "check", name]);
        assert_eq!(code(&o), 0, "{name}: {}", stdout(&o));
        assert!(stdout(&o).contains("PASS"));
    }
    let o = coring(&["algebra", "check", "mat:2", "--field", "Fp:5"]);
    assert_eq!(code(&o), 0);
}

#[test]
fn input_errors_exit_with_two() {
    for args in [
        vec!["algebra", "check", "bogus:7"],
        vec!["algebra", "check", "/nonexistent/a.json"],
        vec!["comodule", "verify", "nonsense"],
        vec!["ybe", "build", "--recipe", "rmatrix", "--algebra", "kn:2"],
        vec!["ybe", "export"],
        vec!["algebra", "check", "kn:2", "--field", "Fp:4"],
    ] {
        let o = coring(&args);
        assert_eq!(code(&o), 2, "{args:?}: {}", stdout(&o));
    }
}

#[test]
fn corrupted_structure_constant_reports_an_associativity_triple() {
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("a.json");
    assert_eq!(code(&coring(&["algebra", "check", "kn:2", "--out", path_str(&good)])), 0);
    let mut file: Value = serde_json::from_str(&std::fs::read_to_string(&good).unwrap()).unwrap();
    // e_0 e_1 = e_0
    file["sc"][0][1][0] = Value::from("1");
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, file.to_string()).unwrap();

    let (c, v) = report(&["algebra", "check", path_str(&bad)]);
    assert_eq!(c, 1);
    assert_eq!(v["passed"], false);
    let failing: Vec<&Value> = v["checks"].as_array().unwrap().iter().filter(|c| c["passed"] == false).collect();
    let assoc = failing
        .iter()
        .find(|c| c["name"].as_str().unwrap().contains("assoc"))
        .expect("associativity failure");
    let idx = assoc["witness"]["indices"].as_array().unwrap();
    assert_eq!(idx.len(), 3);
    assert_ne!(assoc["witness"]["lhs"], assoc["witness"]["rhs"]);

    let text = stdout(&coring(&["algebra", "check", path_str(&bad)]));
    assert!(text.contains("FAIL") && text.contains("witness"), "{text}");
}

#[test]
fn comodule_verdicts() {
    assert_eq!(code(&coring(&["comodule", "verify", "regular", "--algebra", "mat:2"])), 0);
    assert_eq!(code(&coring(&["comodule", "verify", "free:2", "--algebra", "upper:2", "--yd"])), 0);
    assert_eq!(code(&coring(&["comodule", "verify", "rmatrix", "--algebra", "mat:2", "--yd"])), 0);

    let (c, v) = report(&["comodule", "verify", "zero", "--algebra", "kn:2"]);
    assert_eq!(c, 1);
    let failing: Vec<&str> =
        v["checks"].as_array().unwrap().iter().filter(|c| c["passed"] == false).map(|c| c["name"].as_str().unwrap()).collect();
    assert!(failing.iter().any(|n| n.contains("counit")), "{failing:?}");

    assert_eq!(code(&coring(&["comodule", "verify", "flipped", "--algebra", "mat:2"])), 1);
}

#[test]
fn descent_of_the_zero_coaction_fails() {
    assert_eq!(code(&coring(&["descent", "verify", "regular", "--algebra", "upper:2"])), 0);
    let o = coring(&["descent", "verify", "zero", "--algebra", "kn:2"]);
    assert_ne!(code(&o), 0);
}

#[test]
fn exported_files_roundtrip_with_stable_hashes() {
    let dir = tempfile::tempdir().unwrap();
    let hash = |args: &[&str], out: &Path| -> String {
        let mut full = args.to_vec();
        full.extend(["--out", path_str(out)]);
        let (c, v) = report(&full);
        assert_eq!(c, 0, "{v}");
        v["artifacts"][0]["sha256"].as_str().unwrap().to_string()
    };

    let c1 = dir.path().join("c1.json");
    let c2 = dir.path().join("c2.json");
    let h1 = hash(&["comodule", "verify", "free:2", "--algebra", "mat:2", "--yd"], &c1);
    // reloading the export and exporting again gives the same bytes
    let h2 = hash(&["comodule", "verify", path_str(&c1), "--yd"], &c2);
    assert_eq!(h1, h2);
    assert_eq!(std::fs::read(&c1).unwrap(), std::fs::read(&c2).unwrap());

    let d1 = dir.path().join("d1.json");
    let d2 = dir.path().join("d2.json");
    let h1 = hash(&["descent", "verify", "regular", "--algebra", "mat:2"], &d1);
    let h2 = hash(&["descent", "verify", path_str(&d1)], &d2);
    assert_eq!(h1, h2);

    let o1 = dir.path().join("o1.json");
    let o2 = dir.path().join("o2.json");
    let h1 = hash(&["ybe", "export", "--from", "rmatrix", "--algebra", "mat:2", "--format", "json"], &o1);
    let h2 = hash(&["ybe", "check", path_str(&o1)], &o2);
    assert_eq!(h1, h2);
    let again = dir.path().join("o3.json");
    assert_eq!(hash(&["ybe", "export", "--from", "rmatrix", "--algebra", "mat:2"], &again), h1);

    let file: Value = serde_json::from_str(&std::fs::read_to_string(&o1).unwrap()).unwrap();
    assert_eq!(file["dim"], 4);
    assert_eq!(file["qybe"], true);
    assert_eq!(file["cube"], true);
    assert_eq!(file["provenance"], "r-matrix");
}

#[test]
fn ybe_check_notices_a_false_flag() {
    let dir = tempfile::tempdir().unwrap();
    let op = dir.path().join("op.json");
    let o = coring(&["ybe", "export", "--from", "grouplike", "--algebra", "upper:2", "--out", path_str(&op)]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let mut file: Value = serde_json::from_str(&std::fs::read_to_string(&op).unwrap()).unwrap();
    file["cube"] = Value::Bool(false);
    std::fs::write(&op, file.to_string()).unwrap();
    assert_eq!(code(&coring(&["ybe", "check", path_str(&op), "--qybe"])), 0);
    assert_eq!(code(&coring(&["ybe", "check", path_str(&op), "--cube"])), 1);
    assert_eq!(code(&coring(&["ybe", "check", path_str(&op)])), 1);
}

#[test]
fn braid_laws_hold_for_builtin_pairs() {
    let (c, v) = report(&[
        "braid", "free:1", "regular", "--algebra", "upper:2", "--check", "hexagon", "--check", "naturality", "--check",
        "unit",
    ]);
    assert_eq!(c, 0, "{v}");
    assert!(v["checks"].as_array().unwrap().len() > 10);
    assert_eq!(code(&coring(&["tensor", "regular", "free:2", "--algebra", "mat:2"])), 0);
}

#[test]
fn suite_passes_and_the_mutation_is_caught() {
    let o = coring(&["suite"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let o = coring(&["suite", "--sequential", "--mutate", "negated-braiding"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("FAIL"));
}

#[test]
fn columns_controls_wrapping() {
    let run = |cols: &str| {
        let o = Command::new(env!("CARGO_BIN_EXE_coring"))
            .args(["comodule", "verify", "zero", "--algebra", "mat:2"])
            .env("COLUMNS", cols)
            .output()
            .unwrap();
        stdout(&o)
    };
    let narrow = run("40");
    let wide = run("200");
    assert!(narrow.lines().all(|l| l.chars().count() <= 40), "{narrow}");
    assert!(wide.lines().any(|l| l.chars().count() > 40));
    assert!(narrow.lines().count() > wide.lines().count());
}
