use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name).display().to_string()
}

fn tan(args: &[&str]) -> (i32, Value, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_tan")).args(args).output().unwrap();
    let stdout = String::from_utf8(out.stdout).unwrap();
    let report = serde_json::from_str(&stdout).unwrap_or(Value::Null);
    (out.status.code().unwrap(), report, stdout)
}

#[test]
fn check_reports_pass_and_fail() {
    let (code, r, _) = tan(&["check", &fixture("a2simplex.json")]);
    assert_eq!((code, r["status"].as_str()), (0, Some("pass")));
    assert_eq!(r["schema_version"], 1);
    let (code, r, _) = tan(&["check", &fixture("nonassoc.json")]);
    assert_eq!(code, 1);
    assert_eq!(r["details"]["first_failing_arity"], 3);
    let (code, r, _) = tan(&["check", &fixture("m3.json"), "--functor", &fixture("shear.json")]);
    assert_eq!(code, 0, "{r}");
    let (code, _, _) = tan(&["check", &fixture("dg_pair.json"), "--functor", &fixture("scale.json"), "--field", "Fp:5"]);
    assert_eq!(code, 0);
}

#[test]
fn input_errors_exit_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"objects\": [").unwrap();
    let (code, r, _) = tan(&["check", bad.to_str().unwrap()]);
    assert_eq!((code, r["status"].as_str()), (2, Some("error")));
    assert!(r["details"]["message"].as_str().unwrap().contains("line"));
    let a2 = fixture("a2simplex.json");
    assert_eq!(tan(&["check", "/nonexistent.json"]).0, 2);
    assert_eq!(tan(&["nerve", &a2, "--beads", "2", "--from", "0", "--to", "7"]).0, 2);
    assert_eq!(tan(&["nerve", &a2, "--beads", "2,x", "--from", "0", "--to", "2"]).0, 2);
    assert_eq!(tan(&["nerve", &a2, "--beads", "2", "--from", "0", "--to", "2", "--field", "Fp:4"]).0, 2);
    assert_eq!(tan(&["nerve", &a2, "--beads", "2", "--from", "0", "--to", "2", "--sign-convention", "odd"]).0, 2);
    assert_eq!(tan(&["nerve", &a2, "--beads", "2", "--from", "0", "--to", "2", "--vertices", "0,2"]).0, 2);
    assert_eq!(tan(&["horn", &a2, "--n", "2", "--j", "2", "--from", "0", "--to", "2"]).0, 2);
    assert_eq!(tan(&["frobnicate"]).0, 2);
}

#[test]
fn nerve_dimensions() {
    let a2 = fixture("a2simplex.json");
    let dim = |args: &[&str]| {
        let mut full = vec!["nerve", a2.as_str()];
        full.extend_from_slice(args);
        let (code, r, _) = tan(&full);
        assert_eq!(code, 0, "{r}");
        r["details"]["dimension"].as_u64().unwrap()
    };
    assert_eq!(dim(&["--beads", "2", "--from", "0", "--to", "2", "--vertices", "0,1,2"]), 1);
    assert_eq!(dim(&["--beads", "1,1", "--from", "0", "--to", "2", "--vertices", "0,1,2"]), 1);
    assert_eq!(dim(&["--beads", "", "--from", "1", "--to", "1"]), 1);
    assert_eq!(dim(&["--beads", "", "--from", "0", "--to", "1"]), 0);
    assert_eq!(dim(&["--beads", "2", "--from", "0", "--to", "2"]), 3);
    assert_eq!(dim(&["--beads", "2", "--from", "0", "--to", "2", "--sign-convention", "plain"]), 3);
}

#[test]
fn horn_from_file_and_defect() {
    let a2 = fixture("a2simplex.json");
    let (code, r, _) = tan(&["horn", &a2, &fixture("horn_a2.json")]);
    assert_eq!(code, 0);
    let comps = r["details"]["filler"]["components"].as_array().unwrap();
    let face = comps.iter().find(|c| c["map"] == serde_json::json!([0, 2])).unwrap();
    assert_eq!(face["terms"], serde_json::json!([[["(0,2)"], "1"]]));
    assert!(comps.iter().all(|c| c["map"] != serde_json::json!([0, 1, 2]) || c["joints"] != serde_json::json!([0, 2])));

    let m3 = fixture("m3.json");
    let (code, r, _) = tan(&["horn", &m3, "--n", "3", "--j", "1", "--from", "0", "--to", "3", "--seed", "9"]);
    assert_eq!(code, 0, "{r}");
    let mut horn = r["details"]["horn"].clone();
    let terms = horn["decomps"]["2"]["components"][0]["terms"].as_array_mut().unwrap();
    terms[0][1] = Value::String("17".into());
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad_horn.json");
    std::fs::write(&path, horn.to_string()).unwrap();
    let (code, r, _) = tan(&["horn", &m3, path.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(!r["details"]["compatibility"]["violations"].as_array().unwrap().is_empty());
}

#[test]
fn reports_are_deterministic_and_can_go_to_a_file() {
    let m3 = fixture("m3.json");
    let args = ["nerve", m3.as_str(), "--beads", "1,2", "--from", "0", "--to", "3"];
    let (_, _, first) = tan(&args);
    let (_, _, second) = tan(&args);
    assert_eq!(first, second);
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.json");
    let mut with_out = args.to_vec();
    with_out.extend(["--out", out.to_str().unwrap()]);
    let (code, _, stdout) = tan(&with_out);
    assert_eq!((code, stdout.as_str()), (0, ""));
    assert_eq!(std::fs::read_to_string(out).unwrap(), first);
}

#[test]
fn selftest_passes_and_records_the_convention() {
    let (code, r, _) = tan(&["selftest"]);
    assert_eq!(code, 0, "{r}");
    assert_eq!(r["details"]["pinned_sign_convention"], "koszul");
}
