use std::path::PathBuf;

use braided_twist::cli;
use braided_twist::spec_file;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = cli::run(std::iter::once("braided-twist").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn spec(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../specs").join(name).to_string_lossy().into_owned()
}

#[test]
fn list_and_help_exit_zero() {
    let (code, out, _) = run(&["list"]);
    assert_eq!(code, 0);
    for name in ["laurent", "clambda", "suqn", "suq2", "double-torus"] {
        assert!(out.contains(&format!("catalog:{name}")), "{out}");
    }
    assert_eq!(run(&["--help"]).0, 0);
    assert_eq!(run(&["check", "--help"]).0, 0);
}

#[test]
fn usage_and_structural_errors_exit_two() {
    assert_eq!(run(&[]).0, 2);
    assert_eq!(run(&["frobnicate"]).0, 2);
    let (code, _, err) = run(&["check", "catalog:nope"]);
    assert_eq!(code, 2);
    assert!(err.contains("unknown catalog entry"), "{err}");
    let (code, _, err) = run(&["check", "catalog:laurent", "--suites", "hopf,bogus"]);
    assert_eq!(code, 2);
    assert!(err.contains("unknown suite 'bogus'"), "{err}");
    assert_eq!(run(&["check", "catalog:laurent", "--max-len", "0"]).0, 2);
    assert_eq!(run(&["show", "catalog:laurent", "--show", "nothing"]).0, 2);
    assert_eq!(run(&["check", "/no/such/file.json"]).0, 2);
    assert_eq!(run(&["check", "catalog:suqn", "--p", "1,1,1"]).0, 2);
}

#[test]
fn suq2_braided_suite_passes() {
    let (code, out, _) = run(&["check", "catalog:suq2", "--suites", "braided", "--max-len", "3"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("pass  yang-baxter"));
    assert!(out.ends_with("all checks passed\n"));
}

#[test]
fn suqn_three_passes_at_length_two() {
    let (code, out, _) = run(&["check", "catalog:suqn", "--n", "3", "--p", "1,0,-1", "--max-len", "2"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("rerun with --full"), "{out}");
}

#[test]
fn twist_shows_selected_sections() {
    let (code, out, _) = run(&["twist", "catalog:suq2", "--show", "relations"]);
    assert_eq!(code, 0);
    assert!(out.contains("α∗γ = q e^{4iφ} γ∗α"));
    assert!(!out.contains("coproduct"));
    let (_, out, _) = run(&["show", "catalog:double-torus", "--show", "relations"]);
    assert!(!out.contains("e1"), "{out}");
    let (_, out, _) = run(&["show", "catalog:double-torus", "--show", "relations", "--show-hidden"]);
    assert!(out.contains("e1"), "{out}");
}

#[test]
fn two_phase_variables() {
    let (code, out, _) = run(&["twist", "catalog:suq2", "--phase-var", "u,v", "--show", "braiding"]);
    assert_eq!(code, 0);
    assert!(out.contains("ψ(γ, γ) = e^{8iφ} e^{8iη}"), "{out}");
}

#[test]
fn json_reports_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    let args = |p: &PathBuf| {
        vec!["check".to_string(), "catalog:clambda".into(), "--json".into(), p.to_string_lossy().into_owned()]
    };
    let run_owned = |v: Vec<String>| run(&v.iter().map(String::as_str).collect::<Vec<_>>());
    assert_eq!(run_owned(args(&a)).0, 0);
    let mut seq = args(&b);
    seq.push("--sequential".into());
    assert_eq!(run_owned(seq).0, 0);
    braided_twist::exec::set_sequential(false);
    let (ja, jb) = (std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert_eq!(ja, jb);

    let doc: serde_json::Value = serde_json::from_slice(&ja).unwrap();
    assert_eq!(doc["passed"], true);
    let report = &doc["reports"][0];
    for key in ["suite", "algebra", "maxLen", "checks"] {
        assert!(report.get(key).is_some(), "missing {key}");
    }
    assert_eq!(report["checks"][0]["status"], "pass");
}

#[test]
fn failing_json_carries_witnesses() {
    let (code, out, _) = run(&["check", &spec("bad-coproduct.json"), "--suites", "hopf", "--json", "-"]);
    assert_eq!(code, 1);
    let start = out.find("\n{").unwrap();
    let doc: serde_json::Value = serde_json::from_str(&out[start..]).unwrap();
    assert_eq!(doc["passed"], false);
    let failed: Vec<_> =
        doc["reports"][0]["checks"].as_array().unwrap().iter().filter(|c| c["status"] == "fail").collect();
    assert!(!failed.is_empty());
    assert!(failed.iter().all(|c| c["witness"].is_string()));
}

#[test]
fn negative_control_exit_codes() {
    assert_eq!(run(&["check", &spec("bad-coproduct.json"), "--suites", "hopf"]).0, 1);
    assert_eq!(run(&["check", &spec("bad-orientation.json"), "--suites", "confluence"]).0, 1);
    let (code, _, err) = run(&["check", &spec("bad-character.json")]);
    assert_eq!(code, 2);
    assert!(err.contains("234:5"), "{err}");
}

#[test]
fn spec_files_in_the_repository() {
    assert_eq!(run(&["check", &spec("laurent.jsonc")]).0, 0);
    let text = std::fs::read_to_string(spec("suq2.json")).unwrap();
    let entry = spec_file::parse(&text).unwrap();
    assert_eq!(spec_file::write(&entry).unwrap(), text);
    let (code, out, _) = run(&["twist", &spec("suq2.json"), "--show", "relations"]);
    assert_eq!(code, 0);
    assert!(out.contains("γ∗α = q^-1 e^{-4iφ} α∗γ"), "{out}");
}
