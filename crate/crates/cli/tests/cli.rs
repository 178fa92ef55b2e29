use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name).display().to_string()
}

fn prufer(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_prufer")).args(args).output().expect("binary runs")
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is a JSON report")
}

fn claims(r: &Value) -> Vec<(String, String)> {
    r["results"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| (c["claim"].as_str().unwrap().to_string(), c["status"].as_str().unwrap().to_string()))
        .collect()
}

fn all_pass(r: &Value) {
    for (claim, status) in claims(r) {
        assert_eq!(status, "pass", "{claim}");
    }
}

fn kronecker_seed_args<'a>(cmd: &'a str, files: &'a [String; 5]) -> Vec<&'a str> {
    vec![
        cmd, "--algebra", &files[0], "--module", &files[1], "--module", &files[2], "--w", &files[3], "--v", &files[4],
    ]
}

fn kronecker_files() -> [String; 5] {
    [
        data("kronecker.alg"),
        data("kronecker_pb.mod"),
        data("kronecker_pa.mod"),
        data("kronecker_w.hom"),
        data("kronecker_v.hom"),
    ]
}

#[test]
fn builtin_scenarios_pass() {
    for name in ["kronecker", "three-kronecker", "loop-beta", "loop-square", "z"] {
        let out = prufer(&["example", name]);
        assert_eq!(out.status.code(), Some(0), "{name}: {}", String::from_utf8_lossy(&out.stderr));
        let r = report(&out);
        assert_eq!(r["scenario"], name);
        assert!(!claims(&r).is_empty());
        all_pass(&r);
        for c in r["results"].as_array().unwrap() {
            assert!(!c["operation"].as_str().unwrap().is_empty());
        }
    }
}

#[test]
fn three_kronecker_report_names_the_refutation() {
    let r = report(&prufer(&["example", "three-kronecker"]));
    let refuted = r["results"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["claim"].as_str().unwrap().contains("not isomorphic"))
        .expect("H[3] comparison");
    assert!(refuted["evidence"].as_str().unwrap().contains("annihilator dimensions 1 and 0"));
}

#[test]
fn d4_scenario_with_matrices() {
    let out = prufer(&["example", "d4", "--emit-matrices"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    all_pass(&r);
    let u2 = &r["matrices"]["U2 over Q"];
    assert_eq!(u2["dims"], serde_json::json!([3, 2, 2, 2]));
    assert!(u2["actions"]["beta"]["entries"][0][0].is_string());
    let cs = claims(&r);
    assert!(cs.iter().any(|(c, _)| c == "over GF(2) no injective U0 -> U1 has cokernel W"));
}

#[test]
fn ladder_from_files() {
    let files = kronecker_files();
    let mut args = kronecker_seed_args("ladder", &files);
    args.extend(["--depth", "3"]);
    let out = prufer(&args);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    all_pass(&r);
    assert!(r["inputs"]["hom w0"].as_str().unwrap().starts_with("hom w0 : Pb -> Pa"));
    let evidence: Vec<&str> = r["results"].as_array().unwrap().iter().map(|c| c["evidence"].as_str().unwrap()).collect();
    assert!(evidence.contains(&"dims [3, 3] = [3, 3]^1"));
}

#[test]
fn chessboard_and_cokernels_over_gf3() {
    let files = [data("d4.alg"), data("d4_u0.mod"), data("d4_u1.mod"), data("d4_w.hom"), data("d4_v.hom")];
    for cmd in ["chessboard", "degenerate-cokernels"] {
        let out = prufer(&kronecker_seed_args(cmd, &files));
        assert_eq!(out.status.code(), Some(0), "{cmd}");
        all_pass(&report(&out));
    }
    let r = report(&prufer(&kronecker_seed_args("degenerate-cokernels", &files)));
    assert!(claims(&r).iter().any(|(c, _)| c.contains("degeneration of coker(w0)")));
}

#[test]
fn degenerate_from_files() {
    let out = prufer(&[
        "degenerate",
        "--algebra",
        &data("kronecker.alg"),
        "--module",
        &data("kronecker_shift.mod"),
        "--module",
        &data("kronecker_pa.mod"),
        "--w",
        &data("kronecker_g.hom"),
        "--v",
        &data("kronecker_shift.hom"),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    all_pass(&r);
    assert!(claims(&r).iter().any(|(c, _)| c.contains("Y[n+1] ≅ Y[n] ⊕ X")));
}

#[test]
fn ext_and_decompose_from_files() {
    let out = prufer(&["ext", "--algebra", &data("two_step.alg"), "--module", &data("two_step_h.mod")]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    all_pass(&r);
    assert!(r["results"][0]["evidence"].as_str().unwrap().starts_with("dim Ext^1 = 1"));
    let out = prufer(&["decompose", "--algebra", &data("d4.alg"), "--module", &data("d4_u1.mod")]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn out_file_receives_the_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("z.json");
    let out = prufer(&["zladder", "--w", "2", "--v", "3", "--depth", "4", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let r: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert!(r["results"][0]["evidence"].as_str().unwrap().contains("H[4] = Z/16"));
}

#[test]
fn mathematical_failure_exits_one() {
    let out = prufer(&["zladder", "--w", "0", "--v", "3"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("failed: integer ladder is built"));
    assert_eq!(report(&out)["results"][0]["status"], "fail");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(prufer(&["example", "nope"]).status.code(), Some(2));
    assert_eq!(prufer(&["ladder", "--algebra", &data("kronecker.alg")]).status.code(), Some(2));
    assert_eq!(prufer(&["ladder", "--algebra", "/nonexistent"]).status.code(), Some(2));
    assert_eq!(prufer(&[]).status.code(), Some(2));
}

#[test]
fn parse_errors_name_the_line() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.mod");
    std::fs::write(&bad, "module Pb over kronecker\n\ndim b = 1\nmatrix gamma = []\n").unwrap();
    let out = prufer(&["decompose", "--algebra", &data("kronecker.alg"), "--module", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 4") && err.contains("gamma"), "{err}");
}

#[test]
fn non_commuting_hom_names_the_arrow() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.hom");
    std::fs::write(&bad, "hom e : Pa -> Pa\nblock a = [[1]]\n").unwrap();
    let files = kronecker_files();
    let out = prufer(&[
        "ladder", "--algebra", &files[0], "--module", &files[2], "--w", bad.to_str().unwrap(), "--v", bad.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("arrow `alpha`"), "{err}");
}

#[test]
fn length_one_relation_is_not_admissible() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.alg");
    std::fs::write(&bad, "algebra l over GF(5)\nvertex a\narrow x : a -> a\nrelation 1*x = 0\n").unwrap();
    let out = prufer(&["decompose", "--algebra", bad.to_str().unwrap(), "--module", &data("kronecker_pb.mod")]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not admissible"));
}

#[test]
fn check_runs_every_suite() {
    let out = prufer(&["check", "--seed", "3"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let r = report(&out);
    let names: Vec<String> = claims(&r).into_iter().map(|(c, _)| c).collect();
    for prefix in [
        "kronecker:",
        "three-kronecker:",
        "d4:",
        "loop-beta:",
        "loop-square:",
        "z:",
        "exact squares:",
        "modules:",
        "degenerations:",
        "self-extensions:",
    ] {
        assert!(names.iter().any(|n| n.starts_with(prefix)), "{prefix}");
    }
}
