use std::process::{Command, Output};

use jacobi_designs::algebra::FiniteField;
use jacobi_designs::catalog;
use jacobi_designs::enumerators::{coefficient_order, cwe, split_complete_jacobi, SplitSpec};
use jacobi_designs::polyring::Polynomial;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_jacobi-designs")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn enumerate_cwe_text() {
    let c4 = catalog::get("c4").unwrap();
    assert_eq!(stdout(&["enumerate", "cwe", "c4"]).trim(), cwe(&c4).render());
}

#[test]
fn enumerate_scj_json_round_trips() {
    let c4 = catalog::get("c4").unwrap();
    let f = FiniteField::prime(3).unwrap();
    let s = stdout(&["--json", "enumerate", "scj", "c4", "--split", "1,2/3,4", "--refs", "1/3"]);
    let p = Polynomial::from_json(&f, coefficient_order(&f), &s).unwrap();
    let spec = SplitSpec::parse(4, "1,2/3,4", Some("1/3")).unwrap();
    assert_eq!(p, split_complete_jacobi(&c4, &spec).unwrap());
}

#[test]
fn design_g12() {
    let s = stdout(&["design", "g12", "--comp", "6,3,3", "--t", "3"]);
    assert!(s.contains("3-colored 3-design, 220 blocks"), "{s}");
}

#[test]
fn scan_h6() {
    let s = stdout(&["scan", "h6", "--tmax", "3"]);
    assert!(s.contains("delta_c = 2, s_c = 2"), "{s}");
}

#[test]
fn molien_g4_degree_six() {
    let s = stdout(&["invariants", "--group", "g4", "molien", "--max-degree", "8"]);
    assert!(s.contains("f[6] = 2u^6+2u^5v+3u^4v^2+4u^3v^3+3u^2v^4+2uv^5+2v^6"), "{s}");
}

#[test]
fn check_g12_invariant() {
    let dir = std::env::temp_dir().join(format!("jd-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("g12.json");
    std::fs::write(&path, stdout(&["--json", "enumerate", "cwe", "g12"])).unwrap();
    let s = stdout(&["invariants", "--group", "g3", "check", "--poly", path.to_str().unwrap()]);
    assert_eq!(s.trim(), "invariant: yes");
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn output_is_deterministic() {
    let args = ["lambda-table", "c4iv", "--comp", "2,2,0,0", "--t", "2", "--csv"];
    assert_eq!(stdout(&args), stdout(&args));
}

#[test]
fn parse_errors_exit_two() {
    for args in [
        &["design", "g12", "--comp", "6,3", "--t", "3"][..],
        &["enumerate", "scwe", "c4", "--split", "1,x"][..],
        &["invariants", "--group", "g5", "molien"][..],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(String::from_utf8_lossy(&out.stderr).contains("--"), "{args:?}");
    }
}

#[test]
fn verify_single_criterion() {
    let out = run(&["verify", "--only", "4"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("[PASS] criterion  4"));
    let out = run(&["verify", "--only", "8"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(run(&["verify", "--only", "8", "--accept-errata"]).status.success());
}
