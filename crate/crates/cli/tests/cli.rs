use std::path::PathBuf;
use std::process::{Command, Output};

use hopfk::fixtures;
use serde_json::Value;
use sha2::{Digest, Sha256};

fn fixture(name: &str) -> String {
    let p = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name);
    p.to_string_lossy().into_owned()
}

fn hopfk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hopfk")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn json(args: &[&str]) -> Value {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    serde_json::from_slice(&hopfk(&all).stdout).expect("report is JSON")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("hopfk-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn cartan_of_the_symmetric_group_algebra() {
    let o = hopfk(&["cartan", &fixture("f3s3.alg")]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("C = [[2,1],[1,2]]"), "{out}");
    assert!(out.contains("SNF diag(1,3)"), "{out}");
}

#[test]
fn bound_holds_for_upper_triangular_times_c2() {
    let o = hopfk(&["verify-theorem", &fixture("ut2_c2.cross"), "--hopf", &fixture("f2c2.hopf")]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("PASS, m = 2, coker (ℤ/2)²"), "{out}");
    let r = json(&["verify-theorem", &fixture("ut2_c2.cross"), "--hopf", &fixture("f2c2.hopf")]);
    assert_eq!(r["results"]["m"], 2);
    assert_eq!(r["results"]["a_analysis"]["snf_diagonal"], serde_json::json!([2, 2]));
    assert_eq!(r["results"]["a_analysis"]["kernel_rank"], 0);
}

#[test]
fn sweedler_self_extension_is_rejected() {
    let o = hopfk(&["verify-theorem", &fixture("sweedler.hopf"), "--self"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("CartanNotInjective"));
    let r = json(&["verify-theorem", &fixture("sweedler.hopf"), "--self"]);
    assert_eq!(r["verdict"]["kind"], "CartanNotInjective");
}

#[test]
fn mismatched_hopf_algebra_is_an_input_error() {
    let o = hopfk(&["verify-theorem", &fixture("ut2_c2.cross"), "--hopf", &fixture("sweedler.hopf")]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn parse_errors_exit_2_with_a_position() {
    let bad = scratch("bad.alg");
    std::fs::write(&bad, "kind = \"algebra\"\ndim = 2\nbogus = 1\n").unwrap();
    let o = hopfk(&["cartan", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("bad.alg:3:1:"), "{err}");
    assert_eq!(hopfk(&["cartan", "/definitely/missing.alg"]).status.code(), Some(2));
    assert_eq!(hopfk(&["cartan", &fixture("f2c2_triv.mod")]).status.code(), Some(0));
    assert_eq!(hopfk(&["hopf-check", &fixture("ut2.alg")]).status.code(), Some(2));
}

#[test]
fn verdict_failures_exit_1() {
    for args in [
        vec!["galois-check".to_string(), fixture("ut2_trivial.coalg")],
        vec!["minimal-m".to_string(), fixture("sweedler.hopf")],
        vec!["find-pq".to_string(), fixture("sweedler.hopf")],
        vec!["k0-class".to_string(), fixture("f3s3.alg"), "--simple".to_string(), "0".to_string()],
    ] {
        let a: Vec<&str> = args.iter().map(String::as_str).collect();
        assert_eq!(hopfk(&a).status.code(), Some(1), "{args:?}");
    }
}

#[test]
fn mutated_hopf_files_name_the_failing_axiom() {
    for &(name, _, axiom) in fixtures::MUTATIONS {
        let r = json(&["hopf-check", &fixture(&format!("mutations/{name}"))]);
        assert_eq!(r["verdict"]["kind"], axiom, "{name}");
        assert_eq!(hopfk(&["hopf-check", &fixture(&format!("mutations/{name}"))]).status.code(), Some(1));
    }
}

#[test]
fn every_fixture_validates() {
    let names: Vec<String> = fixtures::FILES.iter().map(|(n, _)| fixture(n)).collect();
    let mut args = vec!["validate"];
    args.extend(names.iter().map(String::as_str));
    let o = hopfk(&args);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

fn results_hash(args: &[&str]) -> String {
    let r = json(args);
    let bytes = serde_json::to_vec(&r["results"]).unwrap();
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

#[test]
fn reports_are_deterministic() {
    let cases: Vec<Vec<String>> = vec![
        vec!["cartan".into(), fixture("f3s3.alg")],
        vec!["pims".into(), fixture("taft3_f4.hopf")],
        vec!["chop".into(), fixture("f3s3.alg")],
        vec!["find-pq".into(), fixture("f3s3.hopf")],
        vec!["resolve".into(), fixture("ut2_c2.cross")],
        vec!["verify-theorem".into(), fixture("ut2_c2.cross")],
        vec!["verify-prop-b".into(), fixture("ut2_c2.cross")],
    ];
    for case in cases {
        for seed in ["0", "17"] {
            let mut args: Vec<&str> = case.iter().map(String::as_str).collect();
            args.extend(["--seed", seed]);
            assert_eq!(results_hash(&args), results_hash(&args), "{case:?}");
        }
    }
    let r = json(&["cartan", &fixture("f3s3.alg")]);
    let again = json(&["cartan", &fixture("f3s3.alg")]);
    assert_eq!(r["inputs_digest"], again["inputs_digest"]);
    assert_eq!(r["inputs_digest"].as_str().unwrap().len(), 64);
}

#[test]
fn crossed_product_output_matches_the_matrix_fixture() {
    let out = scratch("m2.alg");
    let o = hopfk(&["crossed", &fixture("b2xb2_swap.cross"), "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let written = hopfk::format::SpecFile::parse(&std::fs::read_to_string(&out).unwrap()).unwrap();
    let shipped = fixtures::spec("m2.alg");
    assert_eq!(written, shipped);
    let c = json(&["cartan", out.to_str().unwrap()]);
    assert_eq!(c["results"]["cartan"], serde_json::json!([[1]]));
}

#[test]
fn twisted_module_round_trips_through_a_file() {
    let out = scratch("twist.mod");
    let t = json(&["twist", &fixture("ut2_c2.cross"), "--pim", "0", "--v-regular", "--out", out.to_str().unwrap()]);
    assert_eq!(t["verdict"]["status"], "PASS");
    let g = json(&["g0-class", out.to_str().unwrap()]);
    assert_eq!(g["results"]["coeffs"], t["results"]["g0"]);
}

#[test]
fn module_commands_agree_on_dimensions() {
    let ind = json(&["induce", &fixture("ut2_c2.cross"), "--regular"]);
    assert_eq!(ind["results"]["induced_dim"], 6);
    let res = json(&["restrict", &fixture("ut2_c2.cross"), "--regular"]);
    assert_eq!(res["results"]["dim"], 6);
    assert_eq!(res["results"]["projective"], true);
    let a = json(&["verify-prop-a", &fixture("f3s3.hopf")]);
    assert_eq!(a["verdict"]["status"], "PASS");
    let co = json(&["coinvariants", &fixture("ut2_c2.cross")]);
    assert_eq!(co["results"]["dim"], 3);
}

#[test]
fn selftest_passes() {
    let o = hopfk(&["selftest"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert_eq!(stdout(&o).matches("[PASS]").count(), 11);
}
