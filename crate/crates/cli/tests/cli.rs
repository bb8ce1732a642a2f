use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use grpact::catalog;
use grpact::io::{write_crossed_module_string, write_graph_string, write_group_string};
use grpact::lattice::normal_subgroups;
use grpact::rgraph::ReflexiveGraph;
use grpact::xmod::normal_inclusion;
use serde_json::Value;

fn grpact(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_grpact")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut full = args.to_vec();
    full.push("--json");
    let out = grpact(&full);
    let v =
        serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)));
    (v, out.status.code().unwrap())
}

fn file(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn validate_reports_the_violated_invariant() {
    let dir = tempfile::tempdir().unwrap();
    let good = file(dir.path(), "s3.grp", &write_group_string(&catalog::symmetric3()));
    let (v, code) = json(&["validate", s(&good)]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["kind"], "group");

    let no_inverse = file(dir.path(), "bad.grp", "order 2\n0 1\n1 1\n");
    let (v, code) = json(&["validate", s(&no_inverse)]);
    assert_eq!(code, 1);
    assert_eq!(v["result"]["error"], "NoInverse");

    let relation = file(dir.path(), "bad.rg", "order 2\n0 1\n1 0\ns: 0 1\nt: 0 0\n");
    let (v, code) = json(&["validate", s(&relation)]);
    assert_eq!(code, 1);
    assert_eq!(v["result"]["error"], "RelationViolated");
    assert!(v["result"]["message"].as_str().unwrap().contains("t∘s = s"));

    let out = grpact(&["validate", s(&no_inverse)]);
    assert!(String::from_utf8_lossy(&out.stdout).contains("NoInverse"));
}

#[test]
fn generic_on_z3_has_order_six() {
    let dir = tempfile::tempdir().unwrap();
    let z3 = file(dir.path(), "z3.grp", &write_group_string(&catalog::cyclic(3)));
    let (v, code) = json(&["generic", s(&z3), "--verify", "--max-base-order", "6"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["total_order"], 6);
    assert_eq!(v["failures"].as_array().unwrap().len(), 0);
    assert!(v["cases_checked"].as_u64().unwrap() > 0);
    assert_eq!(v["wall_time_ms"], Value::Null);
}

#[test]
fn lattice_queries() {
    let dir = tempfile::tempdir().unwrap();
    let s3g = catalog::symmetric3();
    let s3 = file(dir.path(), "s3.grp", &write_group_string(&s3g));
    let (v, _) = json(&["commutator", s(&s3)]);
    assert_eq!(v["result"]["elements"], serde_json::json!([0, 3, 4]));

    let z2 = file(dir.path(), "z2.grp", &write_group_string(&catalog::cyclic(2)));
    let zero = file(dir.path(), "zero.hom", "0 0\n");
    let (v, code) = json(&["centralizer", s(&s3), "--hom", s(&zero), "--domain", s(&z2)]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["order"], 6);

    let (v, _) = json(&["normalizer", s(&s3), "--sub", "1"]);
    assert_eq!(v["result"]["order"], 2);
    let (v, code) = json(&["normalizer", s(&s3), "--sub", "9"]);
    assert_eq!(code, 1);
    assert_eq!(v["result"]["error"], "IndexOutOfRange");
}

#[test]
fn actor_examples() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let discrete = file(d, "dz3.rg", &write_graph_string(&ReflexiveGraph::discrete(&catalog::cyclic(3))));
    let (v, code) = json(&["actor", s(&discrete), "--verify", "--max-base-order", "6"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["base_order"], 2);

    let loop_z2 = file(d, "z2.rg", &write_graph_string(&ReflexiveGraph::one_object(&catalog::cyclic(2))));
    let (v, code) = json(&["actor", s(&loop_z2), "--verify", "--max-base-order", "4"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["base_order"], 1);

    let s3_loop = file(d, "s3.rg", &write_graph_string(&ReflexiveGraph::one_object(&catalog::symmetric3())));
    let (v, code) = json(&["actor", s(&s3_loop)]);
    assert_eq!(code, 1);
    assert_eq!(v["result"]["error"], "KernelNotGroupoid");

    let a3 = normal_subgroups(&catalog::symmetric3()).into_iter().find(|n| n.order() == 3).unwrap();
    let xm = file(d, "a3.xm", &write_crossed_module_string(&normal_inclusion(&a3).unwrap()));
    let (v, code) = json(&["actor", s(&xm)]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["kernel_order"], 18);
}

#[test]
fn laws_and_catalog_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let cat = dir.path().join("cat");
    let out = grpact(&["catalog", "export", s(&cat)]);
    assert!(out.status.success());
    assert_eq!(std::fs::read_dir(&cat).unwrap().count(), catalog::groups().len());

    let (v, code) = json(&["laws", "run", "--catalog", s(&cat), "--law", "jacobi"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"][0]["law"], "jacobi");
    assert_eq!(v["result"][0]["pass"], true);

    let (v, code) = json(&["laws", "run", "--law", "nonsense"]);
    assert_eq!(code, 1);
    assert_eq!(v["result"]["error"], "Parse");
}

#[test]
fn output_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let z2 = file(dir.path(), "z2.grp", &write_group_string(&catalog::cyclic(2)));
    let report = dir.path().join("report.json");
    let out = grpact(&["validate", s(&z2), "--json", "--output", s(&report)]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(v["command"], "validate");
}
