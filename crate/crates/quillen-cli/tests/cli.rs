//! End-to-end CLI checks: the documented invocations produce the expected
//! reports and exit codes.

use std::io::Write;
use std::process::Command;

fn run(args: &[&str]) -> (i32, serde_json::Value) {
    let out = Command::new(env!("CARGO_BIN_EXE_quillen"))
        .args(args)
        .output()
        .expect("binary runs");
    let code = out.status.code().unwrap_or(-1);
    let v: serde_json::Value =
        serde_json::from_slice(&out.stdout).unwrap_or(serde_json::Value::Null);
    (code, v)
}

fn write_file(name: &str, contents: &str) -> std::path::PathBuf {
    let mut path = std::env::temp_dir();
    path.push(format!("quillen-test-{name}-{}", std::process::id()));
    let mut f = std::fs::File::create(&path).unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    path
}

#[test]
fn cotangent_of_the_cusp() {
    let path = write_file(
        "cusp",
        "base Fp(5)\nring A = poly[x,y]\nring B = A / (x^2 - y^3)\n",
    );
    let (code, v) = run(&[
        "cotangent",
        "-i",
        path.to_str().unwrap(),
        "--ring",
        "B",
        "--deg",
        "2",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["fast_path"], "RegularSequence");
    assert_eq!(v["ranks"][0], 2);
    assert_eq!(v["ranks"][1], 1);
    assert_eq!(v["quasismooth"]["chi"], 1);
    // H0 is the Kähler module presented by the Jacobian (2 gens, 1 relation)
    assert_eq!(v["homology"][0]["presentation"]["generators"], 2);
    assert_eq!(v["homology"][0]["presentation"]["relations"], 1);
    std::fs::remove_file(path).ok();
}

#[test]
fn witt_w2_f4() {
    let (code, v) = run(&["witt", "--p", "2", "--e", "2", "--n", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["characteristic"], 4);
    assert_eq!(v["flat_rank"], 2);
    assert_eq!(v["additive_invariants"], serde_json::json!(["4", "4"]));
}

#[test]
fn dold_kan_roundtrip_contract() {
    let (code, v) = run(&["dold-kan", "--roundtrip", "--seed", "0", "--trials", "100"]);
    assert_eq!(code, 0);
    assert_eq!(v["roundtrip"], "100/100 exact");
}

#[test]
fn exit_codes() {
    // parse error: unknown ring
    let path = write_file("empty", "base Q\n");
    let (code, v) = run(&["cotangent", "-i", path.to_str().unwrap(), "--ring", "B"]);
    assert_eq!(code, 2);
    assert_eq!(v["error"], "ParseError");
    std::fs::remove_file(path).ok();
    // domain error: Groebner over Z with several variable relations
    let path = write_file(
        "zbad",
        "base Z\nring A = poly[x,y]\nring B = A / (x^2, x y)\n",
    );
    let (code, v) = run(&["cotangent", "-i", path.to_str().unwrap(), "--ring", "B"]);
    assert_eq!(code, 3, "math-domain errors exit 3: {v}");
    assert!(v["error"].is_string());
    std::fs::remove_file(path).ok();
}

#[test]
fn module_grammar_and_aq() {
    let path = write_file(
        "mod",
        "base Fp(5)\nring A = poly[x,y]\nring B = A / (x^2, x y)\nmodule M over B = gens 1 rels [[x],[y]]\n",
    );
    // D_2(B/k; M) with M = B/(x,y) = residue field: matches the oracle value 1
    let (code, v) = run(&[
        "aq",
        "-i",
        path.to_str().unwrap(),
        "--ring",
        "B",
        "--module",
        "M",
        "--deg",
        "2",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["report"]["dimension"], 1);
    std::fs::remove_file(path).ok();
}
