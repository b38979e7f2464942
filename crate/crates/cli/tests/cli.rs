use std::process::{Command, Output};

fn tilt(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tilt"))
        .args(args)
        .output()
        .expect("run tilt")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn bott_examples() {
    let o = tilt(&["bott", "A", "1", "--", "-1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "Singular");

    let o = tilt(&["bott", "A", "1", "--", "-2"]);
    assert!(stdout(&o).starts_with("H^1, dim 1"));

    let o = tilt(&["bott", "D", "4", "--", "0", "0", "0", "1"]);
    assert!(stdout(&o).starts_with("H^0, dim 8"));
}

#[test]
fn bott_json_and_warning() {
    let o = tilt(&[
        "bott",
        "A",
        "2",
        "--parabolic",
        "1",
        "--json",
        "--",
        "0",
        "-1",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stderr(&o).contains("not dominant"));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["result"]["kind"], "singular");
    assert_eq!(v["p_dominant"], false);
    assert_eq!(v["inputs"]["parabolic"], serde_json::json!([1]));
}

#[test]
fn bott_usage_errors() {
    assert_eq!(
        tilt(&["bott", "D", "2", "--", "0", "0"]).status.code(),
        Some(2)
    );
    assert_eq!(tilt(&["bott", "A", "2", "--", "1"]).status.code(), Some(2));
    assert_eq!(
        tilt(&["bott", "B", "2", "--", "1", "1"]).status.code(),
        Some(2)
    );
}

#[test]
fn verify_examples() {
    let o = tilt(&["verify", "sb", "4", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["summands"].as_array().unwrap().len(), 4);
    assert_eq!(v["verdict"]["verdict"], "tilting");
    assert_eq!(v["gldim_bound"], 3);

    let o = tilt(&["verify", "gsb", "4", "2", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["summands"].as_array().unwrap().len(), 6);
    assert_eq!(v["k0"]["k0_rank_split"], 6);

    let o = tilt(&["verify", "inv", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("rank D_n requires n ≥ 3"));
}

#[test]
fn verify_bad_params() {
    assert_eq!(tilt(&["verify", "gsb", "4", "0"]).status.code(), Some(2));
    assert_eq!(tilt(&["verify", "gsb", "4"]).status.code(), Some(2));
    assert_eq!(tilt(&["verify", "sb", "0"]).status.code(), Some(2));
    assert_eq!(
        tilt(&["verify", "sb", "3", "--jobs", "0"]).status.code(),
        Some(2)
    );
}

#[test]
fn json_is_identical_across_jobs() {
    for args in [["inv", "4"].as_slice(), ["gsb", "5", "2"].as_slice()] {
        let mut outs = Vec::new();
        for jobs in ["1", "2", "7"] {
            let mut a = vec!["verify"];
            a.extend_from_slice(args);
            a.extend_from_slice(&["--json", "--jobs", jobs]);
            let o = tilt(&a);
            assert_eq!(o.status.code(), Some(0));
            outs.push(o.stdout);
        }
        assert!(outs.windows(2).all(|w| w[0] == w[1]), "{args:?}");
    }
}

#[test]
fn endo_and_ktheory() {
    let o = tilt(&["ktheory", "inv", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("K_*(F) ⊕ K_*(A) ⊕ K_*(F) ⊕ K_*(A) ⊕ K_*(C₀(A,σ))"));
    let o = tilt(&["endo", "sb", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("gldim End(T) ≤ 2"));
}

#[test]
fn selftest_quick() {
    let o = tilt(&["selftest", "--quick"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let out = stdout(&o);
    assert_eq!(out.lines().filter(|l| l.starts_with("[PASS]")).count(), 10);
    assert!(out.contains("negative control"));
}
