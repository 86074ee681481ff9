use std::process::{Command, Output};

fn qslift(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qslift"))
        .args(args)
        .output()
        .expect("qslift runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("valid json")
}

#[test]
fn gb_prints_basis_and_initial_ideal() {
    let o = qslift(&["gb", "x0^2, x0*x1+x1^2, x0*x2", "--vars", "4"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("x0*x1 + x1^2"), "{}", out);
    assert!(out.contains("initial: (x0^2, x0*x1, x0*x2, x1^3, x1^2*x2)"), "{}", out);
    let j = json(&qslift(&["--json", "gb", "x0^2, x0*x1+x1^2, x0*x2", "--vars", "4"]));
    assert_eq!(j["basis"].as_array().unwrap().len(), 5);
}

#[test]
fn hilbert_table_and_polynomial() {
    let j = json(&qslift(&["--json", "hilbert", "x0^2, x0*x1+x1^2, x0*x2", "--vars", "4", "--upto", "4"]));
    let hf: Vec<i64> = j["hf"].as_array().unwrap().iter().map(|v| v.as_i64().unwrap()).collect();
    assert_eq!(hf, [1, 4, 7, 9, 11]);
    assert_eq!(j["hp"], "2*t + 3");
}

#[test]
fn qs_check_reports_basis_or_witness() {
    let yes = json(&qslift(&["--json", "qs-check", "x0^2, x0*x1, x0*x2, x1^2*x2, x1^3"]));
    assert_eq!(yes["quasi_stable"], true);
    let no = json(&qslift(&["--json", "qs-check", "x0*x1"]));
    assert_eq!(no["quasi_stable"], false);
    assert_eq!(no["witness"]["generator"], "x0*x1");
}

#[test]
fn enumerate_the_double_point() {
    let j = json(&qslift(&["--json", "enumerate", "x0, x1^2", "--hp", "2t+2"]));
    let lifts = j["liftings"].as_array().unwrap();
    assert_eq!(lifts.len(), 2);
    assert_eq!(j["vars"].as_array().unwrap().len(), 4);
}

#[test]
fn enumerate_infers_the_ring_from_the_hilbert_polynomial() {
    let j = json(&qslift(&["--json", "enumerate", "x0^2, x0*x1+x1^2, x0*x2", "--hp", "t^2+4t+1"]));
    assert_eq!(j["vars"].as_array().unwrap().len(), 5);
    assert_eq!(j["liftings"].as_array().unwrap().len(), 5);
}

#[test]
fn marked_charts_for_the_curve() {
    let o = qslift(&["--json", "lifting-ms", "x0^2, x0*x1+x1^2, x0*x2", "--hp", "t^2+4t+1"]);
    assert!(o.status.success());
    let j = json(&o);
    assert_eq!(j["schema_version"], 1);
    let charts = j["charts"].as_array().unwrap();
    assert_eq!(charts.len(), 5);
    assert!(charts.iter().all(|c| c["m"].is_u64()));
}

#[test]
fn chart_files_feed_member() {
    let dir = std::env::temp_dir().join(format!("qslift-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("charts.json");
    let o = qslift(&["--json", "lifting-gs", "x0, x1^2", "--hp", "2t+2"]);
    assert!(o.status.success());
    std::fs::write(&path, &o.stdout).unwrap();
    let path = path.to_str().unwrap();
    // a lifting of the double point in the stratum of (x0, x1^3, x1^2*x2)
    let m = json(&qslift(&["--json", "member", "x0 + 2*x3, x1^3, x1^2*x2 - x1^2*x3", "--chart", path]));
    let results = m["results"].as_array().unwrap();
    assert_eq!(results.len(), 2);
    assert_eq!(results[0]["member"], true);
    assert_eq!(results[1]["member"], false);
    let point = results[0]["point"].as_array().unwrap();
    assert!(point.iter().any(|v| v == "2"));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn verify_reports_each_condition() {
    let j = json(&qslift(&["--json", "verify", "x0 + x3, x1^2 + x1*x3", "--against", "x0, x1^2"]));
    assert_eq!(j["lifting"], true);
    assert_eq!(j["xn_lifting"], true);
    // the ideal from the construction example is not saturated
    let k = json(&qslift(&["--json", "verify", "x0^2+x3^2, x0*x1, x0*x2, x1^2, x1*x2", "--against", "x0, x1"]));
    assert_eq!(k["lifting"], false);
    assert_eq!(k["xn_lifting"], false);
}

#[test]
fn self_check_passes_on_the_double_point() {
    let o = qslift(&["lifting-ms", "x0, x1^2", "--hp", "2t+2", "--self-check", "--seed", "3"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let err = String::from_utf8(o.stderr).unwrap();
    assert_eq!(err.matches("sampled liftings verified").count(), 2);
}

#[test]
fn exit_codes_distinguish_failures() {
    assert_eq!(qslift(&["gb", "x0 +* x1"]).status.code(), Some(2));
    assert_eq!(qslift(&["gb", "x0 + 1"]).status.code(), Some(2));
    assert_eq!(qslift(&["enumerate", "x0*x1", "--hp", "t^2+4t+1"]).status.code(), Some(3));
    assert_eq!(qslift(&["qs-check", "x0 + x1"]).status.code(), Some(3));
}

#[test]
fn sequential_and_parallel_runs_agree() {
    let a = qslift(&["--json", "--jobs", "1", "lifting-gs", "x0, x1^2", "--hp", "2t+2"]);
    let b = qslift(&["--json", "--jobs", "2", "lifting-gs", "x0, x1^2", "--hp", "2t+2"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn empty_input_is_the_zero_ideal() {
    let o = qslift(&["gb", "", "--vars", "2"]);
    assert!(o.status.success());
    assert!(String::from_utf8(o.stderr).unwrap().contains("warning"));
}
