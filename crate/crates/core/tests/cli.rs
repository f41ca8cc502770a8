use std::process::{Command, Output};

use serde_json::Value;

fn liecohom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_liecohom"))
        .args(args)
        .output()
        .unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = liecohom(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn analyze_su2() {
    let v = json(&["analyze", "su2", "--json"]);
    assert_eq!(v["killing_signature"], serde_json::json!([0, 3, 0]));
    assert_eq!(v["structure"]["kind"], "simple_real");
    assert_eq!(v["complex_structure"], "none");
    let v = json(&["analyze", "sl2C", "--json"]);
    assert_eq!(v["complex_structure"], "rational");
    assert_eq!(v["centroid_dim"], 2);
}

#[test]
fn cohomology_of_sl2c() {
    let v = json(&["cohomology", "sl2C", "--relative", "k", "--max-degree", "3", "--json"]);
    assert_eq!(v["h_dims"], serde_json::json!([1, 0, 0, 1]));
    assert_eq!(v["symmetric_pair"], true);
    let v = json(&["cohomology", "su21", "--relative", "m", "--max-degree", "3", "--json"]);
    assert_eq!(v["h_dims"][3], 0);
    assert_eq!(v["pair"]["p_dim"], 5);
}

#[test]
fn theorem_a_small_bounds() {
    let v = json(&["verify", "theorem-a", "--max-dim", "0", "--json"]);
    assert_eq!(v["rows"], serde_json::json!([]));
    assert_eq!(v["verdict"], true);
    let v = json(&["verify", "theorem-a", "--max-dim", "8", "--json"]);
    let rows = v["rows"].as_array().unwrap();
    let get = |n: &str| rows.iter().find(|r| r["name"] == n).unwrap().clone();
    assert_eq!(
        (
            get("sl2R")["has_complex_structure"].clone(),
            get("sl2R")["h3_dim"].clone()
        ),
        (false.into(), 0.into())
    );
    assert_eq!(
        (
            get("sl2C")["has_complex_structure"].clone(),
            get("sl2C")["h3_dim"].clone()
        ),
        (true.into(), 1.into())
    );
    assert_eq!(get("su2")["h3_dim"], 0);
    assert_eq!(get("su21")["h3_dim"], 0);
    assert!(rows
        .iter()
        .all(|r| r["consistent"] == true && r["dim"].as_u64().unwrap() <= 8));
}

#[test]
fn theorem_a_rows_follow_catalog_order() {
    let v = json(&["verify", "theorem-a", "--max-dim", "16", "--json"]);
    let names: Vec<&str> = v["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["name"].as_str().unwrap())
        .collect();
    let catalog = json(&["catalog", "list", "--max-dim", "16", "--json"]);
    let expected: Vec<&str> = catalog
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["name"].as_str().unwrap())
        .collect();
    assert_eq!(names, expected);
}

#[test]
fn omega_and_dynkin() {
    let v = json(&["omega", "sl2C", "--json"]);
    assert_eq!(v["invariant_dim"], 1);
    assert!(v["nonzero_coefficients"].as_u64().unwrap() > 0);
    let v = json(&["dynkin", "su3", "--weights", "2,0,-2", "--json"]);
    assert_eq!(v["index"], "4");
    let v = json(&["dynkin", "su4", "--source", "su3", "--json"]);
    assert_eq!(v["index"], "1");
    assert_eq!(liecohom(&["omega", "sl3R"]).status.code(), Some(2));
}

#[test]
fn simplex_defect() {
    let out = liecohom(&["simplex", "--model", "h3", "--order", "16", "--tuples", "5", "--defect"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let line = text.lines().find(|l| l.starts_with("defect")).unwrap();
    let defect: f64 = line.split_whitespace().last().unwrap().parse().unwrap();
    assert!(defect < 1e-6);
}

#[test]
fn export_round_trips_through_file() {
    let dir = std::env::temp_dir().join(format!("liecohom-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("su21.json");
    let out = liecohom(&["catalog", "export", "su21"]);
    std::fs::write(&path, &out.stdout).unwrap();
    let p = path.to_str().unwrap();
    let from_file = json(&["analyze", "--file", p, "--json"]);
    assert_eq!(from_file["killing_signature"], serde_json::json!([4, 4, 0]));
    let v = json(&[
        "cohomology",
        "--file",
        p,
        "--relative",
        "none",
        "--max-degree",
        "3",
        "--json",
    ]);
    assert_eq!(v["h_dims"], serde_json::json!([1, 0, 0, 1]));
    // relative cohomology needs a Cartan involution
    assert_eq!(
        liecohom(&["cohomology", "--file", p, "--relative", "k"]).status.code(),
        Some(2)
    );
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn errors_exit_nonzero() {
    let out = liecohom(&["analyze", "nosuch"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("nosuch"));
    let dir = std::env::temp_dir().join(format!("liecohom-bad-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.json");
    std::fs::write(&path, "{\"name\": \"x\",\n  \"dim\": ]").unwrap();
    let out = liecohom(&["analyze", "--file", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2 column"));
    std::fs::remove_dir_all(&dir).unwrap();
    assert_eq!(
        liecohom(&["catalog", "export", "sl4C", "--max-dim", "20"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn json_keys_are_sorted() {
    let out = liecohom(&["analyze", "su21", "--json"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let top: Vec<&str> = text
        .lines()
        .filter(|l| l.starts_with("  \"") && !l.starts_with("   "))
        .map(|l| l.trim().split('"').nth(1).unwrap())
        .collect();
    let mut sorted = top.clone();
    sorted.sort();
    assert_eq!(top, sorted);
}
