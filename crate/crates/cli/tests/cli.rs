use std::fs;
use std::process::{Command, Output};

fn coxinv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coxinv")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn data_rows(o: &Output) -> usize {
    stdout(o).lines().skip(1).count()
}

#[test]
fn analyze_row_counts() {
    for (args, rows) in [
        (vec!["analyze", "--type", "H3"], 4),
        (vec!["analyze", "--type", "E7"], 10),
        (vec!["analyze", "--type", "A", "--rank", "1"], 2),
        (vec!["analyze", "--type", "I2", "--m", "8"], 4),
    ] {
        let o = coxinv(&args);
        assert_eq!(o.status.code(), Some(0), "{args:?}");
        assert_eq!(data_rows(&o), rows, "{args:?}");
    }
}

#[test]
fn csv_header_and_quoting() {
    let o = coxinv(&["analyze", "--type", "B", "--rank", "3"]);
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("type,degree,label,order_factored,Gminus,TildeGminus,Gplus,TildeGplus,gamma"));
    assert_eq!(lines.next(), Some("B3,0,\"0,3,0\",2^4 3,1,1,B3,B3,1"));
}

#[test]
fn verify_exit_codes() {
    let o = coxinv(&["verify", "--type", "F4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("F4: 6 rows compared: ok"));

    let o = coxinv(&["verify", "--type", "B", "--rank", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("B5: 12 rows compared: ok"));

    let o = coxinv(&["verify", "--type", "E6", "--format", "json"]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["schema_version"], 1);
    let d = &v["verifications"][0]["discrepancies"][0];
    assert_eq!(d["label"], "2");
    assert_eq!(d["column"], "TildeGplus");
}

#[test]
fn fixture_override() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("tables.txt");
    fs::write(&path, "H3|0|0|2^3 3 5|1|1|H3|H3|1\nH3|1|1|2^3|A1|A1|(A1)^2|(A1)^2|1\n").unwrap();
    let o = coxinv(&["verify", "--type", "H3", "--fixtures", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("row 2: computed class not in the table"));
    fs::write(&path, "H3|0|0|nonsense\n").unwrap();
    let o = coxinv(&["verify", "--type", "H3", "--fixtures", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn usage_errors_exit_three() {
    for args in [
        vec!["analyze", "--type", "E8"],
        vec!["analyze", "--type", "I2"],
        vec!["analyze", "--type", "B"],
        vec!["analyze", "--type", "Q7"],
        vec!["analyze", "--type", "E6", "--rank", "7"],
        vec!["analyze", "--bogus"],
        vec!["theorems", "--type", "H3", "--check", "nonexistent"],
    ] {
        assert_eq!(coxinv(&args).status.code(), Some(3), "{args:?}");
    }
}

#[test]
fn theorems_report() {
    let o = coxinv(&["theorems", "--type", "E6", "--check", "3.3"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["reports"][0]["passed"], 1);
    assert_eq!(v["reports"][0]["failed"], 0);

    let o = coxinv(&["theorems", "--type", "D", "--rank", "7", "--check", "gamma"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let gamma = v["reports"][0]["gamma"].as_array().unwrap();
    assert!(gamma.iter().any(|g| g[0] == "2,1,2" && g[1] == "2,2"));

    let o = coxinv(&["theorems", "--type", "H4"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn output_is_deterministic() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    for dir in [&a, &b] {
        for format in ["csv", "json"] {
            let o = coxinv(&["analyze", "--type", "D", "--rank", "6", "--format", format, "--out", dir.path().to_str().unwrap()]);
            assert_eq!(o.status.code(), Some(0));
        }
    }
    for name in ["D6.csv", "D6.json"] {
        let x = fs::read(a.path().join(name)).unwrap();
        let y = fs::read(b.path().join(name)).unwrap();
        assert!(!x.is_empty());
        assert_eq!(x, y, "{name}");
    }
}
