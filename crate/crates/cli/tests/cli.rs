use std::process::{Command, Output};

use serde_json::Value;

fn kline(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kline")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn all_methods_agree_on_spin11() {
    let o = kline(&["vgroup", "--family", "spin", "--n", "5", "--m", "27", "--method", "all", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["verdict"], "AGREE");
    let records = v["records"].as_array().unwrap();
    assert_eq!(records.len(), 4);
    for r in records {
        assert_eq!(r["two_exponents"], serde_json::json!([5, 4]));
        assert_eq!(r["invariant_factors"], serde_json::json!(["16", "32"]));
    }
}

#[test]
fn symplectic_group_is_cyclic() {
    let o = kline(&["vgroup", "--family", "sp", "--n", "5", "--m", "27", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["two_exponents"], serde_json::json!([8]));
    assert_eq!(v["method"], "oracle");
}

#[test]
fn even_m_text_output() {
    let o = kline(&["vgroup", "--family", "spin", "--n", "3", "--m", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "spin n=3 m=4 variant=v method=oracle: Z/2^1 + Z/2^1\n");
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["vgroup", "--family", "spin", "--n", "2", "--m", "27", "--method", "closed"][..],
        &["vgroup", "--family", "sp", "--n", "5", "--m", "27", "--method", "algorithm"],
        &["vgroup", "--family", "spin", "--n", "1", "--m", "3"],
        &["vgroup", "--family", "lie", "--n", "3", "--m", "3"],
        &["table", "--n", "7", "--m-start", "51", "--m-end", "61", "--check"],
        &["table", "--n", "5", "--m-start", "61", "--m-end", "51"],
    ] {
        assert_eq!(kline(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn json_output_is_deterministic_and_sorted() {
    let args = ["vgroup", "--family", "spin", "--n", "6", "--m", "39", "--format", "json"];
    let (a, b) = (stdout(&kline(&args)), stdout(&kline(&args)));
    assert_eq!(a, b);
    assert_eq!(
        a,
        "{\"family\":\"spin\",\"invariant_factors\":[\"32\",\"256\"],\"m\":39,\"method\":\"oracle\",\"n\":6,\"two_exponents\":[8,5],\"variant\":\"v\"}\n"
    );
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("kline-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("g.csv");
    let o = kline(&["vgroup", "--family", "spin", "--n", "4", "--m", "17", "--format", "csv", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("family,n,m,variant,method,two_exponents,invariant_factors"));
    assert!(text.contains("spin,4,17,v,oracle,4;3,8;16,,"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn tables_match_reference_formulas() {
    for (n, from, to) in [("6", "39", "167"), ("4", "17", "99"), ("5", "27", "101")] {
        let o = kline(&["table", "--n", n, "--m-start", from, "--m-end", to, "--check"]);
        assert_eq!(o.status.code(), Some(0), "n={n}: {}", String::from_utf8_lossy(&o.stderr));
        assert!(!stdout(&o).contains("MISMATCH"));
    }
}

#[test]
fn table_check_reports_mismatch() {
    // The n=5 residue formula for m = 7 mod 8 overshoots at m = 103.
    let o = kline(&["table", "--n", "5", "--m-start", "101", "--m-end", "105", "--check"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "m,esp,e1,e2,check\n101,8,6,3,match\n103,11,8,5,MISMATCH\n105,11,9,3,match\n");
}

#[test]
fn table_skips_even_m() {
    let o = kline(&["table", "--n", "5", "--m-start", "26", "--m-end", "28", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stderr).contains("skipping 2 even"));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v, serde_json::json!([{"n": 5, "m": 27, "esp": 8, "e1": 5, "e2": 4}]));
}

#[test]
fn verify_suites_pass() {
    for args in [
        &["verify", "--suite", "duality", "--seed", "7"][..],
        &["verify", "--suite", "identities"],
        &["verify", "--suite", "cross", "--max-n", "6", "--m-span", "32"],
    ] {
        let o = kline(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stdout(&o));
        assert!(stdout(&o).contains("PASS"));
        assert!(!stdout(&o).contains("FAIL"));
    }
}
