use std::process::{Command, Output};

fn normgram(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_normgram")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn expand_normal_form() {
    let o = normgram(&["expand", "--w", "x", "--grammar", "x->y^2;y->y^2", "--n", "2"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "D^1: x*y^2 ; D^2: x^2\n");
}

#[test]
fn expand_at_d_round_trips_through_the_parser() {
    let o = normgram(&["expand", "--w", "x", "--grammar", "x->y;y->p*y", "--n", "4", "--at-d", "q"]);
    assert!(o.status.success());
    let got = normgram::parse(stdout(&o).trim()).unwrap();
    let want =
        normgram::poly("(x*y^3 + 4*p*x^2*y^2 + p^2*x^3*y)*q + (7*x^2*y^2 + 4*p*x^3*y)*q^2 + 6*x^3*y*q^3 + x^4*q^4");
    assert_eq!(got, want);
}

#[test]
fn expand_json() {
    let o = normgram(&["expand", "--w", "x", "--grammar", "eulerian", "--n", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["n"], 2);
    assert_eq!(v["coeffs"].as_array().unwrap().len(), 3);
}

#[test]
fn triangle_rows() {
    let o = normgram(&["triangle", "--family", "B", "--n", "2"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "(1,1,0)=1\n(2,1,0)=1, (2,1,1)=1, (2,2,0)=1\n");
}

#[test]
fn triangle_csv() {
    let o = normgram(&["triangle", "--family", "B", "--n", "2", "--format", "csv"]);
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("family,n,k,l,j,entry"));
    assert_eq!(lines.collect::<Vec<_>>(), ["B,1,1,0,0,1", "B,2,1,0,0,1", "B,2,1,1,0,1", "B,2,2,0,0,1"]);
}

#[test]
fn triangle_json_lines() {
    let o = normgram(&["triangle", "--family", "beta", "--n", "4", "--format", "json"]);
    let rows: Vec<serde_json::Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    let hit = rows.iter().find(|r| r["n"] == 4 && r["k"] == 1 && r["l"] == 1 && r["j"] == 1).unwrap();
    assert_eq!(hit["entry"], "8");
}

#[test]
fn enumerate_json_lines() {
    let o = normgram(&["enumerate", "--objects", "stirling-permutations", "--n", "4", "--stats", "asc,des,plat"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 105);
    for line in text.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        let stats = v["stats"].as_object().unwrap();
        assert_eq!(stats.len(), 3);
        let total: u64 = stats.values().map(|s| s.as_u64().unwrap()).sum();
        // asc + des + plat = 2n + 1
        assert_eq!(total, 9);
    }
}

#[test]
fn enumerate_tally() {
    let o = normgram(&["enumerate", "--objects", "binary-forests", "--n", "3", "--tally", "wx=x,wy=y,trees=d"]);
    let got = normgram::parse(stdout(&o).trim()).unwrap();
    assert_eq!(got, normgram::poly("(x*y^2 + x^2*y)*d + 3*x^2*y*d^2 + x^3*d^3"));
}

#[test]
fn verify_exit_codes() {
    let o = normgram(&["verify", "--check", "catalan_egf", "--profile", "quick"]);
    assert_eq!(o.status.code(), Some(0));
    let o = normgram(&["verify", "--check", "lah_numbers", "--n", "4", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v[0]["n_range"], serde_json::json!([1, 4]));
    assert_eq!(normgram(&["verify", "--check", "nope"]).status.code(), Some(2));
}

#[test]
fn verify_list_names_every_check() {
    let o = normgram(&["verify", "--list"]);
    assert_eq!(stdout(&o).lines().count(), normgram::verify::REGISTRY.len());
}

#[test]
fn series_report() {
    let o = normgram(&["series", "--identity", "catalan-egf", "--order", "10"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("t^3/n!: 3*x^5*z + 3*x^4*z^2 + x^3*z^3\n"));
    assert!(text.ends_with("match through order 10\n"));
    let o = normgram(&["series", "--identity", "catalan", "--order", "5"]);
    assert!(stdout(&o).ends_with("t^5: 42\n"));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["expand", "--bogus"][..],
        &["triangle", "--family", "Z", "--n", "2"],
        &["expand", "--w", "x", "--grammar", "x->", "--n", "2"],
        &["expand", "--w", "x", "--grammar", "eulerian", "--n", "2", "--format", "csv"],
        &["enumerate", "--objects", "permutations", "--n", "3", "--stats", "plat"],
        &["enumerate", "--objects", "permutations", "--n", "12"],
    ] {
        let o = normgram(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty());
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn output_is_deterministic() {
    let args = ["enumerate", "--objects", "list-partitions", "--n", "4"];
    assert_eq!(normgram(&args).stdout, normgram(&args).stdout);
    let args = ["triangle", "--family", "Ap", "--n", "6"];
    assert_eq!(normgram(&args).stdout, normgram(&args).stdout);
}
