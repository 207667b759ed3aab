use std::process::Command;

use bezout_gw_cli::{parse_outputs, run, Output, Query, EXIT_INPUT, EXIT_OK};
use serde_json::Value;

fn query(expr: &str, outputs: &str) -> Query {
    Query {
        outputs: outputs.to_string(),
        ..Query::new(expr)
    }
}

fn json_of(q: Query) -> Value {
    let out = run(&Query { json: true, ..q });
    assert_eq!(out.code, EXIT_OK, "stderr: {}", out.stderr);
    serde_json::from_str(&out.stdout).expect("valid JSON")
}

#[test]
fn bez_and_unstable_json() {
    let v = json_of(query("x^2 - x", "bez,unstable"));
    assert_eq!(v["bez"], serde_json::json!([["-1", "1"], ["1", "0"]]));
    assert_eq!(v["unstable"]["d"], "-1");
    let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
    assert_eq!(keys, ["bez", "unstable"]);
}

#[test]
fn key_order_follows_request() {
    let v = json_of(query("x^2 - x", "unstable,s,bez"));
    let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
    assert_eq!(keys, ["unstable", "s", "bez"]);
}

#[test]
fn d_of_second_example() {
    let out = run(&query("(x^2-1)/2", "unstable"));
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.contains("d  -4"), "{}", out.stdout);
    assert_eq!(json_of(query("(x^2-1)/2", "unstable"))["unstable"]["d"], "-4");
}

#[test]
fn gaussian_extension_verifies() {
    let q = Query {
        field: "Q[t]/(t^2+1)".into(),
        ..query("x^2+1", "verify")
    };
    let out = run(&q);
    assert_eq!(out.code, EXIT_OK, "{}{}", out.stdout, out.stderr);
    assert!(!out.stdout.contains("FAIL"));

    let with_roots = json_of(Query {
        roots: Some("t,-t".into()),
        ..q
    });
    let checks = with_roots["verify"]["checks"].as_array().unwrap();
    assert!(checks.iter().any(|c| c["identity"] == "Bez = N Van N^T"));
    assert_eq!(with_roots["verify"]["passed"], true);
}

#[test]
fn nonsplit_newton_request_names_factor() {
    let out = run(&query("x^3 - 2*x", "new"));
    assert_eq!(out.code, EXIT_INPUT);
    assert!(out.stderr.contains("x^2 - 2"), "{}", out.stderr);
}

#[test]
fn wrong_roots_rejected() {
    let q = Query {
        roots: Some("1,2".into()),
        ..query("x^2 - x", "bez")
    };
    let out = run(&q);
    assert_eq!(out.code, EXIT_INPUT);
    assert!(out.stderr.contains("split data inconsistent"));
}

#[test]
fn all_over_finite_field_skips_signature() {
    let q = Query {
        field: "F7".into(),
        ..query("(x-1)^2*(x+1)", "all")
    };
    let v = json_of(q);
    assert_eq!(v["invariants"]["signature"], "skipped");
    assert!(v["degree"]["skipped"].is_string());
    assert!(v["cauchy"]["skipped"].is_string());
    assert_eq!(v["verify"]["passed"], true);
    assert!(v["new"].is_array());
}

#[test]
fn explicit_degree_over_finite_field_is_an_input_error() {
    let q = Query {
        field: "F5".into(),
        ..query("x^2 - x", "degree")
    };
    assert_eq!(run(&q).code, EXIT_INPUT);
}

#[test]
fn worked_degree_sum_case() {
    let v = json_of(query("(x-1)^2*(x+1)", "a1,degree,cauchy"));
    assert_eq!(v["a1"]["degree_sum"]["decision"], "equal");
    assert_eq!(v["degree"]["degree"], 1);
    assert_eq!(v["cauchy"]["index"], 1);
}

#[test]
fn hurwitz_spot_values() {
    for (expr, expected) in [("x^3 - x", 1), ("x^2 - x", 0), ("x^5", 1), ("x^4", 0), ("x^2+1", 0)] {
        let v = json_of(query(expr, "degree"));
        assert_eq!(v["degree"]["degree"], expected, "{expr}");
    }
}

#[test]
fn input_errors() {
    let out = run(&query("(x/2)+1", "bez"));
    assert_eq!(out.code, EXIT_INPUT);
    assert!(out.stderr.contains("column 3"), "{}", out.stderr);
    assert!(out.stderr.contains("only one top-level /"));

    assert_eq!(run(&query("x^2", "nonsense")).code, EXIT_INPUT);
    assert_eq!(run(&query("3", "bez")).code, EXIT_INPUT);
    assert_eq!(run(&query("1/x", "bez")).code, EXIT_INPUT);
    let bad_field = Query {
        field: "F9".into(),
        ..query("x^2", "bez")
    };
    assert_eq!(run(&bad_field).code, EXIT_INPUT);
}

#[test]
fn output_list_parsing() {
    let plan = parse_outputs("bez, gram:newton,bez,gram:primal").unwrap();
    assert_eq!(
        plan.outputs.iter().map(|o| o.key()).collect::<Vec<_>>(),
        ["bez", "gram:newton", "gram:primal"]
    );
    assert!(!plan.all);
    assert!(parse_outputs("gram:nope").is_err());
    let all = parse_outputs("all").unwrap();
    assert!(all.all && all.outputs.contains(&Output::Verify));
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_bezout-gw");
    let ok = Command::new(bin)
        .args(["x^2 - x", "--outputs", "bez,unstable", "--json"])
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&ok.stdout).unwrap();
    assert_eq!(v["unstable"]["d"], "-1");

    let negative = Command::new(bin).args(["-x^2 + 1", "--outputs", "bez"]).output().unwrap();
    assert_eq!(negative.status.code(), Some(0), "{}", String::from_utf8_lossy(&negative.stderr));

    let bad = Command::new(bin).args(["x^2", "--bogus"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(1));
}
